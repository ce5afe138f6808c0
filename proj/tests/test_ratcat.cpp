#include <doctest.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diffrest/errors.hpp"
#include "diffrest/parse.hpp"
#include "diffrest/rat_model.hpp"
#include "diffrest/ratmap.hpp"
#include "diffrest/sampler.hpp"
#include "oracles/expr.hpp"
#include "oracles/linear.hpp"

using namespace diffrest;

namespace {

constexpr auto Z = CoeffRing::Integers;
constexpr auto Q = CoeffRing::Rationals;

RatMap M(const std::string& text, CoeffRing ring = Z) { return parse_map(text, ring); }
Poly P(const char* text, std::size_t nvars = 0, CoeffRing ring = Z) { return parse_poly(text, ring, nvars); }

const char* const kFirst =
    "map 2 -> 3 { 5*x1*x2/x1 ; x1*x2^2/(x1+x2) ; (x1+x2)^2/(3*x2) } | { x1, x1+x2, x2, 3 }";
const char* const kSecond = "map 3 -> 2 { 7*(x1+x3)/(x1*x2) ; x1/1 } | { 4+x3+x1, x1, x2 }";
const char* const kUncleaned =
    "map 2 -> 2 { (105*x1*x2^2 + 7*x1*(x1+x2)^2)*(x1*(x1+x2))^2/(15*x1^4*x2^4*(x1+x2)) ; 5*x1*x2/x1 }"
    " | { x1, x1+x2, x2, 5*x1^3*x2, x1*x2^2*(x1+x2)^2, (15*x1*x2^2 + 12*x1*x2 + x1*(x1+x2)^2)*(3*x2*x1)^2 }";
const char* const kCleanedAsPrinted =
    "map 2 -> 2 { (105*x2^2 + 7*x1*(x1+x2)^2)*(x1+x2)/(15*x1^2*x2^4) ; 5*x2/1 }"
    " | { x1, x1+x2, x2, 5, 3, 15*x2^2 + 12*x2 + (x1+x2)^2 }";
const char* const kCleanedCorrected =
    "map 2 -> 2 { 7*(15*x2^2 + (x1+x2)^2)*(x1+x2)/(15*x1*x2^4) ; 5*x2/1 }"
    " | { x1, x1+x2, x2, 5, 3, 15*x2^2 + 12*x2 + (x1+x2)^2 }";

std::vector<Rational> random_point(SplitMix64& rng, std::size_t n) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) {
    p.emplace_back(rng.between(-12, 12), rng.between(1, 5));
    p.back().canonicalize();
  }
  return p;
}

std::vector<RatMap> sample_maps(const RatModel& model, std::size_t count, std::uint64_t seed, std::size_t n,
                                std::size_t m) {
  std::vector<RatMap> out;
  for (std::size_t i = 0; i < count; ++i) {
    RandomChooser c(derive_seed(seed, i));
    out.push_back(model.sample(c, n, m));
  }
  return out;
}

// Independent semantics: parse the printed map with the expression-tree evaluator.
std::optional<std::vector<Rational>> oracle_eval(const RatMap& f, const std::vector<Rational>& p) {
  const auto tree = oracle::MapExpr::parse(f.str());
  if (!tree.defined_at(p)) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& d : tree.jet(p, std::vector<Rational>(p.size(), 0))) out.push_back(d.re);
  return out;
}

}  // namespace

TEST_CASE("map literals") {
  const RatMap id = M("map 1 -> 1 { x1/1 } | { }");
  CHECK(rat::equal(id, rat::identity(Z, 1)));
  CHECK_THROWS_AS(M("map 1 -> 1 { 1/(x1+1) } | { x1 }"), InvalidRestrictionSet);
  CHECK_THROWS_AS(M("map 2 -> 1 { x3 } | { }"), ArityError);
  CHECK_THROWS_AS(M("map 1 -> 2 { x1 } | { }"), ArityError);
  CHECK_THROWS_AS(M("map 1 -> 1 { x1 } { }"), ParseError);

  SUBCASE("the first composable example needs the constant 3 over the integers") {
    const std::string as_printed =
        "map 2 -> 3 { 5*x1*x2/x1 ; x1*x2^2/(x1+x2) ; (x1+x2)^2/(3*x2) } | { x1, x1+x2, x2 }";
    CHECK_NOTHROW(M(as_printed, Q));
    try {
      M(as_printed, Z);
      FAIL("expected the integer parse to be rejected");
    } catch (const InvalidRestrictionSet& e) {
      CHECK(e.denominator() == P("3*x2").str());
    }
  }

  SUBCASE("printing and parsing round trip") {
    for (auto ring : {Z, Q}) {
      const RatModel model(ring);
      for (const auto& f : sample_maps(model, 60, 3, 2, 2)) CHECK(rat::equal(parse_map(f.str(), ring), f));
    }
  }
}

TEST_CASE("restriction sets") {
  CHECK(rat::membership(P("x1^3*x2"), {P("x1"), P("x2")}));
  CHECK(rat::membership(P("x1", 2), {P("x1*x2")}));
  CHECK_FALSE(rat::membership(P("x1+1"), {P("x1")}));
  CHECK(rat::membership(P("-7"), {P("7")}));
  CHECK(rat::membership(P("2"), {P("4*x1+2")}));  // the closure is factor-closed
  CHECK(rat::restriction_set_equiv({P("x1"), P("x2")}, {P("x1*x2")}));
  CHECK_FALSE(rat::restriction_set_equiv({P("x1-1", 2)}, {P("x2-1", 2)}));
  CHECK(rat::restriction_set_equiv({P("0")}, {P("0"), P("x1")}));
  CHECK(rat::restriction_set_equiv({P("x1^2-1")}, {P("x1+1"), P("x1-1")}));
  const auto normal = rat::normalize_generators({P("x1^2"), P("-x1*x2"), P("6")}, Z, 2);
  CHECK(rat::restriction_set_equiv(normal, {P("x1"), P("x2"), P("6")}));
  std::set<std::string> shown;
  for (const auto& g : normal) shown.insert(g.str());
  CHECK(shown == std::set<std::string>{P("x1", 2).str(), P("x2").str(), P("6", 2).str()});
}

TEST_CASE("structural maps") {
  const RatModel model(Z);
  for (const auto& f : sample_maps(model, 30, 5, 2, 2)) {
    CHECK(rat::equal(rat::compose(rat::identity(Z, 2), f), f));
    CHECK(rat::equal(rat::compose(f, rat::identity(Z, 2)), f));
    CHECK(rat::compose(rat::empty(Z, 1, 2), f).is_empty());
    CHECK(rat::equal(rat::compose(rat::restriction(f), f), f));
    CHECK(rat::equal(rat::add(f, rat::zero(Z, 2, 2)), f));
    CHECK(rat::leq(f, f));
  }
  CHECK(rat::equal(rat::restriction(rat::empty(Z, 2, 3)), rat::empty(Z, 2, 2)));
  CHECK(rat::equal(rat::restriction(rat::identity(Z, 3)), rat::identity(Z, 3)));
  CHECK(rat::equal(rat::compose(rat::proj0(Z, 1, 2), M("map 1 -> 1 { 3*x1 } | { }")),
                   M("map 3 -> 1 { 3*x1 } | { }")));
  CHECK(rat::terminal(Z, 4).m() == 0);
}

TEST_CASE("equality by cross multiplication") {
  CHECK(rat::equal(M("map 1 -> 1 { 2*x1/2 } | { }", Q), M("map 1 -> 1 { x1 } | { }", Q)));
  CHECK(rat::equal(M("map 1 -> 1 { 2*x1/2 } | { 2 }"), M("map 1 -> 1 { x1 } | { 2 }")));
  // over Z the constant 2 is a genuine restriction
  CHECK_FALSE(rat::equal(M("map 1 -> 1 { 2*x1/2 } | { 2 }"), M("map 1 -> 1 { x1 } | { }")));
  CHECK(rat::equal(M("map 1 -> 1 { x1*(x1-1)/(x1-1) } | { x1-1 }"), M("map 1 -> 1 { x1 } | { x1-1 }")));
  CHECK_FALSE(rat::equal(M("map 1 -> 1 { x1 } | { x1-1 }"), M("map 1 -> 1 { x1 } | { }")));
  CHECK(rat::compat(M("map 2 -> 1 { 1 } | { x1-1 }"), M("map 2 -> 1 { 1 } | { x2-1 }")));
  CHECK_FALSE(rat::compat(M("map 1 -> 1 { 1 } | { x1 }"), M("map 1 -> 1 { 2 } | { x1-1 }")));
  CHECK(rat::leq(M("map 1 -> 1 { x1 } | { x1-5 }"), M("map 1 -> 1 { x1 } | { }")));
  CHECK_FALSE(rat::leq(M("map 1 -> 1 { x1 } | { }"), M("map 1 -> 1 { x1 } | { x1-5 }")));
}

TEST_CASE("the worked composite") {
  const RatMap f = M(kFirst), g = M(kSecond);
  const RatMap fg = rat::compose(f, g);
  CHECK(fg.n() == 2);
  CHECK(fg.m() == 2);
  CHECK(rat::equal(fg, M(kUncleaned)));
  CHECK(rat::equal(fg, M(kCleanedCorrected)));
  // the printed cleaned form drops a factor x1 from 105 x1 x2^2; it is a different rational function
  CHECK_FALSE(rat::equal(fg, M(kCleanedAsPrinted)));
  CHECK(rat::restriction_set_equiv(fg.gens(), M(kCleanedAsPrinted).gens()));

  SplitMix64 rng(2024);
  int checked = 0;
  while (checked < 25) {
    const auto p = random_point(rng, 2);
    const auto direct = rat::eval(fg, p);
    const auto inner = rat::eval(f, p);
    const auto chained = inner ? rat::eval(g, *inner) : std::nullopt;
    REQUIRE(direct.has_value() == chained.has_value());
    if (!direct) continue;
    CHECK(*direct == *chained);
    CHECK(*direct == *oracle_eval(M(kCleanedCorrected), p));
    ++checked;
  }
}

TEST_CASE("the worked differential") {
  const RatMap f = M("map 2 -> 2 { 1/x1 ; x1^2/(1+x2) } | { x1, 1+x2 }");
  const RatMap expected =
      M("map 4 -> 2 { -x1/x3^2 ; (2*x3*x1*(x4+1) - x3^2*x2)/(x4+1)^2 } | { x3, 1+x4 }");
  const RatMap d = rat::differential(f);
  CHECK(rat::equal(d, expected));
  CHECK(rat::restriction_set_equiv(rat::restriction(f).gens(), {P("x1", 2), P("1+x2", 2)}));
  CHECK(rat::restriction_set_equiv(d.gens(), {P("x3", 4), P("1+x4", 4)}));
  const auto at = rat::eval(d, {1, 0, 2, 0});
  REQUIRE(at);
  CHECK((*at)[0] == Rational(-1, 4));
  CHECK((*at)[1] == 4);
  CHECK_FALSE(rat::eval(d, {1, 0, 0, 0}));
}

TEST_CASE("evaluation") {
  const RatMap inv = M("map 1 -> 1 { 1/x1 } | { x1 }");
  CHECK_FALSE(rat::eval(inv, {0}));
  CHECK(rat::eval(inv, {2})->at(0) == Rational(1, 2));
  CHECK_FALSE(rat::eval(rat::empty(Z, 1, 1), {3}));
  CHECK_THROWS_AS(rat::eval(inv, {1, 2}), ArityError);

  SUBCASE("agrees with an independent evaluator") {
    const RatModel model(Q);
    SplitMix64 rng(77);
    for (const auto& f : sample_maps(model, 80, 19, 2, 2)) {
      const auto p = random_point(rng, 2);
      const auto mine = rat::eval(f, p), theirs = oracle_eval(f, p);
      REQUIRE(mine.has_value() == theirs.has_value());
      if (mine) CHECK(*mine == *theirs);
    }
  }

  SUBCASE("composition is evaluation in sequence with the same domain") {
    const RatModel model(Q);
    SplitMix64 rng(81);
    const auto fs = sample_maps(model, 40, 23, 2, 2), gs = sample_maps(model, 40, 29, 2, 1);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const RatMap fg = rat::compose(fs[i], gs[i]);
      for (int k = 0; k < 5; ++k) {
        const auto p = random_point(rng, 2);
        const auto inner = rat::eval(fs[i], p);
        const auto chained = inner ? rat::eval(gs[i], *inner) : std::nullopt;
        const auto direct = rat::eval(fg, p);
        REQUIRE(direct.has_value() == chained.has_value());
        if (direct) CHECK(*direct == *chained);
      }
    }
  }
}

TEST_CASE("differential against dual-number evaluation") {
  const RatModel model(Q);
  SplitMix64 rng(91);
  int defined = 0;
  for (const auto& f : sample_maps(model, 80, 37, 2, 2)) {
    const RatMap d = rat::differential(f);
    const auto tree = oracle::MapExpr::parse(f.str());
    for (int k = 0; k < 4; ++k) {
      const auto p = random_point(rng, 2), v = random_point(rng, 2);
      std::vector<Rational> vp = v;
      vp.insert(vp.end(), p.begin(), p.end());
      const auto mine = rat::eval(d, vp);
      REQUIRE(mine.has_value() == tree.defined_at(p));
      if (!mine) continue;
      ++defined;
      const auto jet = tree.jet(p, v);
      for (std::size_t j = 0; j < jet.size(); ++j) CHECK((*mine)[j] == jet[j].eps);
    }
  }
  CHECK(defined > 100);
}

TEST_CASE("compatibility agrees with pointwise agreement") {
  const RatModel model(Q);
  SplitMix64 rng(101);
  std::size_t positives = 0;
  for (std::size_t i = 0; i < 80; ++i) {
    RandomChooser c(derive_seed(55, i));
    RatMap f = model.sample(c, 2, 1), g = model.sample(c, 2, 1);
    if (i % 2 == 0) {  // two restrictions of one map are always compatible
      const RatMap base = model.sample(c, 2, 1);
      f = rat::compose(model.sample_idempotent(c, 2), base);
      g = rat::compose(model.sample_idempotent(c, 2), base);
    }
    const bool symbolic = rat::compat(f, g);
    positives += symbolic;
    bool disagreement = false;
    int common = 0;
    for (int k = 0; k < 30; ++k) {
      const auto p = random_point(rng, 2);
      const auto a = rat::eval(f, p), b = rat::eval(g, p);
      if (!a || !b) continue;
      ++common;
      disagreement = disagreement || *a != *b;
    }
    CAPTURE(f.str());
    CAPTURE(g.str());
    if (symbolic) CHECK_FALSE(disagreement);
    else if (common > 10) CHECK(disagreement);
  }
  CHECK(positives >= 40);
}

TEST_CASE("the join candidate is not stable") {
  const RatMap f = M("map 2 -> 1 { 1 } | { x1-1 }"), g = M("map 2 -> 1 { 1 } | { x2-1 }");
  const RatMap s = M("map 1 -> 2 { x1^2 ; x1^2 } | { }");
  const auto result = rat::candidate_join(f, g, s);
  CHECK(rat::equal(result.candidate, M("map 2 -> 1 { 1 } | { }")));
  REQUIRE(result.stable.has_value());
  CHECK_FALSE(*result.stable);
  CHECK(rat::equal(*result.probe_of_join, M("map 1 -> 1 { 1 } | { }")));
  CHECK(rat::restriction_set_equiv(result.join_of_probes->gens(), {P("x1+1"), P("x1-1")}));
  CHECK(rat::membership(P("x1+1"), result.join_of_probes->gens()));
  CHECK(rat::membership(P("x1-1"), result.join_of_probes->gens()));
  CHECK(rat::equal(rat::compose(s, M("map 2 -> 1 { 1 } | { x1-1 }")), M("map 1 -> 1 { 1 } | { x1+1, x1-1 }")));

  CHECK(rat::equal(rat::candidate_join(f, f).candidate, f));
  const RatMap a = M("map 2 -> 1 { x1 } | { x1 }"), b = M("map 2 -> 1 { x1 } | { x1*x2 }");
  CHECK(rat::equal(rat::candidate_join(a, b).candidate, a));
  CHECK_THROWS_AS(rat::candidate_join(M("map 1 -> 1 { 1 } | { }"), M("map 1 -> 1 { 2 } | { }")), IncompatibleJoin);
}

TEST_CASE("linearity and additivity") {
  const RatMap restricted_double = M("map 1 -> 1 { 2*x1 } | { x1-5 }", Q);
  CHECK(rat::is_linear(restricted_double));
  CHECK(rat::is_additive(restricted_double));
  CHECK_FALSE(rat::is_strongly_additive(restricted_double));
  CHECK_FALSE(rat::is_linear(M("map 1 -> 1 { x1^2 } | { }", Q)));
  CHECK_FALSE(rat::is_additive(M("map 1 -> 1 { x1^2 } | { }", Q)));
  CHECK_FALSE(rat::is_linear(M("map 1 -> 1 { x1+1 } | { }", Q)));
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(rat::is_linear(rat::identity(Q, n)));
    CHECK(rat::is_additive(rat::identity(Q, n)));
    CHECK(rat::is_strongly_additive(rat::identity(Q, n)));
  }

  SUBCASE("closure under the structural operations") {
    const RatModel model(Q);
    for (std::size_t i = 0; i < 40; ++i) {
      RandomChooser c(derive_seed(61, i));
      const RatMap f = oracle::sample_linear(model, c, 2, 2), g = oracle::sample_linear(model, c, 2, 2);
      const RatMap h = oracle::sample_linear(model, c, 2, 1);
      CHECK(rat::is_linear(f));
      CHECK(rat::is_linear(rat::compose(f, h)));
      CHECK(rat::is_linear(rat::add(f, g)));
      CHECK(rat::is_linear(rat::pair(f, h)));
      CHECK(rat::is_linear(model.sample_idempotent(c, 2)));
      CHECK(rat::is_additive(f));
    }
  }
}

TEST_CASE("the differential preserves order and compatibility") {
  const RatModel model(Q);
  for (std::size_t i = 0; i < 40; ++i) {
    RandomChooser c(derive_seed(71, i));
    const RatMap g = model.sample(c, 2, 1);
    const RatMap f = rat::compose(model.sample_idempotent(c, 2), g);
    REQUIRE(rat::leq(f, g));
    CHECK(rat::leq(rat::differential(f), rat::differential(g)));
    const RatMap h = rat::compose(model.sample_idempotent(c, 2), g);
    CHECK(rat::compat(rat::differential(f), rat::differential(h)));
    CHECK(rat::equal(rat::restriction(rat::differential(g)),
                     rat::pair(rat::proj0(Q, 2, 2), rat::compose(rat::proj1(Q, 2, 2), rat::restriction(g)))));
  }
}
