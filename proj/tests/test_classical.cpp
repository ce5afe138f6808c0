#include <doctest.h>

#include <string>
#include <vector>

#include "diffrest/classical.hpp"
#include "diffrest/errors.hpp"
#include "diffrest/finpar_model.hpp"
#include "diffrest/join_completion.hpp"
#include "diffrest/parse.hpp"
#include "diffrest/rat_model.hpp"
#include "diffrest/suites.hpp"

using namespace diffrest;

namespace {

using CF = ClModel<FinparModel>;
using JF = JnModel<FinparModel>;
using CJF = ClModel<JF>;
using JR = JnModel<RatModel>;
using CJR = ClModel<JR>;

const FinObj three(3);

PartialFn fn(std::size_t n, PartialFn::Graph g) { return {FinObj(n), FinObj(n), std::move(g)}; }

SuiteOptions cases(std::size_t n, std::uint64_t seed) {
  SuiteOptions opt;
  opt.cases = n;
  opt.seed = seed;
  return opt;
}

RatMap M(const char* text) { return parse_map(text, CoeffRing::Rationals); }

}  // namespace

TEST_CASE("breaking a map along an idempotent leaves it unchanged") {
  const CF cl(FinparModel(3));
  for (std::size_t i = 0; i < 300; ++i) {
    RandomChooser c(derive_seed(13, i));
    const auto a = cl.sample_object(c, Role::plain), b = cl.sample_object(c, Role::plain);
    const auto x = cl.sample(c, a, b);
    const auto e = cl.base().sample_idempotent(c, a);
    const auto broken = cl.break_along(x, e);
    CHECK(cl_denote_finpar(broken) == cl_denote_finpar(x));
    CHECK(cl.equal(broken, x) == Verdict::equal);
    // the same as precomposing with the partition (e, {}) u (1, e) of the identity
    const auto partition = cl.from_pieces(a, a, {{e, pf::empty(a, a)}, {pf::identity(a), e}});
    CHECK(cl.equal(partition, cl.identity(a)) == Verdict::equal);
    CHECK(cl.equal(cl.compose(partition, x), x) == Verdict::equal);
  }
  CHECK_THROWS_AS(cl.break_along(cl.identity(three), fn(3, {1, -1, -1})), Error);
}

TEST_CASE("pieces with f' = f collapse") {
  const CF cl(FinparModel(3));
  const auto f = fn(3, {0, 2, -1});
  CHECK(cl.from_pieces(three, three, {{f, f}}).pieces.empty());
  CHECK(cl.equal(cl.from_pieces(three, three, {{f, f}}), cl.empty(three, three)) == Verdict::equal);
  CHECK_THROWS_AS(cl.from_pieces(three, three, {{fn(3, {0, -1, -1}), f}}), Error);
  CHECK_THROWS_AS(cl.from_pieces(three, three, {{f, pf::empty(three, three)}, {f, fn(3, {0, -1, -1})}}),
                  IncompatibleJoin);
}

TEST_CASE("refinement along two idempotents of the free completion") {
  const JF jn(FinparModel(3));
  const CJF cl(jn);
  const auto e1 = jn.of_base(fn(3, {0, 1, -1})), e2 = jn.of_base(fn(3, {-1, 1, 2}));
  const auto x = cl.of_base(e1), y = cl.of_base(e2);
  const auto atoms = cl.atoms(three, {&x, &y});
  // e1 e2, e1 minus e2, e2 minus e1, and the part outside the join of e1 and e2
  REQUIRE(atoms.size() == 4);
  auto cover = cl.empty(three, three);
  for (const auto& atom : atoms) cover = cl.join_disjoint(cover, cl.from_pieces(three, three, {atom}));
  CHECK(cl.equal(cover, cl.identity(three)) == Verdict::equal);
  // in the free completion e1 v e2 is not the identity, so the last atom is not empty
  CHECK(jn.equal(jn.join(e1, e2), jn.identity(three)) == Verdict::distinct);
}

TEST_CASE("relative complements") {
  const CF cl(FinparModel(3));
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 400; ++i) {
    RandomChooser c(derive_seed(29, i));
    const auto a = cl.sample_object(c, Role::plain), b = cl.sample_object(c, Role::plain);
    const auto x = cl.sample(c, a, b);
    const auto y = cl.compose(cl.sample_idempotent(c, a), x);
    REQUIRE(leq(cl, y, x) == Verdict::equal);
    const auto rest = cl.complement(x, y);
    CHECK(cl_denote_finpar(rest) == pf::complement(cl_denote_finpar(x), cl_denote_finpar(y)));
    CHECK(cl.equal(cl.join_disjoint(rest, y), x) == Verdict::equal);
    CHECK(cl.equal(cl.complement(x, x), cl.empty(a, b)) == Verdict::equal);
    CHECK(cl.equal(cl.complement(x, cl.empty(a, b)), x) == Verdict::equal);
    ++checked;
  }
  CHECK(checked == 400);
  CHECK_THROWS_AS(cl.complement(cl.of_base(fn(3, {0, -1, -1})), cl.of_base(fn(3, {0, 1, -1}))), Error);
}

TEST_CASE("the denotation is a functor") {
  const CF cl(FinparModel(3));
  for (std::size_t i = 0; i < 300; ++i) {
    RandomChooser c(derive_seed(31, i));
    const auto a = cl.sample_object(c, Role::plain), b = cl.sample_object(c, Role::plain),
               d = cl.sample_object(c, Role::plain);
    const auto x = cl.sample(c, a, b), y = cl.sample(c, b, d);
    CHECK(cl_denote_finpar(cl.compose(x, y)) == pf::compose(cl_denote_finpar(x), cl_denote_finpar(y)));
    CHECK(cl_denote_finpar(cl.restriction(x)) == pf::restriction(cl_denote_finpar(x)));
    CHECK((cl.equal(x, cl.of_base(cl_denote_finpar(x))) == Verdict::equal));
  }
}

TEST_CASE("the unit preserves the differential and linearity") {
  const JR jn(RatModel(CoeffRing::Rationals));
  const CJR cl(jn);
  const auto unit = [&](const RatMap& f) { return cl.of_base(jn.of_base(f)); };
  for (const char* text : {"map 1 -> 1 { x1^2 } | { x1-1 }", "map 2 -> 1 { x1*x2/(x1+1) } | { x1+1 }",
                           "map 1 -> 2 { 1/x1 ; x1 } | { x1 }"}) {
    CAPTURE(text);
    const RatMap f = M(text);
    CHECK(cl.equal(cl.diff(unit(f)), unit(rat::differential(f))) == Verdict::equal);
  }
  const RatMap linear = M("map 1 -> 1 { 2*x1 } | { x1-5 }");
  CHECK(is_linear(cl, unit(linear)) == Verdict::equal);
  CHECK(is_linear(jn, jn.of_base(linear)) == Verdict::equal);
  CHECK(is_linear(cl, unit(M("map 1 -> 1 { x1^2 } | { }"))) != Verdict::equal);
  CHECK(is_additive(cl, unit(linear)) == Verdict::equal);
}

TEST_CASE("germs of a linear map") {
  const JR jn(RatModel(CoeffRing::Rationals));
  const CJR cl(jn);
  const auto unit = [&](const RatMap& f) { return cl.of_base(jn.of_base(f)); };
  const RatMap total = M("map 1 -> 1 { 2*x1 } | { }");
  const RatMap punctured = M("map 1 -> 1 { 2*x1 } | { x1-5 }");
  const auto germ = cl.complement(unit(total), unit(punctured));
  REQUIRE(germ.pieces.size() == 1);
  CHECK(jn.equal(germ.pieces[0].f, jn.of_base(total)) == Verdict::equal);
  CHECK(jn.equal(germ.pieces[0].fprime, jn.of_base(punctured)) == Verdict::equal);
  CHECK(cl.equal(germ, germ) == Verdict::equal);
  // restricting away from the point 5 leaves nothing
  const auto away = unit(M("map 1 -> 1 { x1 } | { x1-5 }"));
  CHECK(cl.equal(cl.compose(away, germ), cl.empty(1, 1)) == Verdict::equal);
  // a second neighbourhood of 5; the free completion cannot see that the two opens cover the line,
  // so equality is not established
  const auto other = unit(M("map 1 -> 1 { x1 } | { x1-7 }"));
  CHECK(cl.equal(cl.compose(other, germ), germ) == Verdict::unknown);
  CHECK(cl.equal(cl.compose(unit(total), germ), cl.compose(unit(M("map 1 -> 1 { 2*x1 } | { }")), germ)) ==
        Verdict::equal);
}

TEST_CASE("suites on the classical completion of finite partial functions") {
  const CF cl(FinparModel(3));
  for (const char* suite : {"R", "R-lemma", "CR", "LA", "CL-ORACLE"}) {
    CAPTURE(suite);
    CHECK(check_suite(cl, suite, cases(150, 17)).passed());
  }
}

TEST_CASE("differential suite on the classical completion of rational maps") {
  const CJR cl(JR(RatModel(CoeffRing::Rationals)));
  const auto report = check_suite(cl, "DR", cases(3, 5));
  CHECK(report.passed());
}
