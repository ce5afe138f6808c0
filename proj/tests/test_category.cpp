#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "diffrest/errors.hpp"
#include "diffrest/finpar_model.hpp"
#include "diffrest/rat_model.hpp"
#include "diffrest/suites.hpp"

using namespace diffrest;

namespace {

using Graph = PartialFn::Graph;

PartialFn fn(std::size_t source, std::size_t target, Graph g) { return {FinObj(source), FinObj(target), std::move(g)}; }

// Restriction that also declares the point 0 defined. R.1 to R.3 survive; R.4 does not.
struct LeakyRestriction : FinparModel {
  using FinparModel::FinparModel;
  std::string name() const { return "finpar-leaky"; }
  Map restriction(const Map& f) const {
    Graph g = pf::restriction(f).graph();
    if (!g.empty()) g[0] = 0;
    return PartialFn(f.source(), f.source(), g);
  }
};

// Differential scaled by two; D[1] = pi0 no longer holds.
struct DoubledDifferential : RatModel {
  using RatModel::RatModel;
  Map diff(const Map& f) const {
    const Map d = rat::differential(f);
    return rat::add(d, d);
  }
};

std::set<std::string> failing_axioms(const SuiteReport& r) {
  std::set<std::string> out;
  for (const auto& f : r.failures) out.insert(f.axiom);
  return out;
}

SuiteOptions exhaustive() {
  SuiteOptions opt;
  opt.exhaustive = true;
  return opt;
}

SuiteOptions random_cases(std::size_t cases, std::uint64_t seed) {
  SuiteOptions opt;
  opt.cases = cases;
  opt.seed = seed;
  return opt;
}

}  // namespace

TEST_CASE("enumerating chooser visits every decision sequence once") {
  EnumeratingChooser c;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  do {
    const auto a = c.choose(3), b = c.choose(2);
    CHECK(seen.insert({a, b}).second);
  } while (c.advance());
  CHECK(seen.size() == 6);

  // later decisions may depend on earlier ones
  EnumeratingChooser d;
  std::size_t leaves = 0;
  do {
    if (d.choose(2) == 0) d.choose(3);
    ++leaves;
  } while (d.advance());
  CHECK(leaves == 4);
}

TEST_CASE("seeded streams are reproducible") {
  CHECK(derive_seed(7, 1, 2) == derive_seed(7, 1, 2));
  CHECK(derive_seed(7, 1, 2) != derive_seed(7, 2, 1));
  RandomChooser a(derive_seed(3, 0)), b(derive_seed(3, 0));
  for (int i = 0; i < 100; ++i) CHECK(a.choose(1000) == b.choose(1000));

  const RatModel rat(CoeffRing::Rationals);
  const auto first = check_suite(rat, "LA", random_cases(20, 11));
  const auto second = check_suite(rat, "LA", random_cases(20, 11));
  CHECK(first.cases == second.cases);
  CHECK(first.failures.size() == second.failures.size());
}

TEST_CASE("suite lookup errors") {
  const FinparModel finpar(2);
  CHECK_THROWS_WITH_AS(suite_axioms<FinparModel>("NOPE"), doctest::Contains("unknown suite"), Unsupported);
  CHECK_THROWS_WITH_AS(suite_axioms<FinparModel>("DR"), doctest::Contains("suite unsupported"), Unsupported);
  CHECK_THROWS_WITH_AS(suite_axioms<RatModel>("JOIN"), doctest::Contains("suite unsupported"), Unsupported);
  SuiteOptions only = random_cases(1, 0);
  only.only = "R.9";
  CHECK_THROWS_AS(check_suite(finpar, "R", only), Unsupported);
  SuiteOptions capped = exhaustive();
  capped.exhaustive_limit = 5;
  CHECK_THROWS_AS(check_suite(finpar, "R", capped), Unsupported);
}

TEST_CASE("mutation: a leaky restriction breaks exactly R.4") {
  const LeakyRestriction leaky(2);
  const auto report = check_suite(leaky, "R", exhaustive());
  CHECK(failing_axioms(report) == std::set<std::string>{"R.4"});

  // a single axiom replays the same instances in isolation
  SuiteOptions full = random_cases(40, 5);
  SuiteOptions only = full;
  only.only = "R.4";
  const auto all = check_suite(leaky, "R", full), one = check_suite(leaky, "R", only);
  std::vector<std::size_t> from_all, from_one;
  for (const auto& f : all.failures)
    if (f.axiom == "R.4") from_all.push_back(f.case_index);
  for (const auto& f : one.failures) from_one.push_back(f.case_index);
  CHECK_FALSE(from_one.empty());
  CHECK(from_all == from_one);
  CHECK_FALSE(one.failures.front().inputs.empty());
}

TEST_CASE("mutation: a scaled differential fails DR") {
  const DoubledDifferential doubled(CoeffRing::Rationals);
  const auto report = check_suite(doubled, "DR", random_cases(8, 1));
  CHECK_FALSE(report.passed());
  CHECK(failing_axioms(report).count("DR.3"));
  CHECK(check_suite(RatModel(CoeffRing::Rationals), "DR", random_cases(8, 1)).passed());
}

TEST_CASE("finite partial functions") {
  const auto f = fn(3, 2, {1, -1, 0});
  const auto g = fn(2, 3, {2, -1});
  CHECK(f.str() == "[1 _ 0]");
  CHECK(pf::compose(f, g) == fn(3, 3, {-1, -1, 2}));
  CHECK(pf::restriction(f) == fn(3, 3, {0, -1, 2}));
  CHECK(pf::leq(fn(3, 2, {1, -1, -1}), f));
  CHECK_FALSE(pf::leq(f, fn(3, 2, {1, -1, -1})));
  CHECK(pf::join(fn(3, 2, {1, -1, -1}), fn(3, 2, {-1, -1, 0})) == f);
  CHECK_THROWS_AS(pf::join(fn(1, 2, {0}), fn(1, 2, {1})), IncompatibleJoin);
  CHECK(pf::complement(f, fn(3, 2, {1, -1, -1})) == fn(3, 2, {-1, -1, 0}));
  CHECK_THROWS_AS(fn(2, 2, {0, 2}), Error);
  CHECK(pf::enumerate(FinObj(2), FinObj(2)).size() == 9);
  CHECK(pf::enumerate(FinObj(2), FinObj(1)).size() == 4);
  CHECK(pf::count_maps(FinObj(3), FinObj(3)) == 64);
  const auto z3 = FinObj(Monoid::cyclic(3));
  CHECK(pf::add(PartialFn(FinObj(2), z3, {1, 2}), PartialFn(FinObj(2), z3, {2, -1})) == PartialFn(FinObj(2), z3, {0, -1}));
  CHECK_THROWS_AS(pf::add(f, f), Unsupported);
  CHECK_THROWS_AS(Monoid(2, {0, 1, 0, 0}, 0), InvariantViolation);
}

TEST_CASE("the generic order agrees with table inclusion") {
  const FinparModel model(3);
  const auto all = pf::enumerate(FinObj(2), FinObj(2));
  for (const auto& f : all)
    for (const auto& g : all) {
      CHECK((leq(model, f, g) == Verdict::equal) == pf::leq(f, g));
      bool agree = true;
      for (std::size_t x = 0; x < 2; ++x)
        if (f.defined_at(x) && g.defined_at(x) && f.at(x) != g.at(x)) agree = false;
      CHECK((compat(model, f, g) == Verdict::equal) == agree);
    }
}

TEST_CASE("a join of additive maps need not be additive") {
  const FinparModel model(3);
  const auto z3 = FinObj(Monoid::cyclic(3));
  const PartialFn f(z3, z3, {-1, 1, -1}), g(z3, z3, {-1, -1, 1});
  CHECK(is_additive(model, f) == Verdict::equal);
  CHECK(is_additive(model, g) == Verdict::equal);
  REQUIRE(pf::compat(f, g));
  CHECK(is_additive(model, pf::join(f, g)) == Verdict::distinct);
}

TEST_CASE("finite suites pass exhaustively") {
  const FinparModel model(2);
  for (const char* suite : {"R", "R-lemma", "CR", "LA", "CLA", "JOIN", "ADD-PRED"}) {
    CAPTURE(suite);
    const auto report = check_suite(model, suite, exhaustive());
    CHECK(report.passed());
    CHECK(report.cases > 0);
  }
}

TEST_CASE("zero-unitary probe") {
  CHECK(zero_unitary_probe(FinparModel(3), 300, 4).passed());
  CHECK(zero_unitary_probe(RatModel(CoeffRing::Rationals), 40, 4).passed());
}

TEST_CASE("symbolic suites on rational maps") {
  const RatModel model(CoeffRing::Integers);
  for (const char* suite : {"R", "R-lemma", "CR", "LA", "CLA", "ADD-PRED", "LIN"}) {
    CAPTURE(suite);
    CHECK(check_suite(model, suite, random_cases(15, 3)).passed());
  }
}
