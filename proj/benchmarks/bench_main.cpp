#include <benchmark/benchmark.h>

#include <vector>

#include "diffrest/classical.hpp"
#include "diffrest/finpar_model.hpp"
#include "diffrest/join_completion.hpp"
#include "diffrest/parse.hpp"
#include "diffrest/rat_model.hpp"
#include "diffrest/suites.hpp"

using namespace diffrest;

namespace {

std::vector<RatMap> sampled(std::size_t n, std::size_t m, std::uint64_t seed) {
  const RatModel model(CoeffRing::Rationals);
  std::vector<RatMap> out;
  for (std::size_t i = 0; i < 64; ++i) {
    RandomChooser c(derive_seed(seed, i));
    out.push_back(model.sample(c, n, m));
  }
  return out;
}

void BM_PolyGcd(benchmark::State& state) {
  const RatModel model(CoeffRing::Integers);
  std::vector<std::pair<Poly, Poly>> pairs;
  for (std::size_t i = 0; i < 32; ++i) {
    RandomChooser c(derive_seed(1, i));
    const Poly common = model.sample_poly(c, 2, false);
    pairs.emplace_back(common * model.sample_poly(c, 2, true), common * model.sample_poly(c, 2, true));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(poly_gcd(a, b));
  }
}
BENCHMARK(BM_PolyGcd);

void BM_RatCompose(benchmark::State& state) {
  const auto fs = sampled(2, 2, 2), gs = sampled(2, 2, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % fs.size();
    benchmark::DoNotOptimize(rat::compose(fs[k], gs[k]));
  }
}
BENCHMARK(BM_RatCompose);

void BM_RatDifferential(benchmark::State& state) {
  const auto fs = sampled(2, 2, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rat::differential(fs[i++ % fs.size()]));
}
BENCHMARK(BM_RatDifferential);

void BM_RatEqual(benchmark::State& state) {
  const auto fs = sampled(2, 1, 5);
  std::vector<RatMap> expanded;
  for (const auto& f : fs) expanded.push_back(rat::compose(rat::restriction(f), f));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % fs.size();
    benchmark::DoNotOptimize(rat::equal(fs[k], expanded[k]));
  }
}
BENCHMARK(BM_RatEqual);

void BM_ClEqualFinpar(benchmark::State& state) {
  const ClModel<FinparModel> cl(FinparModel(3));
  std::vector<std::pair<ClMap<FinObj, PartialFn>, ClMap<FinObj, PartialFn>>> pairs;
  for (std::size_t i = 0; i < 64; ++i) {
    RandomChooser c(derive_seed(6, i));
    const auto a = cl.sample_object(c, Role::plain), b = cl.sample_object(c, Role::plain);
    const auto x = cl.sample(c, a, b);
    pairs.emplace_back(x, cl.break_along(x, cl.base().sample_idempotent(c, a)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(cl.equal(x, y));
  }
}
BENCHMARK(BM_ClEqualFinpar);

void BM_ClEqualGerm(benchmark::State& state) {
  const JnModel<RatModel> jn(RatModel(CoeffRing::Rationals));
  const ClModel<JnModel<RatModel>> cl(jn);
  const auto unit = [&](const char* text) { return cl.of_base(jn.of_base(parse_map(text, CoeffRing::Rationals))); };
  const auto germ = cl.complement(unit("map 1 -> 1 { 2*x1 } | { }"), unit("map 1 -> 1 { 2*x1 } | { x1-5 }"));
  const auto other = cl.compose(unit("map 1 -> 1 { x1 } | { x1-7 }"), germ);
  for (auto _ : state) benchmark::DoNotOptimize(cl.equal(germ, other));
}
BENCHMARK(BM_ClEqualGerm);

void BM_FinparExhaustiveR(benchmark::State& state) {
  const FinparModel model(static_cast<std::size_t>(state.range(0)));
  SuiteOptions opt;
  opt.exhaustive = true;
  for (auto _ : state) benchmark::DoNotOptimize(check_suite(model, "R", opt).cases);
}
BENCHMARK(BM_FinparExhaustiveR)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
