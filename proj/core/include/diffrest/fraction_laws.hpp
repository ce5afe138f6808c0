#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffrest/errors.hpp"
#include "diffrest/fraction.hpp"
#include "diffrest/report.hpp"
#include "diffrest/rigs.hpp"
#include "diffrest/sampler.hpp"

namespace diffrest {

// Records the inputs of one law instance and any equation that failed on them.
class LawRecorder {
 public:
  template <class Rig>
  typename Rig::value_type in(const Rig& rig, const char* name, typename Rig::value_type v) {
    inputs_.emplace_back(name, rig.show(v));
    return v;
  }

  template <class Rig>
  void eq(const Rig& rig, const typename Rig::value_type& lhs, const typename Rig::value_type& rhs,
          std::string_view label = {}) {
    if (!rig.equal(lhs, rhs)) fail(label, rig.show(lhs), rig.show(rhs));
  }

  template <class Rig>
  void ne(const Rig& rig, const typename Rig::value_type& lhs, const typename Rig::value_type& rhs,
          std::string_view label = {}) {
    if (rig.equal(lhs, rhs)) fail(label, rig.show(lhs), "!= " + rig.show(rhs));
  }

  void error(const std::string& what) { failures_.push_back(Failure{{}, 0, inputs_, what, {}, "error"}); }
  std::vector<Failure> take_failures() { return std::move(failures_); }

 private:
  void fail(std::string_view label, std::string lhs, std::string rhs) {
    std::string verdict = "distinct";
    if (!label.empty()) verdict += ": " + std::string(label);
    failures_.push_back(Failure{{}, 0, inputs_, std::move(lhs), std::move(rhs), std::move(verdict)});
  }

  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<Failure> failures_;
};

template <class R>
struct RigLaw {
  std::string id;
  std::string statement;
  std::function<void(const R&, SplitMix64&, LawRecorder&)> body;
};

// Case i of law k draws from derive_seed(seed, k, i), as for the categorical suites.
template <class R>
SuiteReport run_laws(const R& rig, std::string suite, std::string model, const std::vector<RigLaw<R>>& laws,
                     std::size_t cases, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::move(suite);
  report.model = std::move(model);
  report.seed = seed;
  for (std::size_t k = 0; k < laws.size(); ++k) {
    for (std::size_t i = 0; i < cases; ++i) {
      SplitMix64 rng(derive_seed(seed, k, i));
      LawRecorder rec;
      try {
        laws[k].body(rig, rng, rec);
      } catch (const InvariantViolation&) {
        throw;
      } catch (const Error& e) {
        rec.error(e.what());
      }
      for (auto& f : rec.take_failures()) {
        f.axiom = laws[k].id;
        f.case_index = i;
        report.failures.push_back(std::move(f));
      }
      ++report.cases;
    }
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// A rig endomorphism to feed the Kleisli laws: the identity, or a substitution for polynomial rigs.
template <class R>
std::function<typename R::value_type(const typename R::value_type&)> sample_endomorphism(const R&, SplitMix64&) {
  return [](const typename R::value_type& r) { return r; };
}

inline std::function<Poly(const Poly&)> sample_endomorphism(const PolyRig& rig, SplitMix64& rng) {
  std::vector<Poly> images;
  for (std::size_t k = 0; k < rig.nvars(); ++k) images.push_back(rig.sample(rng));
  const std::size_t nv = rig.nvars();
  return [images = std::move(images), nv](const Poly& p) { return substitute(p.with_nvars(nv), images); };
}

namespace laws {

// Operations on fr(R): unit laws, binary distributivity, the weak zero laws, and independence
// of the representative under the generating relation.
template <UfdRig R>
std::vector<RigLaw<R>> fraction_ops() {
  using F = FracRig<R>;
  return {
      {"FRAC.units", "(0,1) + x = x and (1,1) x = x",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto x = rec.in(fr, "x", fr.sample(rng));
         rec.eq(fr, fr.add(fr.zero(), x), x, "additive unit");
         rec.eq(fr, fr.mul(fr.one(), x), x, "multiplicative unit");
       }},
      {"FRAC.distributive", "x (y + z) = x y + x z",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto x = rec.in(fr, "x", fr.sample(rng));
         const auto y = rec.in(fr, "y", fr.sample(rng));
         const auto z = rec.in(fr, "z", fr.sample(rng));
         rec.eq(fr, fr.mul(x, fr.add(y, z)), fr.add(fr.mul(x, y), fr.mul(x, z)));
       }},
      {"FRAC.weak-zero", "0 0 = 0 and 0 x = 0 x x",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto x = rec.in(fr, "x", fr.sample(rng));
         rec.eq(fr, fr.mul(fr.zero(), fr.zero()), fr.zero(), "0 0");
         rec.eq(fr, fr.mul(fr.zero(), x), fr.mul(fr.zero(), fr.mul(x, x)), "0 x");
       }},
      {"FRAC.well-defined", "+, * and star give equivalent results on (r, a s) and (a r, a^2 s)",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto r = base.sample(rng);
         const auto s = base.sample(rng);
         const auto a = base.sample(rng);
         const auto x = rec.in(fr, "x", typename F::value_type{r, base.mul(a, s)});
         const auto x2 = rec.in(fr, "x expanded", typename F::value_type{base.mul(a, r), base.mul(base.mul(a, a), s)});
         const auto y = rec.in(fr, "y", fr.sample(rng));
         rec.eq(fr, x, x2, "expansion");
         rec.eq(fr, fr.add(x, y), fr.add(x2, y), "sum");
         rec.eq(fr, fr.mul(x, y), fr.mul(x2, y), "product");
         rec.eq(fr, fr.star(x), fr.star(x2), "star");
       }},
  };
}

// The fractional rig axioms for fr(R) and the consequences derived from them.
template <UfdRig R>
std::vector<RigLaw<R>> fractional_rig() {
  using F = FracRig<R>;
  auto one_var = [](auto&& body) {
    return [body](const R& base, SplitMix64& rng, LawRecorder& rec) {
      const F fr(base);
      const auto x = rec.in(fr, "x", fr.sample(rng));
      body(fr, x, rec);
    };
  };
  return {
      {"FRIG.star-unit", "1* = 1",
       [](const R& base, SplitMix64&, LawRecorder& rec) {
         const F fr(base);
         rec.eq(fr, fr.star(fr.one()), fr.one());
       }},
      {"FRIG.triple-star", "x*** = x*",
       one_var([](const F& fr, const auto& x, LawRecorder& rec) {
         rec.eq(fr, fr.star(fr.star(fr.star(x))), fr.star(x));
       })},
      {"FRIG.star-mul", "(x y)* = y* x*",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto x = rec.in(fr, "x", fr.sample(rng));
         const auto y = rec.in(fr, "y", fr.sample(rng));
         rec.eq(fr, fr.star(fr.mul(x, y)), fr.mul(fr.star(y), fr.star(x)));
       }},
      {"FRIG.regular", "x* x x* = x*",
       one_var([](const F& fr, const auto& x, LawRecorder& rec) {
         const auto s = fr.star(x);
         rec.eq(fr, fr.mul(s, fr.mul(x, s)), s);
       })},
      {"FRIG.linear-distributive", "x* x (y + z) = x* x y + z",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto x = rec.in(fr, "x", fr.sample(rng));
         const auto y = rec.in(fr, "y", fr.sample(rng));
         const auto z = rec.in(fr, "z", fr.sample(rng));
         const auto e = fr.mul(fr.star(x), x);
         rec.eq(fr, fr.mul(e, fr.add(y, z)), fr.add(fr.mul(e, y), z));
       }},
      {"FRIG.idempotent", "x x* is idempotent",
       one_var([](const F& fr, const auto& x, LawRecorder& rec) {
         const auto e = fr.mul(x, fr.star(x));
         rec.eq(fr, fr.mul(e, e), e);
       })},
      {"FRIG.self-star", "(x x*)* = x x*",
       one_var([](const F& fr, const auto& x, LawRecorder& rec) {
         const auto e = fr.mul(x, fr.star(x));
         rec.eq(fr, fr.star(e), e);
       })},
      {"FRIG.double-star", "x x* x = x**",
       one_var([](const F& fr, const auto& x, LawRecorder& rec) {
         rec.eq(fr, fr.mul(x, fr.mul(fr.star(x), x)), fr.star(fr.star(x)));
       })},
      {"FRIG.sandwich", "x* x** x* = x*",
       one_var([](const F& fr, const auto& x, LawRecorder& rec) {
         const auto s = fr.star(x);
         rec.eq(fr, fr.mul(s, fr.mul(fr.star(s), s)), s);
       })},
  };
}

// Kleisli triple and monad laws for fr, with rig endomorphisms followed by eta as Kleisli arrows.
template <UfdRig R>
std::vector<RigLaw<R>> kleisli() {
  using F = FracRig<R>;
  using FF = FracRig<F>;
  using V = typename R::value_type;
  auto arrow = [](const R& base, SplitMix64& rng) {
    auto phi = sample_endomorphism(base, rng);
    return [phi, base](const V& r) { return eta(base, phi(r)); };
  };
  return {
      {"KLEISLI.ext-eta", "#(eta) = 1",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto a = rec.in(fr, "a", fr.sample(rng));
         rec.eq(fr, kleisli_ext(base, [&](const V& r) { return eta(base, r); }, a), a);
       }},
      {"KLEISLI.unit", "eta #(f) = f",
       [arrow](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto f = arrow(base, rng);
         const auto r = rec.in(base, "r", base.sample(rng));
         rec.eq(fr, kleisli_ext(base, f, eta(base, r)), f(r));
       }},
      {"KLEISLI.assoc", "#(f) #(g) = #(f #(g))",
       [arrow](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto f = arrow(base, rng);
         const auto g = arrow(base, rng);
         const auto a = rec.in(fr, "a", fr.sample(rng));
         const auto lhs = kleisli_ext(base, g, kleisli_ext(base, f, a));
         const auto fg = [&](const V& r) { return kleisli_ext(base, g, f(r)); };
         rec.eq(fr, lhs, kleisli_ext(base, fg, a));
       }},
      {"KLEISLI.mu-unit", "mu eta = 1 and mu fr(eta) = 1",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto a = rec.in(fr, "a", fr.sample(rng));
         rec.eq(fr, mu(base, eta(fr, a)), a, "mu eta");
         rec.eq(fr, mu(base, fr_map([&](const V& r) { return eta(base, r); }, a)), a, "mu fr(eta)");
       }},
      {"KLEISLI.mu-assoc", "mu mu = mu fr(mu) on fr(fr(fr(R)))",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const FF ffr(fr);
         const FracRig<FF> fffr(ffr);
         const auto a = rec.in(fffr, "a", fffr.sample(rng));
         const auto lhs = mu(base, mu(fr, a));
         const auto rhs = mu(base, fr_map([&](const auto& x) { return mu(base, x); }, a));
         rec.eq(fr, lhs, rhs);
       }},
      {"KLEISLI.mu-formula", "mu((r,s),(p,q)) = (r q^2, s p q)",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const FF ffr(fr);
         const auto a = rec.in(ffr, "a", ffr.sample(rng));
         const auto& [r, s] = a.num;
         const auto& [p, q] = a.den;
         const typename F::value_type expected{base.mul(r, base.mul(q, q)), base.mul(s, base.mul(p, q))};
         rec.eq(fr, mu(base, a), expected);
       }},
  };
}

// fr(R) as an algebra of the monad via nu(r, s) = r s*.
template <UfdRig R>
std::vector<RigLaw<R>> algebra() {
  using F = FracRig<R>;
  using FF = FracRig<F>;
  return {
      {"ALGEBRA.unit", "nu eta = 1",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const auto a = rec.in(fr, "a", fr.sample(rng));
         rec.eq(fr, nu(fr, eta(fr, a)), a);
       }},
      {"ALGEBRA.mult", "nu mu = nu fr(nu) on fr(fr(A)) for A = fr(R)",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const FF ffr(fr);
         const FracRig<FF> fffr(ffr);
         const auto a = rec.in(fffr, "a", fffr.sample(rng));
         const auto lhs = nu(fr, mu(fr, a));
         const auto rhs = nu(fr, fr_map([&](const auto& x) { return nu(fr, x); }, a));
         rec.eq(fr, lhs, rhs);
       }},
      {"ALGEBRA.hom", "nu preserves +, multiplication and star",
       [](const R& base, SplitMix64& rng, LawRecorder& rec) {
         const F fr(base);
         const FF ffr(fr);
         const auto a = rec.in(ffr, "a", ffr.sample(rng));
         const auto b = rec.in(ffr, "b", ffr.sample(rng));
         rec.eq(fr, nu(fr, ffr.add(a, b)), fr.add(nu(fr, a), nu(fr, b)), "sum");
         rec.eq(fr, nu(fr, ffr.mul(a, b)), fr.mul(nu(fr, a), nu(fr, b)), "product");
         rec.eq(fr, nu(fr, ffr.star(a)), fr.star(nu(fr, a)), "star");
       }},
  };
}

}  // namespace laws

inline const std::vector<std::string>& fraction_suite_names() {
  static const std::vector<std::string> names{"FRAC", "FRIG", "KLEISLI", "ALGEBRA"};
  return names;
}

template <UfdRig R>
SuiteReport check_fraction_suite(const R& rig, std::string_view suite, std::size_t cases, std::uint64_t seed) {
  const std::string model = "fr(" + rig.name() + ")";
  if (suite == "FRAC") return run_laws(rig, "FRAC", model, laws::fraction_ops<R>(), cases, seed);
  if (suite == "FRIG") return run_laws(rig, "FRIG", model, laws::fractional_rig<R>(), cases, seed);
  if (suite == "KLEISLI") return run_laws(rig, "KLEISLI", model, laws::kleisli<R>(), cases, seed);
  if (suite == "ALGEBRA") return run_laws(rig, "ALGEBRA", model, laws::algebra<R>(), cases, seed);
  throw Unsupported("unknown fraction suite " + std::string(suite));
}

}  // namespace diffrest
