#pragma once

#include <concepts>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "diffrest/errors.hpp"
#include "diffrest/sampler.hpp"

namespace diffrest {

// A representative (numerator, denominator); equality is the generated equivalence, decided by the rig.
template <class T>
struct Frac {
  T num;
  T den;
};

// Commutative weak rig: binary distributivity only, no nullary law.
template <class R>
concept WeakRig = requires(const R& rig, const typename R::value_type& a, const typename R::value_type& b,
                           SplitMix64& rng) {
  typename R::value_type;
  { rig.zero() } -> std::convertible_to<typename R::value_type>;
  { rig.one() } -> std::convertible_to<typename R::value_type>;
  { rig.add(a, b) } -> std::convertible_to<typename R::value_type>;
  { rig.mul(a, b) } -> std::convertible_to<typename R::value_type>;
  { rig.equal(a, b) } -> std::convertible_to<bool>;
  { rig.sample(rng) } -> std::convertible_to<typename R::value_type>;
  { rig.show(a) } -> std::convertible_to<std::string>;
  { rig.name() } -> std::convertible_to<std::string>;
};

template <class R>
concept FractionalRig = WeakRig<R> && requires(const R& rig, const typename R::value_type& a) {
  { rig.star(a) } -> std::convertible_to<typename R::value_type>;
};

// Rigs with unique factorization: enough structure to canonicalize fractions with gcds.
template <class R>
concept UfdRig = WeakRig<R> && requires(const R& rig, const typename R::value_type& a, const typename R::value_type& b) {
  { rig.gcd(a, b) } -> std::convertible_to<typename R::value_type>;
  { rig.divide_exact(a, b) } -> std::convertible_to<typename R::value_type>;
  { rig.is_unit(a) } -> std::convertible_to<bool>;
  { rig.is_zero(a) } -> std::convertible_to<bool>;
  { rig.radical(a) } -> std::convertible_to<typename R::value_type>;
  // divides both entries by the unit part of the second
  { rig.unit_normalize(a, b) } -> std::convertible_to<std::pair<typename R::value_type, typename R::value_type>>;
};

template <class R>
concept FiniteRig = WeakRig<R> && requires(const R& rig, const typename R::value_type& a) {
  { rig.elements() } -> std::convertible_to<std::vector<typename R::value_type>>;
  { rig.index_of(a) } -> std::convertible_to<std::size_t>;
};

// ---------------------------------------------------------------- canonical forms

// Exhaustively applies (a r, a^2 s) => (r, a s). Per prime p with valuations (v_p(num), v_p(den)) = (i, j)
// the rewrite fires min(i, j - 1) times; each round strips every prime that can still fire once.
template <UfdRig R>
Frac<typename R::value_type> reduce_canonical(const R& rig, Frac<typename R::value_type> a) {
  if (rig.is_zero(a.den)) return {rig.zero(), rig.zero()};
  while (true) {
    auto excess = rig.divide_exact(a.den, rig.radical(a.den));  // primes with multiplicity >= 2 in den
    if (rig.is_unit(excess)) break;
    auto strip = rig.radical(rig.gcd(a.num, excess));
    if (rig.is_unit(strip)) break;
    a.num = rig.divide_exact(a.num, strip);
    a.den = rig.divide_exact(a.den, strip);
  }
  auto [num, den] = rig.unit_normalize(a.num, a.den);
  return {std::move(num), std::move(den)};
}

// a |* r: a = a1...an with each ai dividing a(i+1)...an * r.
template <UfdRig R>
bool iter_divides(const R& rig, typename R::value_type a, const typename R::value_type& r) {
  if (rig.is_zero(a)) return rig.is_zero(r);
  if (rig.is_zero(r)) return true;
  while (!rig.is_unit(a)) {
    auto g = rig.gcd(a, r);
    if (rig.is_unit(g)) return false;
    a = rig.divide_exact(a, g);
  }
  return true;
}

// ---------------------------------------------------------------- fr(R)

namespace detail {

// Equivalence classes of fr(L) for a finite rig L, by closing the generating relation.
template <FiniteRig R>
class FiniteFracClasses {
 public:
  explicit FiniteFracClasses(const R& rig) : elements_(rig.elements()) {
    const std::size_t n = elements_.size();
    parent_.resize(n * n);
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    for (const auto& r : elements_)
      for (const auto& a : elements_)
        for (const auto& s : elements_) {
          const auto lhs = key(rig, r, rig.mul(a, s));
          const auto rhs = key(rig, rig.mul(a, r), rig.mul(rig.mul(a, a), s));
          unite(lhs, rhs);
        }
  }
  std::size_t class_of(const R& rig, const typename R::value_type& num, const typename R::value_type& den) const {
    return find(key(rig, num, den));
  }

 private:
  std::size_t key(const R& rig, const typename R::value_type& num, const typename R::value_type& den) const {
    return rig.index_of(num) * elements_.size() + rig.index_of(den);
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::vector<typename R::value_type> elements_;
  std::vector<std::size_t> parent_;
};

struct NoFracClasses {};

template <class R, bool = FiniteRig<R>>
struct FracClassesFor {
  using type = NoFracClasses;
};
template <class R>
struct FracClassesFor<R, true> {
  using type = FiniteFracClasses<R>;
};

}  // namespace detail

template <WeakRig Base>
class FracRig {
 public:
  using base_type = Base;
  using value_type = Frac<typename Base::value_type>;

  explicit FracRig(Base base) : base_(std::move(base)) {
    if constexpr (FiniteRig<Base>) classes_ = std::make_shared<detail::FiniteFracClasses<Base>>(base_);
  }

  const Base& base() const { return base_; }

  value_type zero() const { return {base_.zero(), base_.one()}; }
  value_type one() const { return {base_.one(), base_.one()}; }
  value_type add(const value_type& a, const value_type& b) const {
    return {base_.add(base_.mul(a.num, b.den), base_.mul(a.den, b.num)), base_.mul(a.den, b.den)};
  }
  value_type mul(const value_type& a, const value_type& b) const {
    return {base_.mul(a.num, b.num), base_.mul(a.den, b.den)};
  }
  value_type star(const value_type& a) const { return {base_.mul(a.den, a.den), base_.mul(a.den, a.num)}; }
  value_type embed(const typename Base::value_type& r) const { return {r, base_.one()}; }

  bool equal(const value_type& a, const value_type& b) const {
    if constexpr (UfdRig<Base>) {
      const auto x = reduce_canonical(base_, a);
      const auto y = reduce_canonical(base_, b);
      return base_.equal(x.num, y.num) && base_.equal(x.den, y.den);
    } else if constexpr (FiniteRig<Base>) {
      return classes_->class_of(base_, a.num, a.den) == classes_->class_of(base_, b.num, b.den);
    } else {
      throw EqualityUndecided("fractions over " + base_.name() + " have no decision procedure");
    }
  }

  value_type sample(SplitMix64& rng) const {
    auto num = base_.sample(rng);
    // mostly nonzero denominators, but (r, 0) must show up too
    auto den = rng.below(12) == 0 ? base_.zero() : base_.sample(rng);
    return {std::move(num), std::move(den)};
  }
  std::string show(const value_type& a) const { return "(" + base_.show(a.num) + ", " + base_.show(a.den) + ")"; }
  std::string name() const { return "fr(" + base_.name() + ")"; }

 private:
  Base base_;
  std::shared_ptr<typename detail::FracClassesFor<Base>::type> classes_;
};

// ---------------------------------------------------------------- the fractional monad

template <WeakRig R>
typename FracRig<R>::value_type eta(const R& rig, const typename R::value_type& r) {
  return {r, rig.one()};
}

// #(f) for f : carrier -> fr(S); `target` is the rig S.
template <WeakRig S, class T, class F>
typename FracRig<S>::value_type kleisli_ext(const S& target, F&& f, const Frac<T>& a) {
  const auto x = f(a.num);
  const auto y = f(a.den);
  return {target.mul(x.num, target.mul(y.den, y.den)), target.mul(x.den, target.mul(y.num, y.den))};
}

// mu = #(identity): fr(fr(X)) -> fr(X)
template <WeakRig R>
typename FracRig<R>::value_type mu(const R& rig, const typename FracRig<FracRig<R>>::value_type& a) {
  return kleisli_ext(rig, [](const auto& v) { return v; }, a);
}

// fr(f) = #(f ; eta): applies f to both entries.
template <class T, class F>
auto fr_map(F&& f, const Frac<T>& a) -> Frac<decltype(f(a.num))> {
  return {f(a.num), f(a.den)};
}

// The algebra map fr(R) -> R of a fractional rig, (r, s) |-> r s*.
template <FractionalRig R>
typename R::value_type nu(const R& rig, const typename FracRig<R>::value_type& a) {
  return rig.mul(a.num, rig.star(a.den));
}

// ---------------------------------------------------------------- star-idempotents and localization

template <FractionalRig R>
class StarIdempotent {
 public:
  StarIdempotent(const R& rig, typename R::value_type e) : value_(std::move(e)) {
    if (!rig.equal(rig.mul(value_, value_), value_)) throw Error("not idempotent: " + rig.show(value_));
    if (!rig.equal(rig.star(value_), value_)) throw Error("not fixed by star: " + rig.show(value_));
  }
  const typename R::value_type& value() const { return value_; }

 private:
  typename R::value_type value_;
};

template <FractionalRig R>
typename R::value_type localize(const R& rig, const StarIdempotent<R>& e, const typename R::value_type& r) {
  return rig.mul(r, e.value());
}

// Elements r with r 0 = 0 among the supplied window of candidates.
template <WeakRig R>
std::vector<typename R::value_type> rig_elements(const R& rig, const std::vector<typename R::value_type>& window) {
  std::vector<typename R::value_type> out;
  for (const auto& r : window)
    if (rig.equal(rig.mul(r, rig.zero()), rig.zero())) out.push_back(r);
  return out;
}

}  // namespace diffrest
