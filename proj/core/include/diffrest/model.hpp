#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "diffrest/sampler.hpp"

namespace diffrest {

// Outcome of an equality test. Models with undecidable equality may answer `unknown`.
enum class Verdict { equal, distinct, unknown };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::distinct: return "distinct";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

inline Verdict verdict_of(bool b) { return b ? Verdict::equal : Verdict::distinct; }

// Conjunction: distinct dominates, then unknown.
inline Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::distinct || b == Verdict::distinct) return Verdict::distinct;
  if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
  return Verdict::equal;
}

// What a sampled object is for: `additive` objects must support add/zero on maps into them.
enum class Role { plain, additive };

// The operations every model provides; Map values are immutable and cheap to copy.
template <class M>
concept RestrictionModel = requires(const M& m, const typename M::Map& f, const typename M::Obj& a, Chooser& c) {
  typename M::Obj;
  typename M::Map;
  { m.name() } -> std::convertible_to<std::string>;
  { m.dom(f) } -> std::convertible_to<typename M::Obj>;
  { m.cod(f) } -> std::convertible_to<typename M::Obj>;
  { m.identity(a) } -> std::convertible_to<typename M::Map>;
  { m.compose(f, f) } -> std::convertible_to<typename M::Map>;
  { m.restriction(f) } -> std::convertible_to<typename M::Map>;
  { m.equal(f, f) } -> std::same_as<Verdict>;
  { m.show(f) } -> std::convertible_to<std::string>;
  { m.show_object(a) } -> std::convertible_to<std::string>;
  { m.sample_object(c, Role::plain) } -> std::convertible_to<typename M::Obj>;
  { m.sample(c, a, a) } -> std::convertible_to<typename M::Map>;
};

template <class M>
concept CartesianModel = RestrictionModel<M> && requires(const M& m, const typename M::Map& f,
                                                         const typename M::Obj& a) {
  { m.product(a, a) } -> std::convertible_to<typename M::Obj>;
  { m.terminal() } -> std::convertible_to<typename M::Obj>;
  { m.pair(f, f) } -> std::convertible_to<typename M::Map>;
  { m.proj0(a, a) } -> std::convertible_to<typename M::Map>;
  { m.proj1(a, a) } -> std::convertible_to<typename M::Map>;
  { m.bang(a) } -> std::convertible_to<typename M::Map>;
};

template <class M>
concept AdditiveModel = RestrictionModel<M> && requires(const M& m, const typename M::Map& f,
                                                        const typename M::Obj& a) {
  { m.add(f, f) } -> std::convertible_to<typename M::Map>;
  { m.zero(a, a) } -> std::convertible_to<typename M::Map>;
};

template <class M>
concept EmptyModel = RestrictionModel<M> && requires(const M& m, const typename M::Obj& a) {
  { m.empty(a, a) } -> std::convertible_to<typename M::Map>;  // the nowhere-defined map
};

template <class M>
concept JoinModel = EmptyModel<M> && requires(const M& m, const typename M::Map& f) {
  { m.join(f, f) } -> std::convertible_to<typename M::Map>;  // of a compatible pair
};

template <class M>
concept DifferentialModel = CartesianModel<M> && AdditiveModel<M> && requires(const M& m, const typename M::Map& f) {
  { m.diff(f) } -> std::convertible_to<typename M::Map>;  // direction in the first factor
};

template <class M>
concept ClassicalModel = EmptyModel<M> && requires(const M& m, const typename M::Map& f) {
  { m.complement(f, f) } -> std::convertible_to<typename M::Map>;  // f minus g, for g <= f
};

template <class M>
concept HasIdempotentSampler = RestrictionModel<M> && requires(const M& m, Chooser& c, const typename M::Obj& a) {
  { m.sample_idempotent(c, a) } -> std::convertible_to<typename M::Map>;
};

template <class M>
concept HasCompatibleSampler = RestrictionModel<M> && requires(const M& m, Chooser& c, const typename M::Obj& a) {
  { m.sample_compatible(c, a, a) } -> std::convertible_to<std::pair<typename M::Map, typename M::Map>>;
};

// Generic derived notions, computed from the model's own operations.

template <RestrictionModel M>
Verdict leq(const M& m, const typename M::Map& f, const typename M::Map& g) {
  return m.equal(m.compose(m.restriction(f), g), f);
}

template <RestrictionModel M>
Verdict compat(const M& m, const typename M::Map& f, const typename M::Map& g) {
  return m.equal(m.compose(m.restriction(f), g), m.compose(m.restriction(g), f));
}

template <RestrictionModel M>
Verdict is_total(const M& m, const typename M::Map& f) {
  return m.equal(m.restriction(f), m.identity(m.dom(f)));
}

template <RestrictionModel M>
typename M::Map sample_idempotent(const M& m, Chooser& c, const typename M::Obj& a) {
  if constexpr (HasIdempotentSampler<M>) {
    return m.sample_idempotent(c, a);
  } else {
    const auto b = m.sample_object(c, Role::plain);
    return m.restriction(m.sample(c, a, b));
  }
}

// Two compatible parallel maps. Without a dedicated sampler both are restrictions of one map.
template <RestrictionModel M>
std::pair<typename M::Map, typename M::Map> sample_compatible(const M& m, Chooser& c, const typename M::Obj& a,
                                                              const typename M::Obj& b) {
  if constexpr (HasCompatibleSampler<M>) {
    return m.sample_compatible(c, a, b);
  } else {
    const auto h = m.sample(c, a, b);
    auto f = m.compose(sample_idempotent(m, c, a), h);
    auto g = m.compose(sample_idempotent(m, c, a), h);
    return {std::move(f), std::move(g)};
  }
}

// f x g = <pi0 f, pi1 g>
template <CartesianModel M>
typename M::Map times(const M& m, const typename M::Map& f, const typename M::Map& g) {
  const auto a = m.dom(f);
  const auto b = m.dom(g);
  return m.pair(m.compose(m.proj0(a, b), f), m.compose(m.proj1(a, b), g));
}

// The canonical monoid maps on an object: (pi0 + pi1) : A x A -> A and 0 : 1 -> A.
template <class M>
  requires CartesianModel<M> && AdditiveModel<M>
typename M::Map plus_map(const M& m, const typename M::Obj& a) {
  return m.add(m.proj0(a, a), m.proj1(a, a));
}

template <class M>
  requires CartesianModel<M> && AdditiveModel<M>
struct AdditivitySides {
  typename M::Map sum_then_f;  // (pi0 + pi1) f
  typename M::Map f_then_sum;  // pi0 f + pi1 f
  typename M::Map zero_then_f;
  typename M::Map zero_map;
};

template <class M>
  requires CartesianModel<M> && AdditiveModel<M>
AdditivitySides<M> additivity_sides(const M& m, const typename M::Map& f) {
  const auto a = m.dom(f);
  const auto b = m.cod(f);
  const auto p0 = m.proj0(a, a);
  const auto p1 = m.proj1(a, a);
  const auto one = m.terminal();
  return {m.compose(m.add(p0, p1), f), m.add(m.compose(p0, f), m.compose(p1, f)),
          m.compose(m.zero(one, a), f), m.zero(one, b)};
}

// Additive: (pi0 + pi1) f compatible with pi0 f + pi1 f, and 0 f compatible with 0.
template <class M>
  requires CartesianModel<M> && AdditiveModel<M>
Verdict is_additive(const M& m, const typename M::Map& f) {
  const auto s = additivity_sides(m, f);
  const Verdict first = compat(m, s.sum_then_f, s.f_then_sum);
  if (first == Verdict::distinct) return first;
  return both(first, compat(m, s.zero_then_f, s.zero_map));
}

// Strongly additive: pi0 f + pi1 f <= (pi0 + pi1) f, and 0 f = 0.
template <class M>
  requires CartesianModel<M> && AdditiveModel<M>
Verdict is_strongly_additive(const M& m, const typename M::Map& f) {
  const auto s = additivity_sides(m, f);
  const Verdict first = leq(m, s.f_then_sum, s.sum_then_f);
  if (first == Verdict::distinct) return first;
  return both(first, m.equal(s.zero_then_f, s.zero_map));
}

template <DifferentialModel M>
Verdict is_linear(const M& m, const typename M::Map& f) {
  const auto a = m.dom(f);
  return compat(m, m.diff(f), m.compose(m.proj0(a, a), f));
}

}  // namespace diffrest
