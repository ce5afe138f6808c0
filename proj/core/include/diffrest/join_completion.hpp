#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffrest/errors.hpp"
#include "diffrest/harness.hpp"
#include "diffrest/model.hpp"

namespace diffrest {

// A finitely generated down-closed set of parallel base maps, stored as an antichain of generators.
// The empty generator list is the nowhere-defined map.
template <class Obj, class BaseMap>
struct JnMap {
  Obj dom;
  Obj cod;
  std::vector<BaseMap> gens;
};

struct JnSampleBounds {
  std::size_t max_generators = 2;
};

// The join completion Jn(X). Only finite joins are represented.
//
// Generators equal to the base's own nowhere-defined map are dropped during normalization, so
// the down-closure of the base empty map and the empty down-set are identified.
template <RestrictionModel Base>
class JnModel {
 public:
  using Obj = typename Base::Obj;
  using BaseMap = typename Base::Map;
  using Map = JnMap<Obj, BaseMap>;

  explicit JnModel(Base base, JnSampleBounds bounds = {}) : base_(std::move(base)), bounds_(bounds) {}

  const Base& base() const { return base_; }
  std::string name() const { return "Jn(" + base_.name() + ")"; }

  Map of_base(const BaseMap& f) const { return make(base_.dom(f), base_.cod(f), {f}); }

  // Builds a map from arbitrary generators: checks pairwise compatibility, then normalizes.
  Map from_generators(const Obj& a, const Obj& b, std::vector<BaseMap> gens) const {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      check_shape(gens[i], a, b);
      for (std::size_t j = i + 1; j < gens.size(); ++j) require_compatible(gens[i], gens[j]);
    }
    return make(a, b, std::move(gens));
  }

  Obj dom(const Map& f) const { return f.dom; }
  Obj cod(const Map& f) const { return f.cod; }
  Map identity(const Obj& a) const { return of_base(base_.identity(a)); }

  Map compose(const Map& f, const Map& g) const {
    std::vector<BaseMap> out;
    out.reserve(f.gens.size() * g.gens.size());
    for (const auto& x : f.gens)
      for (const auto& y : g.gens) out.push_back(base_.compose(x, y));
    return make(f.dom, g.cod, std::move(out));
  }

  Map restriction(const Map& f) const {
    return pointwise(f.dom, f.dom, f.gens, [&](const BaseMap& x) { return base_.restriction(x); });
  }

  // Mutual domination of the generator sets.
  Verdict equal(const Map& f, const Map& g) const {
    if (!(f.dom == g.dom) || !(f.cod == g.cod)) return Verdict::distinct;
    return both(dominated(f.gens, g.gens), dominated(g.gens, f.gens));
  }

  std::string show(const Map& f) const {
    if (f.gens.empty()) return "{} : " + base_.show_object(f.dom) + " -> " + base_.show_object(f.cod);
    std::string out = "{";
    for (std::size_t i = 0; i < f.gens.size(); ++i) {
      if (i) out += ", ";
      out += base_.show(f.gens[i]);
    }
    return out + "}";
  }
  std::string show_object(const Obj& a) const { return base_.show_object(a); }

  Map empty(const Obj& a, const Obj& b) const { return Map{a, b, {}}; }

  // Union of two compatible down-sets; IncompatibleJoin when some pair of generators disagrees.
  Map join(const Map& f, const Map& g) const {
    if (!(f.dom == g.dom) || !(f.cod == g.cod)) throw ArityError("join of maps with different types");
    for (const auto& x : f.gens)
      for (const auto& y : g.gens) require_compatible(x, y);
    std::vector<BaseMap> all = f.gens;
    all.insert(all.end(), g.gens.begin(), g.gens.end());
    return make(f.dom, f.cod, std::move(all));
  }

  Map join(const Obj& a, const Obj& b, const std::vector<Map>& family) const {
    Map acc = empty(a, b);
    for (const auto& f : family) acc = join(acc, f);
    return acc;
  }

  // True when f lies in the down-closure of g's generators.
  Verdict member(const BaseMap& f, const Map& g) const {
    if (is_nowhere(f)) return Verdict::equal;
    return dominated({f}, g.gens);
  }

  Obj product(const Obj& a, const Obj& b) const
    requires CartesianModel<Base>
  {
    return base_.product(a, b);
  }
  Obj terminal() const
    requires CartesianModel<Base>
  {
    return base_.terminal();
  }
  Map pair(const Map& f, const Map& g) const
    requires CartesianModel<Base>
  {
    std::vector<BaseMap> out;
    for (const auto& x : f.gens)
      for (const auto& y : g.gens) out.push_back(base_.pair(x, y));
    return make(f.dom, base_.product(f.cod, g.cod), std::move(out));
  }
  Map proj0(const Obj& a, const Obj& b) const
    requires CartesianModel<Base>
  {
    return of_base(base_.proj0(a, b));
  }
  Map proj1(const Obj& a, const Obj& b) const
    requires CartesianModel<Base>
  {
    return of_base(base_.proj1(a, b));
  }
  Map bang(const Obj& a) const
    requires CartesianModel<Base>
  {
    return of_base(base_.bang(a));
  }

  Map add(const Map& f, const Map& g) const
    requires AdditiveModel<Base>
  {
    std::vector<BaseMap> out;
    for (const auto& x : f.gens)
      for (const auto& y : g.gens) out.push_back(base_.add(x, y));
    return make(f.dom, f.cod, std::move(out));
  }
  Map zero(const Obj& a, const Obj& b) const
    requires AdditiveModel<Base>
  {
    return of_base(base_.zero(a, b));
  }

  Map diff(const Map& f) const
    requires DifferentialModel<Base>
  {
    const Obj d = base_.product(f.dom, f.dom);
    return pointwise(d, f.cod, f.gens, [&](const BaseMap& x) { return base_.diff(x); });
  }

  Obj sample_object(Chooser& c, Role role) const { return base_.sample_object(c, role); }

  // Up to max_generators restrictions of one base map, so the generators are compatible by construction.
  Map sample(Chooser& c, const Obj& a, const Obj& b) const {
    if (c.coin(20)) return empty(a, b);
    const BaseMap h = base_.sample(c, a, b);
    const std::size_t k = 1 + c.choose(bounds_.max_generators);
    if (k == 1 && c.coin(2)) return of_base(h);
    std::vector<BaseMap> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(base_.compose(diffrest::sample_idempotent(base_, c, a), h));
    return make(a, b, std::move(gens));
  }

  Map sample_idempotent(Chooser& c, const Obj& a) const {
    const std::size_t k = 1 + c.choose(bounds_.max_generators);
    std::vector<BaseMap> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(diffrest::sample_idempotent(base_, c, a));
    return make(a, a, std::move(gens));
  }

 private:
  void check_shape(const BaseMap& f, const Obj& a, const Obj& b) const {
    if (!(base_.dom(f) == a) || !(base_.cod(f) == b)) throw ArityError("generator has the wrong type");
  }

  void require_compatible(const BaseMap& x, const BaseMap& y) const {
    const Verdict v = compat(base_, x, y);
    if (v == Verdict::distinct)
      throw IncompatibleJoin("incompatible generators " + base_.show(x) + " and " + base_.show(y));
    if (v == Verdict::unknown) throw EqualityUndecided("compatibility of join generators");
  }

  // Every element of xs lies below some element of ys.
  Verdict dominated(const std::vector<BaseMap>& xs, const std::vector<BaseMap>& ys) const {
    Verdict all = Verdict::equal;
    for (const auto& x : xs) {
      Verdict some = Verdict::distinct;
      for (const auto& y : ys) {
        const Verdict v = leq(base_, x, y);
        if (v == Verdict::equal) {
          some = v;
          break;
        }
        if (v == Verdict::unknown) some = v;
      }
      all = both(all, some);
      if (all == Verdict::distinct) return all;
    }
    return all;
  }

  template <class F>
  Map pointwise(const Obj& a, const Obj& b, const std::vector<BaseMap>& gens, F&& op) const {
    std::vector<BaseMap> out;
    out.reserve(gens.size());
    for (const auto& x : gens) out.push_back(op(x));
    return make(a, b, std::move(out));
  }

  bool is_nowhere(const BaseMap& f) const {
    if constexpr (EmptyModel<Base>) {
      return base_.equal(f, base_.empty(base_.dom(f), base_.cod(f))) == Verdict::equal;
    } else {
      return false;
    }
  }

  // Drops nowhere-defined and dominated generators, then sorts by display for a stable order.
  Map make(const Obj& a, const Obj& b, std::vector<BaseMap> gens) const {
    std::vector<BaseMap> kept;
    for (auto& g : gens) {
      if (is_nowhere(g)) continue;
      bool below = false;
      for (const auto& k : kept)
        if (leq(base_, g, k) == Verdict::equal) {
          below = true;
          break;
        }
      if (below) continue;
      std::erase_if(kept, [&](const BaseMap& k) { return leq(base_, k, g) == Verdict::equal; });
      kept.push_back(std::move(g));
    }
    if (kept.size() > 1) {
      std::vector<std::pair<std::string, BaseMap>> keyed;
      for (auto& k : kept) keyed.emplace_back(base_.show(k), std::move(k));
      std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      kept.clear();
      for (auto& [key, k] : keyed) kept.push_back(std::move(k));
    }
    return Map{a, b, std::move(kept)};
  }

  Base base_;
  JnSampleBounds bounds_;
};

template <RestrictionModel Base>
typename JnModel<Base>::Map jn_of_base(const JnModel<Base>& m, const typename Base::Map& f) {
  return m.of_base(f);
}

namespace suites {

// The down-closure lemma and its analogues: an operation applied to elements of down-closures
// lands in the down-closure of the operation applied to generators.
template <RestrictionModel Base>
std::vector<Axiom<JnModel<Base>>> down_closure() {
  using M = JnModel<Base>;
  using R = Recorder<M>;
  using BaseMap = typename Base::Map;
  // A random element of the down-closure of f: a restriction of one of its generators.
  auto below = [](const M& m, Chooser& c, const typename M::Map& f) -> std::optional<BaseMap> {
    if (f.gens.empty()) return std::nullopt;
    const auto& g = f.gens[c.choose(f.gens.size())];
    return m.base().compose(diffrest::sample_idempotent(m.base(), c, f.dom), g);
  };
  auto lands = [](const M& m, R& r, const std::optional<BaseMap>& x, const typename M::Map& target,
                  std::string_view label) {
    if (x) r.holds(m.member(*x, target), label);
  };
  std::vector<Axiom<M>> out = {
      {"DCL.compose", "down(A) down(B) = down(AB)",
       [below, lands](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                    d = m.sample_object(c, Role::plain);
         const auto f = r.in("A", m.sample(c, a, b));
         const auto g = r.in("B", m.sample(c, b, d));
         const auto x = below(m, c, f);
         const auto y = below(m, c, g);
         if (x && y) lands(m, r, m.base().compose(*x, *y), m.compose(f, g), "composite");
       }},
      {"DCL.restriction", "rs of an element of down(A) lies in down(rs A)",
       [below, lands](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain);
         const auto f = r.in("A", m.sample(c, a, b));
         const auto x = below(m, c, f);
         if (x) lands(m, r, m.base().restriction(*x), m.restriction(f), "restriction");
       }},
  };
  if constexpr (CartesianModel<Base>) {
    out.push_back({"DCL.pair", "<down(A), down(B)> lies in down<A,B>",
                   [below, lands](const M& m, Chooser& c, R& r) {
                     const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                                d = m.sample_object(c, Role::plain);
                     const auto f = r.in("A", m.sample(c, a, b));
                     const auto g = r.in("B", m.sample(c, a, d));
                     const auto x = below(m, c, f);
                     const auto y = below(m, c, g);
                     if (x && y) lands(m, r, m.base().pair(*x, *y), m.pair(f, g), "pairing");
                   }});
  }
  if constexpr (AdditiveModel<Base>) {
    out.push_back({"DCL.add", "down(A) + down(B) lies in down(A + B)",
                   [below, lands](const M& m, Chooser& c, R& r) {
                     const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::additive);
                     const auto f = r.in("A", m.sample(c, a, b));
                     const auto g = r.in("B", m.sample(c, a, b));
                     const auto x = below(m, c, f);
                     const auto y = below(m, c, g);
                     if (x && y) lands(m, r, m.base().add(*x, *y), m.add(f, g), "sum");
                   }});
  }
  if constexpr (DifferentialModel<Base>) {
    out.push_back({"DCL.diff", "D of an element of down(A) lies in D[A]",
                   [below, lands](const M& m, Chooser& c, R& r) {
                     const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
                     const auto f = r.in("A", m.sample(c, a, b));
                     const auto x = below(m, c, f);
                     if (x) lands(m, r, m.base().diff(*x), m.diff(f), "derivative");
                   }});
  }
  return out;
}

}  // namespace suites

template <RestrictionModel Base>
struct ModelSuites<JnModel<Base>> {
  static std::vector<std::string> names() { return {"DCL"}; }
  static std::optional<std::vector<Axiom<JnModel<Base>>>> get(std::string_view suite) {
    if (suite == "DCL") return suites::down_closure<Base>();
    return std::nullopt;
  }
};

}  // namespace diffrest
