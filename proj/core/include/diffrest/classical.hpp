#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "diffrest/errors.hpp"
#include "diffrest/finpar_model.hpp"
#include "diffrest/harness.hpp"
#include "diffrest/model.hpp"

namespace diffrest {

// The formal difference "f minus f'", with f' <= f.
template <class BaseMap>
struct Piece {
  BaseMap f;
  BaseMap fprime;
};

// A disjoint union of classical pieces; no pieces is the nowhere-defined map.
template <class Obj, class BaseMap>
struct ClMap {
  Obj dom;
  Obj cod;
  std::vector<Piece<BaseMap>> pieces;
};

struct ClOptions {
  std::size_t max_pieces = 2;      // sampler
  std::size_t harvest_cap = 12;    // largest idempotent set cl_eq will refine along
  bool verify_disjointness = true;  // re-check disjointness after every construction
};

// The classical completion Cl(X) of a join restriction model.
//
// Equality is three-valued. Both sides are refined along a harvested finite set of restriction
// idempotents and compared piece by piece; a match proves equivalence. A mismatch is only reported
// as `distinct` over finpar, where refining along the single points is exact and a denotation
// oracle confirms it; elsewhere it is `unknown`.
template <JoinModel Base>
class ClModel {
 public:
  using Obj = typename Base::Obj;
  using BaseMap = typename Base::Map;
  using P = Piece<BaseMap>;
  using Map = ClMap<Obj, BaseMap>;

  static constexpr bool has_points = requires(const Base& b, const Obj& a) { b.point_idempotents(a); };

  explicit ClModel(Base base, ClOptions options = {}) : base_(std::move(base)), options_(options) {}

  const Base& base() const { return base_; }
  const ClOptions& options() const { return options_; }
  std::string name() const { return "Cl(" + base_.name() + ")"; }

  // The unit: f becomes the single piece (f, empty).
  Map of_base(const BaseMap& f) const {
    const Obj a = base_.dom(f), b = base_.cod(f);
    return make(a, b, {P{f, base_.empty(a, b)}}, false);
  }

  // Validates f' <= f for each piece and pairwise disjointness.
  Map from_pieces(const Obj& a, const Obj& b, std::vector<P> pieces) const {
    for (const auto& p : pieces) {
      if (!(base_.dom(p.f) == a) || !(base_.cod(p.f) == b) || !(base_.dom(p.fprime) == a) ||
          !(base_.cod(p.fprime) == b))
        throw ArityError("piece has the wrong type");
      if (leq(base_, p.fprime, p.f) == Verdict::distinct)
        throw Error("classical piece requires f' <= f: " + base_.show(p.fprime) + " is not below " + base_.show(p.f));
    }
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j)
        if (disjoint(pieces[i], pieces[j]) == Verdict::distinct)
          throw IncompatibleJoin("pieces " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
    return make(a, b, std::move(pieces), false);
  }

  Obj dom(const Map& f) const { return f.dom; }
  Obj cod(const Map& f) const { return f.cod; }
  Map identity(const Obj& a) const { return of_base(base_.identity(a)); }

  // (f, f')(g, g') = (fg, f'g v fg')
  Map compose(const Map& x, const Map& y) const {
    std::vector<P> out;
    for (const auto& p : x.pieces)
      for (const auto& q : y.pieces)
        out.push_back(P{base_.compose(p.f, q.f),
                        base_.join(base_.compose(p.fprime, q.f), base_.compose(p.f, q.fprime))});
    return make(x.dom, y.cod, std::move(out), options_.verify_disjointness);
  }

  Map restriction(const Map& x) const {
    std::vector<P> out;
    for (const auto& p : x.pieces) out.push_back(P{base_.restriction(p.f), base_.restriction(p.fprime)});
    return make(x.dom, x.dom, std::move(out), options_.verify_disjointness);
  }

  Verdict equal(const Map& x, const Map& y) const;

  std::string show(const Map& x) const {
    if (x.pieces.empty()) return "[] : " + base_.show_object(x.dom) + " -> " + base_.show_object(x.cod);
    std::string out = "[";
    for (std::size_t i = 0; i < x.pieces.size(); ++i) {
      if (i) out += " u ";
      out += "(" + base_.show(x.pieces[i].f) + " minus " + base_.show(x.pieces[i].fprime) + ")";
    }
    return out + "]";
  }
  std::string show_object(const Obj& a) const { return base_.show_object(a); }

  Map empty(const Obj& a, const Obj& b) const { return Map{a, b, {}}; }

  // Union of two disjoint maps; IncompatibleJoin when some pair of pieces overlaps.
  Map join_disjoint(const Map& x, const Map& y) const {
    if (!(x.dom == y.dom) || !(x.cod == y.cod)) throw ArityError("disjoint join of maps with different types");
    for (const auto& p : x.pieces)
      for (const auto& q : y.pieces)
        if (disjoint(p, q) != Verdict::equal) throw IncompatibleJoin("disjoint join of overlapping maps");
    std::vector<P> all = x.pieces;
    all.insert(all.end(), y.pieces.begin(), y.pieces.end());
    return make(x.dom, x.cod, std::move(all), false);
  }

  // x minus y: x restricted away from the domain of y. Expects y <= x.
  Map complement(const Map& x, const Map& y) const {
    if (!(x.dom == y.dom) || !(x.cod == y.cod)) throw ArityError("complement of maps with different types");
    if (leq(*this, y, x) == Verdict::distinct) throw Error("relative complement requires the second map below the first");
    Map acc = x;
    for (const auto& q : y.pieces) acc = compose(avoid(x.dom, q), acc);
    return acc;
  }

  // Rewrites every piece (f, f') as (ef, ef') u (f, f' v ef); the result is equivalent to x.
  Map break_along(const Map& x, const BaseMap& e) const {
    if (base_.equal(e, base_.restriction(e)) != Verdict::equal)
      throw Error("breaking needs a restriction idempotent, got " + base_.show(e));
    std::vector<P> out;
    for (const auto& p : x.pieces) {
      out.push_back(P{base_.compose(e, p.f), base_.compose(e, p.fprime)});
      out.push_back(P{p.f, base_.join(p.fprime, base_.compose(e, p.f))});
    }
    return make(x.dom, x.cod, std::move(out), options_.verify_disjointness);
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
  // <(f, f'), (g, g')> = (<f,g>, <f',g> v <f,g'>)
  Map pair(const Map& x, const Map& y) const
    requires CartesianModel<Base>
  {
    std::vector<P> out;
    for (const auto& p : x.pieces)
      for (const auto& q : y.pieces)
        out.push_back(
            P{base_.pair(p.f, q.f), base_.join(base_.pair(p.fprime, q.f), base_.pair(p.f, q.fprime))});
    return make(x.dom, base_.product(x.cod, y.cod), std::move(out), options_.verify_disjointness);
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

  Map add(const Map& x, const Map& y) const
    requires AdditiveModel<Base>
  {
    std::vector<P> out;
    for (const auto& p : x.pieces)
      for (const auto& q : y.pieces)
        out.push_back(P{base_.add(p.f, q.f), base_.join(base_.add(p.fprime, q.f), base_.add(p.f, q.fprime))});
    return make(x.dom, x.cod, std::move(out), options_.verify_disjointness);
  }
  Map zero(const Obj& a, const Obj& b) const
    requires AdditiveModel<Base>
  {
    return of_base(base_.zero(a, b));
  }

  Map diff(const Map& x) const
    requires DifferentialModel<Base>
  {
    const Obj aa = base_.product(x.dom, x.dom);
    std::vector<P> out;
    for (const auto& p : x.pieces) {
      auto d = base_.diff(p.f);
      const auto expected = times(base_, base_.identity(x.dom), base_.restriction(p.f));
      if (base_.equal(base_.restriction(d), expected) == Verdict::distinct)
        throw InvariantViolation("rs(D[f]) differs from 1 x rs(f) on a piece");
      out.push_back(P{std::move(d), base_.diff(p.fprime)});
    }
    return make(aa, x.cod, std::move(out), options_.verify_disjointness);
  }

  Obj sample_object(Chooser& c, Role role) const { return base_.sample_object(c, role); }

  // One piece, or two pieces split along a sampled idempotent so that they are disjoint by construction.
  Map sample(Chooser& c, const Obj& a, const Obj& b) const {
    if (c.coin(20)) return empty(a, b);
    const std::size_t k = 1 + c.choose(options_.max_pieces);
    if (k == 1) return make(a, b, {sample_piece(c, a, b)}, false);
    const BaseMap e = diffrest::sample_idempotent(base_, c, a);
    const P p = sample_piece(c, a, b);
    const P q = sample_piece(c, a, b);
    return make(a, b,
                {P{base_.compose(e, p.f), base_.compose(e, p.fprime)},
                 P{q.f, base_.join(q.fprime, base_.compose(e, q.f))}},
                options_.verify_disjointness);
  }

  Map sample_idempotent(Chooser& c, const Obj& a) const {
    const BaseMap e = diffrest::sample_idempotent(base_, c, a);
    const BaseMap inner = c.coin(2) ? base_.empty(a, a) : base_.compose(diffrest::sample_idempotent(base_, c, a), e);
    return make(a, a, {P{e, inner}}, false);
  }

  // The refinement used by equal(): pairwise disjoint idempotent pieces on `a` covering the identity.
  std::vector<P> atoms(const Obj& a, const std::vector<const Map*>& sides) const;

 private:
  P sample_piece(Chooser& c, const Obj& a, const Obj& b) const {
    const BaseMap h = base_.sample(c, a, b);
    if (c.coin(3)) return P{h, base_.empty(a, b)};
    return P{h, base_.compose(diffrest::sample_idempotent(base_, c, a), h)};
  }

  // The idempotent (1, rs g) u (rs g', empty): identity away from the domain of the piece (g, g').
  Map avoid(const Obj& a, const P& q) const {
    const BaseMap rg = base_.restriction(q.f);
    const BaseMap rgp = base_.restriction(q.fprime);
    return make(a, a, {P{base_.identity(a), rg}, P{rgp, base_.empty(a, a)}}, false);
  }

  // p and q are disjoint when rs(f) rs(g) <= rs(f') rs(g) v rs(f) rs(g').
  Verdict disjoint(const P& p, const P& q) const {
    const BaseMap rf = base_.restriction(p.f), rfp = base_.restriction(p.fprime);
    const BaseMap rg = base_.restriction(q.f), rgp = base_.restriction(q.fprime);
    const BaseMap overlap = base_.compose(rf, rg);
    const BaseMap allowed = base_.join(base_.compose(rfp, rg), base_.compose(rf, rgp));
    return leq(base_, overlap, allowed);
  }

  // Drops collapsed pieces (f' = f), optionally re-verifies disjointness, and sorts by display.
  Map make(const Obj& a, const Obj& b, std::vector<P> pieces, bool verify) const {
    std::vector<std::pair<std::string, P>> keyed;
    for (auto& p : pieces) {
      if (base_.equal(p.f, p.fprime) == Verdict::equal) continue;
      std::string key = base_.show(p.f) + '\x1f' + base_.show(p.fprime);
      keyed.emplace_back(std::move(key), std::move(p));
    }
    if (verify)
      for (std::size_t i = 0; i < keyed.size(); ++i)
        for (std::size_t j = i + 1; j < keyed.size(); ++j)
          if (disjoint(keyed[i].second, keyed[j].second) == Verdict::distinct)
            throw InvariantViolation("classical pieces overlap after construction");
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Map out{a, b, {}};
    out.pieces.reserve(keyed.size());
    for (auto& [key, p] : keyed) out.pieces.push_back(std::move(p));
    return out;
  }

  // Multiset equality of piece lists under base equality, matching greedily.
  Verdict same_pieces(const std::vector<P>& xs, const std::vector<P>& ys) const {
    if (xs.size() != ys.size()) return Verdict::distinct;
    std::vector<bool> used(ys.size(), false);
    bool undecided = false;
    for (const auto& p : xs) {
      bool found = false;
      for (std::size_t j = 0; j < ys.size() && !found; ++j) {
        if (used[j]) continue;
        const Verdict v = both(base_.equal(p.f, ys[j].f), base_.equal(p.fprime, ys[j].fprime));
        if (v == Verdict::equal) {
          used[j] = true;
          found = true;
        } else if (v == Verdict::unknown) {
          undecided = true;
        }
      }
      if (!found) return undecided ? Verdict::unknown : Verdict::distinct;
    }
    return Verdict::equal;
  }

  Base base_;
  ClOptions options_;
};

// Over finpar: the partial function a classical map stands for, the union of each f on dom f minus dom f'.
inline PartialFn cl_denote_finpar(const ClMap<FinObj, PartialFn>& x) {
  std::vector<PartialFn> parts;
  parts.push_back(pf::empty(x.dom, x.cod));
  for (const auto& p : x.pieces) parts.push_back(pf::complement(p.f, p.fprime));
  return pf::join(parts);
}

template <JoinModel Base>
std::vector<typename ClModel<Base>::P> ClModel<Base>::atoms(const Obj& a, const std::vector<const Map*>& sides) const {
  if constexpr (has_points) {
    std::vector<P> out;
    for (const auto& e : base_.point_idempotents(a)) out.push_back(P{e, base_.empty(a, a)});
    return out;
  } else {
    // Harvest the domains of every component on both sides, skipping duplicates and trivial ones.
    std::vector<BaseMap> harvest;
    const BaseMap one = base_.identity(a);
    const BaseMap none = base_.empty(a, a);
    auto consider = [&](const BaseMap& f) {
      const BaseMap e = base_.restriction(f);
      if (base_.equal(e, one) == Verdict::equal || base_.equal(e, none) == Verdict::equal) return;
      for (const auto& h : harvest)
        if (base_.equal(h, e) == Verdict::equal) return;
      harvest.push_back(e);
    };
    for (const Map* side : sides)
      for (const auto& p : side->pieces) {
        consider(p.f);
        consider(p.fprime);
      }
    if (harvest.size() > options_.harvest_cap)
      throw Unsupported("classical equality: " + std::to_string(harvest.size()) +
                        " harvested idempotents exceed the cap of " + std::to_string(options_.harvest_cap));
    // Break the unit along each harvested idempotent in turn, discarding collapsed atoms.
    std::vector<P> current{P{one, none}};
    for (const auto& e : harvest) {
      std::vector<P> next;
      for (const auto& atom : current) {
        P inside{base_.compose(e, atom.f), base_.compose(e, atom.fprime)};
        P outside{atom.f, base_.join(atom.fprime, base_.compose(e, atom.f))};
        if (base_.equal(inside.f, inside.fprime) != Verdict::equal) next.push_back(std::move(inside));
        if (base_.equal(outside.f, outside.fprime) != Verdict::equal) next.push_back(std::move(outside));
      }
      current = std::move(next);
    }
    return current;
  }
}

template <JoinModel Base>
Verdict ClModel<Base>::equal(const Map& x, const Map& y) const {
  if (!(x.dom == y.dom) || !(x.cod == y.cod)) return Verdict::distinct;
  if (same_pieces(x.pieces, y.pieces) == Verdict::equal) return Verdict::equal;
  Verdict result = Verdict::equal;
  for (const auto& atom : atoms(x.dom, {&x, &y})) {
    const Map alpha = make(x.dom, x.dom, {atom}, false);
    const Verdict v = same_pieces(compose(alpha, x).pieces, compose(alpha, y).pieces);
    if (v == Verdict::equal) continue;
    result = Verdict::unknown;
    break;
  }
  if (result == Verdict::equal) return result;
  if constexpr (std::is_same_v<Base, FinparModel>) {
    // Point refinement is exact here; the denotation oracle must agree with the mismatch.
    if (cl_denote_finpar(x) == cl_denote_finpar(y))
      throw InvariantViolation("point refinement separated two maps with the same denotation");
    return Verdict::distinct;
  }
  return result;
}

// Equality over Cl(finpar) measured against the denotation. Each case pairs a sampled x with one of:
// an unrelated sample, x broken along an idempotent, a single-piece map with the same denotation,
// or a single piece whose table differs from x in at most one point.
template <>
struct ModelSuites<ClModel<FinparModel>> {
  using M = ClModel<FinparModel>;

  static std::vector<std::string> names() { return {"CL-ORACLE"}; }

  static std::optional<std::vector<Axiom<M>>> get(std::string_view suite) {
    if (suite != "CL-ORACLE") return std::nullopt;
    return std::vector<Axiom<M>>{
        {"CLEQ.oracle", "cl_eq is decisive and agrees with equality of denotations",
         [](const M& m, Chooser& c, Recorder<M>& r) {
           const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain);
           const auto x = r.in("x", m.sample(c, a, b));
           const PartialFn dx = cl_denote_finpar(x);
           typename M::Map y;
           switch (c.choose(4)) {
             case 0: y = m.sample(c, a, b); break;
             case 1: y = m.break_along(x, diffrest::sample_idempotent(m.base(), c, a)); break;
             case 2: y = m.of_base(dx); break;
             default: {
               auto graph = dx.graph();
               const std::size_t point = c.choose(graph.size());
               graph[point] = static_cast<std::int8_t>(static_cast<long>(c.choose(b.size() + 1)) - 1);
               y = m.of_base(PartialFn(a, b, graph));
             }
           }
           r.in("y", y);
           r.agree(m.equal(x, y), verdict_of(dx == cl_denote_finpar(y)), "cl_eq against denotation");
         }},
    };
  }
};

}  // namespace diffrest
