#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "diffrest/harness.hpp"
#include "diffrest/model.hpp"

namespace diffrest {

// Axiom tables. Composition is written in diagrammatic order throughout: fg is "f, then g".
namespace suites {

template <RestrictionModel M>
std::vector<Axiom<M>> restriction() {
  using R = Recorder<M>;
  return {
      {"R.1", "rs(f) f = f",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain);
         const auto f = r.in("f", m.sample(c, a, b));
         r.eq(m.compose(m.restriction(f), f), f);
       }},
      {"R.2", "rs(f) rs(g) = rs(g) rs(f)",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                    d = m.sample_object(c, Role::plain);
         const auto f = r.in("f", m.sample(c, a, b));
         const auto g = r.in("g", m.sample(c, a, d));
         r.eq(m.compose(m.restriction(f), m.restriction(g)), m.compose(m.restriction(g), m.restriction(f)));
       }},
      {"R.3", "rs(rs(g) f) = rs(g) rs(f)",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                    d = m.sample_object(c, Role::plain);
         const auto f = r.in("f", m.sample(c, a, b));
         const auto g = r.in("g", m.sample(c, a, d));
         r.eq(m.restriction(m.compose(m.restriction(g), f)), m.compose(m.restriction(g), m.restriction(f)));
       }},
      {"R.4", "f rs(g) = rs(fg) f",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                    d = m.sample_object(c, Role::plain);
         const auto f = r.in("f", m.sample(c, a, b));
         const auto g = r.in("g", m.sample(c, b, d));
         r.eq(m.compose(f, m.restriction(g)), m.compose(m.restriction(m.compose(f, g)), f));
       }},
  };
}

// Consequences of R.1-R.4 and the alternative forms of compatibility.
template <RestrictionModel M>
std::vector<Axiom<M>> restriction_lemmas() {
  using R = Recorder<M>;
  auto three = [](const M& m, Chooser& c) {
    return std::array{m.sample_object(c, Role::plain), m.sample_object(c, Role::plain),
                      m.sample_object(c, Role::plain)};
  };
  return {
      {"L.i", "rs(f) rs(f) = rs(f)",
       [three](const M& m, Chooser& c, R& r) {
         const auto o = three(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         r.eq(m.compose(m.restriction(f), m.restriction(f)), m.restriction(f));
       }},
      {"L.ii", "rs(f) rs(fg) = rs(fg)",
       [three](const M& m, Chooser& c, R& r) {
         const auto o = three(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[1], o[2]));
         const auto fg = m.compose(f, g);
         r.eq(m.compose(m.restriction(f), m.restriction(fg)), m.restriction(fg));
       }},
      {"L.iii", "rs(f rs(g)) = rs(fg)",
       [three](const M& m, Chooser& c, R& r) {
         const auto o = three(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[1], o[2]));
         r.eq(m.restriction(m.compose(f, m.restriction(g))), m.restriction(m.compose(f, g)));
       }},
      {"L.iv", "rs(rs(f)) = rs(f)",
       [three](const M& m, Chooser& c, R& r) {
         const auto o = three(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         r.eq(m.restriction(m.restriction(f)), m.restriction(f));
       }},
      {"L.v", "rs(rs(f) rs(g)) = rs(f) rs(g)",
       [three](const M& m, Chooser& c, R& r) {
         const auto o = three(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[2]));
         const auto e = m.compose(m.restriction(f), m.restriction(g));
         r.eq(m.restriction(e), e);
       }},
      {"L.vi", "identities are total: rs(1) = 1",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain);
         r.eq(m.restriction(m.identity(a)), m.identity(a));
       }},
      {"L.vii", "rs(f) g = g implies rs(g) = rs(f) rs(g)",
       [three](const M& m, Chooser& c, R& r) {
         const auto o = three(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g0 = r.in("g0", m.sample(c, o[0], o[2]));
         const auto g = m.compose(m.restriction(f), g0);
         if (r.given(m.equal(m.compose(m.restriction(f), g), g)))
           r.eq(m.restriction(g), m.compose(m.restriction(f), m.restriction(g)));
       }},
      {"L.compat", "f ~ g iff rs(f) g <= f iff rs(g) f <= g",
       [three](const M& m, Chooser& c, R& r) {
         const auto o = three(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         // half the time a compatible partner, otherwise an arbitrary one
         const auto g = r.in("g", c.coin(2) ? m.compose(sample_idempotent(m, c, o[0]), f) : m.sample(c, o[0], o[1]));
         const Verdict base = compat(m, f, g);
         r.agree(base, leq(m, m.compose(m.restriction(f), g), f), "rs(f) g <= f");
         r.agree(base, leq(m, m.compose(m.restriction(g), f), g), "rs(g) f <= g");
       }},
      {"L.order", "<= is reflexive and implies compatibility",
       [three](const M& m, Chooser& c, R& r) {
         const auto o = three(m, c);
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         const auto f = r.in("f", m.compose(sample_idempotent(m, c, o[0]), g));
         r.le(g, g);
         r.le(f, g);
         r.compatible(f, g);
       }},
  };
}

template <CartesianModel M>
std::vector<Axiom<M>> cartesian() {
  using R = Recorder<M>;
  auto objs = [](const M& m, Chooser& c) {
    return std::array{m.sample_object(c, Role::plain), m.sample_object(c, Role::plain),
                      m.sample_object(c, Role::plain)};
  };
  return {
      {"CR.lax", "<f,g> pi0 <= f, <f,g> pi1 <= g, rs<f,g> = rs(f) rs(g)",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[2]));
         const auto p = m.pair(f, g);
         r.le(m.compose(p, m.proj0(o[1], o[2])), f, "pi0");
         r.le(m.compose(p, m.proj1(o[1], o[2])), g, "pi1");
         r.eq(m.restriction(p), m.compose(m.restriction(f), m.restriction(g)), "restriction of a pairing");
       }},
      {"CR.unique", "<h pi0, h pi1> = h",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto h = r.in("h", m.sample(c, o[0], m.product(o[1], o[2])));
         r.eq(m.pair(m.compose(h, m.proj0(o[1], o[2])), m.compose(h, m.proj1(o[1], o[2]))), h);
       }},
      {"CR.total", "projections and ! are total; f : A -> 1 equals rs(f) !",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto one = m.terminal();
         const auto f = r.in("f", m.sample(c, o[0], one));
         r.holds(is_total(m, m.proj0(o[0], o[1])), "pi0 total");
         r.holds(is_total(m, m.proj1(o[0], o[1])), "pi1 total");
         r.holds(is_total(m, m.bang(o[0])), "! total");
         r.eq(f, m.compose(m.restriction(f), m.bang(o[0])), "terminal");
       }},
      {"CR.i", "<f,g> pi0 = rs(g) f and <f,g> pi1 = rs(f) g",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[2]));
         const auto p = m.pair(f, g);
         r.eq(m.compose(p, m.proj0(o[1], o[2])), m.compose(m.restriction(g), f), "pi0");
         r.eq(m.compose(p, m.proj1(o[1], o[2])), m.compose(m.restriction(f), g), "pi1");
       }},
      {"CR.ii", "e <f,g> = <ef, g> = <f, eg> for e = rs(e)",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto e = r.in("e", sample_idempotent(m, c, o[0]));
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[2]));
         const auto lhs = m.compose(e, m.pair(f, g));
         r.eq(lhs, m.pair(m.compose(e, f), g), "<ef,g>");
         r.eq(lhs, m.pair(f, m.compose(e, g)), "<f,eg>");
       }},
      {"CR.iii", "f <g,h> = <fg, fh>",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto d = m.sample_object(c, Role::plain);
         const auto f = r.in("f", m.sample(c, d, o[0]));
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         const auto h = r.in("h", m.sample(c, o[0], o[2]));
         r.eq(m.compose(f, m.pair(g, h)), m.pair(m.compose(f, g), m.compose(f, h)));
       }},
      {"CR.iv", "f <= f' and g <= g' imply <f,g> <= <f',g'>",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f1 = r.in("f'", m.sample(c, o[0], o[1]));
         const auto g1 = r.in("g'", m.sample(c, o[0], o[2]));
         const auto f = r.in("f", m.compose(sample_idempotent(m, c, o[0]), f1));
         const auto g = r.in("g", m.compose(sample_idempotent(m, c, o[0]), g1));
         r.le(m.pair(f, g), m.pair(f1, g1));
       }},
      {"CR.v", "f ~ f' and g ~ g' imply <f,g> ~ <f',g'>",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto [f, f1] = sample_compatible(m, c, o[0], o[1]);
         const auto [g, g1] = sample_compatible(m, c, o[0], o[2]);
         r.in("f", f), r.in("f'", f1), r.in("g", g), r.in("g'", g1);
         r.compatible(m.pair(f, g), m.pair(f1, g1));
       }},
      {"CR.vi", "f total implies (f x g) pi1 = pi1 g",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto d = m.sample_object(c, Role::plain);
         const auto g = r.in("g", m.sample(c, o[1], o[2]));
         const auto check = [&](const typename M::Map& f) {
           r.eq(m.compose(times(m, f, g), m.proj1(m.cod(f), o[2])), m.compose(m.proj1(o[0], o[1]), g));
         };
         check(m.bang(o[0]));
         const auto f = r.in("f", m.sample(c, o[0], d));
         if (r.given(is_total(m, f))) check(f);
       }},
  };
}

template <class M>
  requires CartesianModel<M> && AdditiveModel<M>
std::vector<Axiom<M>> left_additive() {
  using R = Recorder<M>;
  auto objs = [](const M& m, Chooser& c) {
    return std::array{m.sample_object(c, Role::plain), m.sample_object(c, Role::additive)};
  };
  return {
      {"LA.monoid", "f + g = g + f, (f + g) + h = f + (g + h), f + 0 = f",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         const auto h = r.in("h", m.sample(c, o[0], o[1]));
         r.eq(m.add(f, g), m.add(g, f), "commutative");
         r.eq(m.add(m.add(f, g), h), m.add(f, m.add(g, h)), "associative");
         r.eq(m.add(f, m.zero(o[0], o[1])), f, "unit");
       }},
      {"LA.rs", "rs(f + g) = rs(f) rs(g) and rs(0) = 1",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         r.eq(m.restriction(m.add(f, g)), m.compose(m.restriction(f), m.restriction(g)), "sum");
         r.eq(m.restriction(m.zero(o[0], o[1])), m.identity(o[0]), "zero");
       }},
      {"LA.left", "f (g + h) = fg + fh and f 0 = rs(f) 0",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto d = m.sample_object(c, Role::plain);
         const auto f = r.in("f", m.sample(c, d, o[0]));
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         const auto h = r.in("h", m.sample(c, o[0], o[1]));
         r.eq(m.compose(f, m.add(g, h)), m.add(m.compose(f, g), m.compose(f, h)), "sum");
         r.eq(m.compose(f, m.zero(o[0], o[1])), m.compose(m.restriction(f), m.zero(d, o[1])), "zero");
       }},
      {"LA.i", "f + g = rs(g) f + rs(f) g",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         r.eq(m.add(f, g), m.add(m.compose(m.restriction(g), f), m.compose(m.restriction(f), g)));
       }},
      {"LA.ii", "e (f + g) = ef + g = f + eg for e = rs(e)",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto e = r.in("e", sample_idempotent(m, c, o[0]));
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         const auto lhs = m.compose(e, m.add(f, g));
         r.eq(lhs, m.add(m.compose(e, f), g), "ef + g");
         r.eq(lhs, m.add(f, m.compose(e, g)), "f + eg");
       }},
      {"LA.iii", "f <= f' and g <= g' imply f + g <= f' + g'",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f1 = r.in("f'", m.sample(c, o[0], o[1]));
         const auto g1 = r.in("g'", m.sample(c, o[0], o[1]));
         const auto f = r.in("f", m.compose(sample_idempotent(m, c, o[0]), f1));
         const auto g = r.in("g", m.compose(sample_idempotent(m, c, o[0]), g1));
         r.le(m.add(f, g), m.add(f1, g1));
       }},
      {"LA.iv", "f ~ f' and g ~ g' imply (f + g) ~ (f' + g')",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto [f, f1] = sample_compatible(m, c, o[0], o[1]);
         const auto [g, g1] = sample_compatible(m, c, o[0], o[1]);
         r.in("f", f), r.in("f'", f1), r.in("g", g), r.in("g'", g1);
         r.compatible(m.add(f, g), m.add(f1, g1));
       }},
  };
}

template <class M>
  requires CartesianModel<M> && AdditiveModel<M>
std::vector<Axiom<M>> cartesian_left_additive() {
  using R = Recorder<M>;
  return {
      {"CLA.times", "(f + g) x (h + k) = (f x h) + (g x k) and 0 x 0 = 0",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::additive);
         const auto d = m.sample_object(c, Role::plain), e = m.sample_object(c, Role::additive);
         const auto f = r.in("f", m.sample(c, a, b));
         const auto g = r.in("g", m.sample(c, a, b));
         const auto h = r.in("h", m.sample(c, d, e));
         const auto k = r.in("k", m.sample(c, d, e));
         r.eq(times(m, m.add(f, g), m.add(h, k)), m.add(times(m, f, h), times(m, g, k)), "sum");
         r.eq(times(m, m.zero(a, b), m.zero(d, e)), m.zero(m.product(a, d), m.product(b, e)), "zero");
       }},
      {"CLA.structural", "pi0, pi1 and the diagonal are additive",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         r.holds(is_additive(m, m.proj0(a, b)), "pi0 additive");
         r.holds(is_additive(m, m.proj1(a, b)), "pi1 additive");
         r.holds(is_additive(m, m.pair(m.identity(a), m.identity(a))), "diagonal additive");
       }},
      {"CLA.exchange", "+ on X x Y is ex followed by (+ x +)",
       [](const M& m, Chooser& c, R& r) {
         const auto x = m.sample_object(c, Role::additive), y = m.sample_object(c, Role::additive);
         const auto xy = m.product(x, y);
         const auto ex = m.pair(times(m, m.proj0(x, y), m.proj0(x, y)), times(m, m.proj1(x, y), m.proj1(x, y)));
         r.eq(plus_map(m, xy), m.compose(ex, times(m, plus_map(m, x), plus_map(m, y))));
       }},
      {"CLA.i", "<f,g> + <f',g'> = <f + f', g + g'> and <0,0> = 0",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::additive),
                    d = m.sample_object(c, Role::additive);
         const auto f = r.in("f", m.sample(c, a, b));
         const auto g = r.in("g", m.sample(c, a, d));
         const auto f1 = r.in("f'", m.sample(c, a, b));
         const auto g1 = r.in("g'", m.sample(c, a, d));
         r.eq(m.add(m.pair(f, g), m.pair(f1, g1)), m.pair(m.add(f, f1), m.add(g, g1)), "sum");
         r.eq(m.pair(m.zero(a, b), m.zero(a, d)), m.zero(a, m.product(b, d)), "zero");
       }},
  };
}

namespace detail {

// A map known to be linear in any differential model: rs(e) <1,0> D[f].
template <DifferentialModel M>
typename M::Map linear_sample(const M& m, Chooser& c, const typename M::Obj& a, const typename M::Obj& b) {
  const auto f = m.sample(c, a, b);
  const auto e = sample_idempotent(m, c, a);
  return m.compose(e, m.compose(m.pair(m.identity(a), m.zero(a, a)), m.diff(f)));
}

}  // namespace detail

template <DifferentialModel M>
std::vector<Axiom<M>> differential() {
  using R = Recorder<M>;
  auto objs = [](const M& m, Chooser& c) {
    return std::array{m.sample_object(c, Role::additive), m.sample_object(c, Role::additive),
                      m.sample_object(c, Role::additive)};
  };
  return {
      {"DR.1", "D[f + g] = D[f] + D[g] and D[0] = 0",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         r.eq(m.diff(m.add(f, g)), m.add(m.diff(f), m.diff(g)), "sum");
         r.eq(m.diff(m.zero(o[0], o[1])), m.zero(m.product(o[0], o[0]), o[1]), "zero");
       }},
      {"DR.2", "<g + h, k> D[f] = <g,k> D[f] + <h,k> D[f] and <0,g> D[f] = rs(gf) 0",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[2], o[0]));
         const auto h = r.in("h", m.sample(c, o[2], o[0]));
         const auto k = r.in("k", m.sample(c, o[2], o[0]));
         const auto df = m.diff(f);
         r.eq(m.compose(m.pair(m.add(g, h), k), df), m.add(m.compose(m.pair(g, k), df), m.compose(m.pair(h, k), df)),
              "sum");
         r.eq(m.compose(m.pair(m.zero(o[2], o[0]), g), df),
              m.compose(m.restriction(m.compose(g, f)), m.zero(o[2], o[1])), "zero");
       }},
      {"DR.3", "D[pi0] = pi0 pi0 and D[pi1] = pi0 pi1",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto ab = m.product(o[0], o[1]);
         r.eq(m.diff(m.proj0(o[0], o[1])), m.compose(m.proj0(ab, ab), m.proj0(o[0], o[1])), "pi0");
         r.eq(m.diff(m.proj1(o[0], o[1])), m.compose(m.proj0(ab, ab), m.proj1(o[0], o[1])), "pi1");
       }},
      {"DR.4", "D[<f,g>] = <D[f], D[g]>",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[0], o[2]));
         r.eq(m.diff(m.pair(f, g)), m.pair(m.diff(f), m.diff(g)));
       }},
      {"DR.5", "D[fg] = <D[f], pi1 f> D[g]",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[1], o[2]));
         r.eq(m.diff(m.compose(f, g)),
              m.compose(m.pair(m.diff(f), m.compose(m.proj1(o[0], o[0]), f)), m.diff(g)));
       }},
      {"DR.6", "<<g,0>,<h,k>> D[D[f]] = rs(h) <g,k> D[f]",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[2], o[0]));
         const auto h = r.in("h", m.sample(c, o[2], o[0]));
         const auto k = r.in("k", m.sample(c, o[2], o[0]));
         const auto lhs = m.compose(m.pair(m.pair(g, m.zero(o[2], o[0])), m.pair(h, k)), m.diff(m.diff(f)));
         r.eq(lhs, m.compose(m.restriction(h), m.compose(m.pair(g, k), m.diff(f))));
       }},
      {"DR.7", "<<0,h>,<g,k>> D[D[f]] = <<0,g>,<h,k>> D[D[f]]",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         const auto g = r.in("g", m.sample(c, o[2], o[0]));
         const auto h = r.in("h", m.sample(c, o[2], o[0]));
         const auto k = r.in("k", m.sample(c, o[2], o[0]));
         const auto ddf = m.diff(m.diff(f));
         const auto z = m.zero(o[2], o[0]);
         r.eq(m.compose(m.pair(m.pair(z, h), m.pair(g, k)), ddf), m.compose(m.pair(m.pair(z, g), m.pair(h, k)), ddf));
       }},
      {"DR.8", "D[rs(f)] = (1 x rs(f)) pi0",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         r.eq(m.diff(m.restriction(f)),
              m.compose(times(m, m.identity(o[0]), m.restriction(f)), m.proj0(o[0], o[0])));
       }},
      {"DR.9", "rs(D[f]) = 1 x rs(f)",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[1]));
         r.eq(m.restriction(m.diff(f)), times(m, m.identity(o[0]), m.restriction(f)));
       }},
      {"DR.prop.i", "D[rs(f) g] = (1 x rs(f)) D[g]",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto f = r.in("f", m.sample(c, o[0], o[2]));
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         r.eq(m.diff(m.compose(m.restriction(f), g)),
              m.compose(times(m, m.identity(o[0]), m.restriction(f)), m.diff(g)));
       }},
      {"DR.prop.ii", "f <= g implies D[f] <= D[g]; f ~ g implies D[f] ~ D[g]",
       [objs](const M& m, Chooser& c, R& r) {
         const auto o = objs(m, c);
         const auto g = r.in("g", m.sample(c, o[0], o[1]));
         const auto f = r.in("f", m.compose(sample_idempotent(m, c, o[0]), g));
         const auto f1 = r.in("f'", m.compose(sample_idempotent(m, c, o[0]), g));
         r.le(m.diff(f), m.diff(g), "order");
         r.compatible(m.diff(f), m.diff(f1), "compatibility");
       }},
  };
}

template <JoinModel M>
std::vector<Axiom<M>> joins() {
  using R = Recorder<M>;
  using Map = typename M::Map;
  // Two compatible maps below a common h: f = e1 h, g = e2 h.
  struct Family {
    Map h, f, g;
  };
  auto family = [](const M& m, Chooser& c, R& r, const typename M::Obj& a, const typename M::Obj& b) {
    const auto h = r.in("h", m.sample(c, a, b));
    const auto f = r.in("f", m.compose(sample_idempotent(m, c, a), h));
    const auto g = r.in("g", m.compose(sample_idempotent(m, c, a), h));
    return Family{h, f, g};
  };
  std::vector<Axiom<M>> out = {
      {"J.bound", "f <= f v g, g <= f v g, and f v g <= any common upper bound",
       [family](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain);
         const auto s = family(m, c, r, a, b);
         const auto j = m.join(s.f, s.g);
         r.le(s.f, j, "f below");
         r.le(s.g, j, "g below");
         r.le(j, s.h, "least");
       }},
      {"J.stable", "k (f v g) = kf v kg",
       [family](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                    d = m.sample_object(c, Role::plain);
         const auto s = family(m, c, r, a, b);
         const auto k = r.in("k", m.sample(c, d, a));
         r.eq(m.compose(k, m.join(s.f, s.g)), m.join(m.compose(k, s.f), m.compose(k, s.g)));
       }},
      {"J.i", "rs(f) (f v g) = f",
       [family](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain);
         const auto s = family(m, c, r, a, b);
         r.eq(m.compose(m.restriction(s.f), m.join(s.f, s.g)), s.f);
       }},
      {"J.ii", "rs(f v g) = rs(f) v rs(g)",
       [family](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain);
         const auto s = family(m, c, r, a, b);
         r.eq(m.restriction(m.join(s.f, s.g)), m.join(m.restriction(s.f), m.restriction(s.g)));
       }},
      {"J.iii", "(f v g) k = fk v gk",
       [family](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                    d = m.sample_object(c, Role::plain);
         const auto s = family(m, c, r, a, b);
         const auto k = r.in("k", m.sample(c, b, d));
         r.eq(m.compose(m.join(s.f, s.g), k), m.join(m.compose(s.f, k), m.compose(s.g, k)));
       }},
      {"J.empty", "the empty map is the bottom: empty <= f, f v empty = f, rs(empty) = empty, empty f = empty",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                    d = m.sample_object(c, Role::plain);
         const auto f = r.in("f", m.sample(c, a, b));
         const auto g = r.in("g", m.sample(c, b, d));
         r.le(m.empty(a, b), f, "bottom");
         r.eq(m.join(f, m.empty(a, b)), f, "unit");
         r.eq(m.restriction(m.empty(a, b)), m.empty(a, a), "restriction");
         r.eq(m.compose(m.empty(a, b), g), m.empty(a, d), "precomposition");
         r.eq(m.compose(f, m.empty(b, d)), m.empty(a, d), "postcomposition");
       }},
  };
  if constexpr (CartesianModel<M>) {
    out.push_back({"J.pair", "<f v g, k> = <f,k> v <g,k>, <f, empty> = empty, (f v g) x k = (f x k) v (g x k)",
                   [family](const M& m, Chooser& c, R& r) {
                     const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain),
                                d = m.sample_object(c, Role::plain);
                     const auto s = family(m, c, r, a, b);
                     const auto k = r.in("k", m.sample(c, a, d));
                     r.eq(m.pair(m.join(s.f, s.g), k), m.join(m.pair(s.f, k), m.pair(s.g, k)), "pairing");
                     r.eq(m.pair(s.f, m.empty(a, d)), m.empty(a, m.product(b, d)), "empty pairing");
                     r.eq(times(m, m.join(s.f, s.g), k), m.join(times(m, s.f, k), times(m, s.g, k)), "product");
                     r.eq(times(m, s.f, m.empty(a, d)), m.empty(m.product(a, a), m.product(b, d)), "empty product");
                   }});
  }
  if constexpr (AdditiveModel<M>) {
    out.push_back({"J.add", "f + empty = empty and (f v g) + (h v k) = join of the pairwise sums",
                   [family](const M& m, Chooser& c, R& r) {
                     const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::additive);
                     const auto s = family(m, c, r, a, b);
                     const auto t = family(m, c, r, a, b);
                     r.eq(m.add(s.f, m.empty(a, b)), m.empty(a, b), "empty");
                     const auto lhs = m.add(m.join(s.f, s.g), m.join(t.f, t.g));
                     const auto rhs = m.join(m.join(m.add(s.f, t.f), m.add(s.f, t.g)),
                                             m.join(m.add(s.g, t.f), m.add(s.g, t.g)));
                     r.eq(lhs, rhs, "sum");
                   }});
  }
  if constexpr (DifferentialModel<M>) {
    out.push_back({"J.diff", "D[empty] = empty and D[f v g] = D[f] v D[g]",
                   [family](const M& m, Chooser& c, R& r) {
                     const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
                     const auto s = family(m, c, r, a, b);
                     r.eq(m.diff(m.empty(a, b)), m.empty(m.product(a, a), b), "empty");
                     r.eq(m.diff(m.join(s.f, s.g)), m.join(m.diff(s.f), m.diff(s.g)), "join");
                   }});
  }
  return out;
}

// Closure properties of additive and strongly additive maps.
template <class M>
  requires CartesianModel<M> && AdditiveModel<M>
std::vector<Axiom<M>> additive_predicates() {
  using R = Recorder<M>;
  using Map = typename M::Map;
  // Differential models supply additive maps by construction; otherwise sample and rely on premises.
  auto candidate = [](const M& m, Chooser& c, const typename M::Obj& a, const typename M::Obj& b) -> Map {
    if constexpr (DifferentialModel<M>) {
      if (c.coin(2)) return detail::linear_sample(m, c, a, b);
    }
    return m.sample(c, a, b);
  };
  return {
      {"ADD.idempotent", "restriction idempotents are additive; identities and 0 are strongly additive",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         const auto e = r.in("e", sample_idempotent(m, c, a));
         r.holds(is_additive(m, e), "e additive");
         r.holds(is_strongly_additive(m, m.identity(a)), "1 strongly additive");
         r.holds(is_strongly_additive(m, m.zero(a, b)), "0 strongly additive");
       }},
      {"ADD.compose", "additive maps compose; so do strongly additive ones",
       [candidate](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive),
                    d = m.sample_object(c, Role::additive);
         const auto f = r.in("f", candidate(m, c, a, b));
         const auto g = r.in("g", candidate(m, c, b, d));
         const auto fg = m.compose(f, g);
         if (r.given(both(is_additive(m, f), is_additive(m, g)))) r.holds(is_additive(m, fg), "fg additive");
         if (r.given(both(is_strongly_additive(m, f), is_strongly_additive(m, g))))
           r.holds(is_strongly_additive(m, fg), "fg strongly additive");
       }},
      {"ADD.sum", "additive maps are closed under +; so are strongly additive ones",
       [candidate](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         const auto f = r.in("f", candidate(m, c, a, b));
         const auto g = r.in("g", candidate(m, c, a, b));
         if (r.given(both(is_additive(m, f), is_additive(m, g))))
           r.holds(is_additive(m, m.add(f, g)), "f + g additive");
         if (r.given(both(is_strongly_additive(m, f), is_strongly_additive(m, g))))
           r.holds(is_strongly_additive(m, m.add(f, g)), "f + g strongly additive");
       }},
      {"ADD.below", "g <= f with f additive implies g additive",
       [candidate](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         const auto f = r.in("f", candidate(m, c, a, b));
         const auto g = r.in("g", m.compose(sample_idempotent(m, c, a), f));
         if (r.given(is_additive(m, f))) r.holds(is_additive(m, g), "g additive");
       }},
      {"ADD.strong", "strongly additive implies additive; for total maps the two agree",
       [candidate](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         const auto f = r.in("f", candidate(m, c, a, b));
         const Verdict strong = is_strongly_additive(m, f);
         if (strong == Verdict::equal) r.holds(is_additive(m, f), "additive");
         if (is_total(m, f) == Verdict::equal) r.agree(is_additive(m, f), strong, "total map");
       }},
      {"ADD.restriction", "f strongly additive iff rs(f) strongly additive and f additive",
       [candidate](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         const auto f = r.in("f", candidate(m, c, a, b));
         r.agree(is_strongly_additive(m, f),
                 both(is_strongly_additive(m, m.restriction(f)), is_additive(m, f)), "characterization");
       }},
      {"ADD.pair", "projections are strongly additive; pairings of (strongly) additive maps are (strongly) additive",
       [candidate](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive),
                    d = m.sample_object(c, Role::additive);
         r.holds(is_strongly_additive(m, m.proj0(a, b)), "pi0");
         r.holds(is_strongly_additive(m, m.proj1(a, b)), "pi1");
         const auto f = r.in("f", candidate(m, c, a, b));
         const auto g = r.in("g", candidate(m, c, a, d));
         if (r.given(both(is_additive(m, f), is_additive(m, g))))
           r.holds(is_additive(m, m.pair(f, g)), "<f,g> additive");
         if (r.given(both(is_strongly_additive(m, f), is_strongly_additive(m, g))))
           r.holds(is_strongly_additive(m, m.pair(f, g)), "<f,g> strongly additive");
       }},
  };
}

template <DifferentialModel M>
std::vector<Axiom<M>> linear_predicates() {
  using R = Recorder<M>;
  using detail::linear_sample;
  return {
      {"LIN.total", "a total f is linear iff D[f] = pi0 f",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         const auto f = r.in("f", c.coin(2) ? linear_sample(m, c, a, b) : m.sample(c, a, b));
         if (r.given(is_total(m, f)))
           r.agree(is_linear(m, f), m.equal(m.diff(f), m.compose(m.proj0(a, a), f)), "characterization");
       }},
      {"LIN.additive", "linear maps are additive",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         const auto f = r.in("f", linear_sample(m, c, a, b));
         r.holds(is_linear(m, f), "f linear");
         r.holds(is_additive(m, f), "f additive");
       }},
      {"LIN.idempotent", "restriction idempotents, projections and 0 are linear",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         r.holds(is_linear(m, r.in("e", sample_idempotent(m, c, a))), "e");
         r.holds(is_linear(m, m.proj0(a, b)), "pi0");
         r.holds(is_linear(m, m.proj1(a, b)), "pi1");
         r.holds(is_linear(m, m.zero(a, b)), "0");
       }},
      {"LIN.closure", "linear maps are closed under composition, +, pairing and restriction to smaller domains",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive),
                    d = m.sample_object(c, Role::additive);
         const auto f = r.in("f", linear_sample(m, c, a, b));
         const auto g = r.in("g", linear_sample(m, c, b, d));
         const auto f1 = r.in("f'", linear_sample(m, c, a, b));
         const auto h = r.in("h", linear_sample(m, c, a, d));
         r.holds(is_linear(m, m.compose(f, g)), "fg");
         r.holds(is_linear(m, m.add(f, f1)), "f + f'");
         r.holds(is_linear(m, m.pair(f, h)), "<f,h>");
         r.holds(is_linear(m, m.compose(sample_idempotent(m, c, a), f)), "e f");
       }},
      {"LIN.unit-zero", "<1,0> D[f] is linear for any f",
       [](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::additive), b = m.sample_object(c, Role::additive);
         const auto f = r.in("f", m.sample(c, a, b));
         r.holds(is_linear(m, m.compose(m.pair(m.identity(a), m.zero(a, a)), m.diff(f))), "<1,0> D[f]");
       }},
  };
}

}  // namespace suites

// Probe of the 0-unitary implication f >=0 h <=0 g  =>  f ~ g. The universally quantified
// density condition is only checked against sampled test maps k, so this is a probe and not
// a decision procedure: a failure shows either a counterexample or an under-sampled premise.
template <EmptyModel M>
std::vector<Axiom<M>> zero_unitary_axioms(std::size_t probes = 6) {
  using R = Recorder<M>;
  using Map = typename M::Map;
  auto dense_below = [](const M& m, const Map& h, const Map& f, const std::vector<Map>& ks) {
    if (leq(m, h, f) != Verdict::equal) return Verdict::distinct;
    for (const auto& k : ks) {
      const auto a = m.dom(k);
      const auto b = m.cod(f);
      if (m.equal(m.compose(k, h), m.empty(a, b)) == Verdict::equal &&
          m.equal(m.compose(k, f), m.empty(a, b)) != Verdict::equal)
        return Verdict::distinct;
    }
    return Verdict::equal;
  };
  return {
      {"ZU.conclusion", "f >=0 h <=0 g implies f ~ g (probed)",
       [dense_below, probes](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain);
         const auto f = r.in("f", m.sample(c, a, b));
         const auto h = r.in("h", m.compose(sample_idempotent(m, c, a), f));
         // g shares h either as another restriction of f or as an independent map
         const auto g = r.in("g", c.coin(2) ? m.compose(sample_idempotent(m, c, a), f) : m.sample(c, a, b));
         std::vector<Map> ks{m.identity(a), m.restriction(f), m.restriction(g)};
         for (std::size_t i = 0; i < probes; ++i) {
           const auto d = m.sample_object(c, Role::plain);
           ks.push_back(c.coin(2) ? m.sample(c, d, a) : sample_idempotent(m, c, a));
         }
         r.le(h, f, "h <= f");
         if (r.given(both(dense_below(m, h, f, ks), dense_below(m, h, g, ks)))) r.compatible(f, g, "f ~ g");
       }},
      {"ZU.zeros", "h <=0 f with f or h empty forces both empty",
       [dense_below](const M& m, Chooser& c, R& r) {
         const auto a = m.sample_object(c, Role::plain), b = m.sample_object(c, Role::plain);
         const auto f = r.in("f", c.coin(3) ? m.empty(a, b) : m.sample(c, a, b));
         const auto h = r.in("h", c.coin(2) ? m.empty(a, b) : m.compose(sample_idempotent(m, c, a), f));
         const bool some_empty = m.equal(f, m.empty(a, b)) == Verdict::equal || m.equal(h, m.empty(a, b)) == Verdict::equal;
         if (r.given(verdict_of(some_empty)) && r.given(dense_below(m, h, f, {m.identity(a)}))) {
           r.eq(f, m.empty(a, b), "f empty");
           r.eq(h, m.empty(a, b), "h empty");
         }
       }},
  };
}

template <EmptyModel M>
SuiteReport zero_unitary_probe(const M& m, std::size_t cases, std::uint64_t seed) {
  SuiteOptions opt;
  opt.cases = cases;
  opt.seed = seed;
  return run_axioms(m, "ZERO-UNITARY", zero_unitary_axioms<M>(), opt);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"R", "R-lemma", "CR", "LA", "CLA", "DR", "JOIN", "ADD-PRED", "LIN"};
  return names;
}

// Axioms of a named suite for model M; Unsupported when M lacks a needed capability.
template <RestrictionModel M>
std::vector<Axiom<M>> suite_axioms(std::string_view suite) {
  if constexpr (requires { ModelSuites<M>::get(suite); }) {
    if (auto extra = ModelSuites<M>::get(suite)) return std::move(*extra);
  }
  if (suite == "R") return suites::restriction<M>();
  if (suite == "R-lemma") return suites::restriction_lemmas<M>();
  if (suite == "CR") {
    if constexpr (CartesianModel<M>) return suites::cartesian<M>();
  } else if (suite == "LA") {
    if constexpr (CartesianModel<M> && AdditiveModel<M>) return suites::left_additive<M>();
  } else if (suite == "CLA") {
    if constexpr (CartesianModel<M> && AdditiveModel<M>) return suites::cartesian_left_additive<M>();
  } else if (suite == "DR") {
    if constexpr (DifferentialModel<M>) return suites::differential<M>();
  } else if (suite == "JOIN") {
    if constexpr (JoinModel<M>) return suites::joins<M>();
  } else if (suite == "ADD-PRED") {
    if constexpr (CartesianModel<M> && AdditiveModel<M>) return suites::additive_predicates<M>();
  } else if (suite == "LIN") {
    if constexpr (DifferentialModel<M>) return suites::linear_predicates<M>();
  } else if (suite == "ZERO-UNITARY") {
    if constexpr (EmptyModel<M>) return zero_unitary_axioms<M>();
  } else if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw Unsupported("unknown suite " + std::string(suite));
  }
  throw Unsupported("suite unsupported: " + std::string(suite) + " needs a capability this model lacks");
}

template <RestrictionModel M>
SuiteReport check_suite(const M& m, std::string_view suite, const SuiteOptions& opt) {
  return run_axioms(m, std::string(suite), suite_axioms<M>(suite), opt);
}

}  // namespace diffrest
