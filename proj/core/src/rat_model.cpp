#include "diffrest/rat_model.hpp"

#include <algorithm>

namespace diffrest {

namespace {

// Exponent vectors of total degree 1..max_degree (plus the constant when asked) in n variables.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree, bool with_constant) {
  std::vector<Monomial> out;
  if (with_constant) out.emplace_back();
  std::vector<Monomial> frontier{Monomial{}};
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (std::size_t v = 0; v < nvars; ++v) {
        Monomial grown = m * Monomial::variable(v);
        if (std::find(next.begin(), next.end(), grown) == next.end()) next.push_back(grown);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

Rational RatModel::sample_coefficient(Chooser& c) const {
  long v = c.between(1, bounds_.max_coefficient);
  if (c.coin(2)) v = -v;
  Rational q(v);
  if (ring_ == CoeffRing::Rationals && c.coin(4)) {
    q /= Rational(c.between(2, 3));
  }
  return q;
}

Poly RatModel::sample_poly(Chooser& c, std::size_t nvars, bool allow_constant) const {
  const auto monos = monomials_up_to(nvars, bounds_.max_degree, true);
  const std::size_t terms = static_cast<std::size_t>(c.between(1, static_cast<long>(bounds_.max_terms)));
  std::vector<Poly::Term> raw;
  for (std::size_t t = 0; t < terms; ++t) raw.push_back({monos[c.choose(monos.size())], sample_coefficient(c)});
  Poly p = Poly::from_terms(ring_, nvars, std::move(raw));
  if (!allow_constant && p.is_constant() && nvars > 0) {
    p += Poly::variable(ring_, static_cast<std::size_t>(c.between(1, static_cast<long>(nvars))), nvars);
  }
  return p;
}

std::vector<Poly> RatModel::sample_generators(Chooser& c, std::size_t nvars) const {
  std::vector<Poly> gens;
  if (nvars == 0) return gens;
  const std::size_t count = c.choose(bounds_.max_generators + 1);
  for (std::size_t i = 0; i < count; ++i) {
    Poly g = sample_poly(c, nvars, false);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return rat::normalize_generators(gens, ring_, nvars);
}

RatModel::Obj RatModel::sample_object(Chooser& c, Role) const {
  return 1 + c.choose(bounds_.max_arity);
}

RatModel::Map RatModel::sample(Chooser& c, Obj a, Obj b) const {
  if (c.coin(25)) return empty(a, b);
  const auto gens = sample_generators(c, a);
  std::vector<RatFrac> comps;
  for (std::size_t i = 0; i < b; ++i) {
    Poly num = c.coin(6) ? Poly(ring_, a) : sample_poly(c, a, true);
    Poly den = Poly::constant(ring_, 1, a);
    for (const auto& g : gens)
      if (c.coin(2)) den *= g;
    comps.push_back({std::move(num), std::move(den)});
  }
  return RatMap::make(ring_, a, b, std::move(comps), gens);
}

RatModel::Map RatModel::sample_idempotent(Chooser& c, Obj a) const {
  if (c.coin(25)) return empty(a, a);
  return RatMap::make(ring_, a, a, identity(a).components(), sample_generators(c, a));
}

}  // namespace diffrest
