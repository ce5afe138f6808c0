#include "diffrest/ratmap.hpp"

#include <algorithm>
#include <sstream>

#include "diffrest/errors.hpp"

namespace diffrest {

namespace detail {

struct RatBuilder {
  // Assembles a map whose denominators are already known to lie in the closure.
  static RatMap assemble(CoeffRing ring, std::size_t n, std::size_t m, std::vector<RatFrac> components,
                         const std::vector<Poly>& gens) {
    RatMap f(ring, n, m);
    f.gens_ = rat::normalize_generators(gens, ring, n);
    if (f.gens_.size() == 1 && f.gens_[0].is_zero()) {
      make_empty(f);
      return f;
    }
    f.components_.reserve(components.size());
    for (auto& c : components) f.components_.push_back(reduce(std::move(c), ring, n));
    return f;
  }

  static RatMap empty(CoeffRing ring, std::size_t n, std::size_t m) {
    RatMap f(ring, n, m);
    make_empty(f);
    return f;
  }

  static void make_empty(RatMap& f) {
    f.gens_ = {Poly(f.ring_, f.n_)};
    f.components_.assign(f.m_, RatFrac{Poly::constant(f.ring_, 1, f.n_), Poly::constant(f.ring_, 1, f.n_)});
  }

  // Cancels the common factor of numerator and denominator; denominator unit-normalized.
  static RatFrac reduce(RatFrac c, CoeffRing ring, std::size_t n) {
    if (c.den.is_zero()) throw InvariantViolation("zero denominator in a defined map");
    if (c.num.is_zero()) return {Poly(ring, n), Poly::constant(ring, 1, n)};
    if (!c.den.is_constant()) {
      const Poly g = poly_gcd(c.num, c.den);
      if (!is_unit(g)) {
        c.num = divide_exact(c.num, g);
        c.den = divide_exact(c.den, g);
      }
    }
    const Rational u = unit_part(c.den);
    if (u != 1) {
      const Rational inv = Rational(1) / u;
      c.num = c.num.scaled(inv);
      c.den = c.den.scaled(inv);
    }
    return {c.num.with_nvars(n), c.den.with_nvars(n)};
  }
};

}  // namespace detail

using detail::RatBuilder;

namespace {

void require_arity(const Poly& p, std::size_t n) {
  if (p.used_vars() > n) throw ArityError("polynomial " + p.str() + " uses variables beyond x" + std::to_string(n));
}

bool has_zero(const std::vector<Poly>& gens) {
  return std::any_of(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); });
}

void require_same_ring(const RatMap& f, const RatMap& g) {
  if (f.ring() != g.ring()) throw RingMismatch();
}

void require_parallel(const RatMap& f, const RatMap& g) {
  require_same_ring(f, g);
  if (f.n() != g.n() || f.m() != g.m()) throw ArityError("maps are not parallel");
}

// Removes from h every irreducible factor it shares with u.
Poly strip_shared(Poly h, const Poly& u) {
  while (!is_unit(h)) {
    const Poly g = poly_gcd(h, u);
    if (is_unit(g)) break;
    h = divide_exact(h, g);
  }
  return h;
}

bool is_identity_tuple(const RatMap& f) {
  if (f.n() != f.m() || f.is_empty()) return false;
  for (std::size_t i = 0; i < f.m(); ++i) {
    const auto& c = f.components()[i];
    if (!(c.den.is_constant() && c.den.constant_value() == 1)) return false;
    if (!(c.num == Poly::variable(f.ring(), i + 1, f.n()))) return false;
  }
  return true;
}

// Substituting fractions into p: numerator with the denominators cleared, plus the power of each
// image denominator that was cleared (the degree of p in that variable).
struct Cleared {
  Poly num;
  std::vector<unsigned> den_powers;
};

class Substitution {
 public:
  Substitution(const std::vector<RatFrac>& images, CoeffRing ring, std::size_t nvars)
      : images_(images), ring_(ring), nvars_(nvars), num_powers_(images.size()), den_powers_(images.size()) {}

  Cleared clear(const Poly& p) {
    Cleared out{Poly(ring_, nvars_), std::vector<unsigned>(images_.size(), 0)};
    for (std::size_t i = 0; i < images_.size(); ++i) out.den_powers[i] = p.degree_in(i);
    for (const auto& t : p.terms()) {
      Poly term = Poly::constant(ring_, t.coeff, nvars_);
      for (std::size_t i = 0; i < images_.size(); ++i) {
        const unsigned e = t.mono[i];
        const unsigned rest = out.den_powers[i] - e;
        if (e > 0) term *= num_power(i, e);
        if (rest > 0) term *= den_power(i, rest);
      }
      out.num += term;
    }
    return out;
  }

  const Poly& den_power(std::size_t i, unsigned e) { return power(den_powers_[i], images_[i].den, e); }

 private:
  const Poly& num_power(std::size_t i, unsigned e) { return power(num_powers_[i], images_[i].num, e); }
  const Poly& power(std::vector<Poly>& cache, const Poly& base, unsigned e) {
    if (cache.empty()) cache.push_back(Poly::constant(ring_, 1, nvars_));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  }

  const std::vector<RatFrac>& images_;
  CoeffRing ring_;
  std::size_t nvars_;
  std::vector<std::vector<Poly>> num_powers_;
  std::vector<std::vector<Poly>> den_powers_;
};

}  // namespace

bool RatMap::is_empty() const { return gens_.size() == 1 && gens_[0].is_zero(); }

RatMap RatMap::make(CoeffRing ring, std::size_t n, std::size_t m, std::vector<RatFrac> components,
                    std::vector<Poly> gens) {
  if (components.size() != m)
    throw ArityError("expected " + std::to_string(m) + " components, got " + std::to_string(components.size()));
  for (auto& g : gens) {
    if (g.ring() != ring) throw RingMismatch();
    require_arity(g, n);
    g = g.with_nvars(n);
  }
  const bool degenerate = has_zero(gens);
  for (auto& c : components) {
    if (c.num.ring() != ring || c.den.ring() != ring) throw RingMismatch();
    require_arity(c.num, n);
    require_arity(c.den, n);
    if (c.den.is_zero()) {
      if (!degenerate) throw InvalidRestrictionSet("0");
      continue;
    }
    if (!degenerate && !rat::membership(c.den, gens)) throw InvalidRestrictionSet(c.den.str());
  }
  if (degenerate) return RatBuilder::empty(ring, n, m);
  return RatBuilder::assemble(ring, n, m, std::move(components), gens);
}

std::string frac_str(const Poly& num, const Poly& den) {
  const std::string top = num.terms().size() > 1 ? "(" + num.str() + ")" : num.str();
  const std::string bottom = den.str();
  const bool bare = bottom.find_first_of("* ") == std::string::npos;
  return top + "/" + (bare ? bottom : "(" + bottom + ")");
}

std::string RatMap::str() const {
  std::ostringstream out;
  out << "map " << n_ << " -> " << m_ << " { ";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out << " ; ";
    out << frac_str(components_[i].num, components_[i].den);
  }
  out << " } | { ";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out << ", ";
    out << gens_[i].str();
  }
  out << " }";
  return out.str();
}

namespace rat {

bool membership(const Poly& q, const std::vector<Poly>& gens) {
  if (has_zero(gens)) return true;
  if (q.is_zero()) return false;
  Poly rest = q;
  for (const auto& u : gens) {
    if (is_unit(rest)) break;
    rest = strip_shared(std::move(rest), u);
  }
  return is_unit(rest);
}

bool restriction_set_equiv(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  const bool za = has_zero(a), zb = has_zero(b);
  if (za || zb) return za && zb;
  for (const auto& u : a)
    if (!membership(u, b)) return false;
  for (const auto& v : b)
    if (!membership(v, a)) return false;
  return true;
}

std::vector<Poly> normalize_generators(const std::vector<Poly>& gens, CoeffRing ring, std::size_t nvars) {
  std::vector<Poly> out;
  for (const auto& g : gens) {
    if (g.ring() != ring) throw RingMismatch();
    if (g.is_zero()) return {Poly(ring, nvars)};
    if (is_unit(g)) continue;
    Poly h = g;
    for (const auto& u : out) {
      if (is_unit(h)) break;
      h = strip_shared(std::move(h), u);
    }
    if (is_unit(h)) continue;
    out.push_back(radical(h).with_nvars(nvars));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
    return a.str() < b.str();
  });
  return out;
}

RatMap identity(CoeffRing ring, std::size_t n) {
  std::vector<RatFrac> comps;
  for (std::size_t i = 1; i <= n; ++i) comps.push_back({Poly::variable(ring, i, n), Poly::constant(ring, 1, n)});
  return RatBuilder::assemble(ring, n, n, std::move(comps), {});
}

RatMap proj0(CoeffRing ring, std::size_t a, std::size_t b) {
  std::vector<RatFrac> comps;
  for (std::size_t i = 1; i <= a; ++i) comps.push_back({Poly::variable(ring, i, a + b), Poly::constant(ring, 1, a + b)});
  return RatBuilder::assemble(ring, a + b, a, std::move(comps), {});
}

RatMap proj1(CoeffRing ring, std::size_t a, std::size_t b) {
  std::vector<RatFrac> comps;
  for (std::size_t i = 1; i <= b; ++i)
    comps.push_back({Poly::variable(ring, a + i, a + b), Poly::constant(ring, 1, a + b)});
  return RatBuilder::assemble(ring, a + b, b, std::move(comps), {});
}

RatMap terminal(CoeffRing ring, std::size_t n) { return RatBuilder::assemble(ring, n, 0, {}, {}); }

RatMap zero(CoeffRing ring, std::size_t n, std::size_t m) {
  std::vector<RatFrac> comps(m, RatFrac{Poly(ring, n), Poly::constant(ring, 1, n)});
  return RatBuilder::assemble(ring, n, m, std::move(comps), {});
}

RatMap empty(CoeffRing ring, std::size_t n, std::size_t m) { return RatBuilder::empty(ring, n, m); }

RatMap compose(const RatMap& f, const RatMap& g) {
  require_same_ring(f, g);
  if (f.m() != g.n()) throw ArityError("composition arity mismatch: " + std::to_string(f.m()) + " vs " + std::to_string(g.n()));
  const CoeffRing ring = f.ring();
  const std::size_t n = f.n();
  if (f.is_empty() || g.is_empty()) return empty(ring, n, g.m());
  if (is_identity_tuple(f)) {
    // precomposing with a restriction idempotent only adds its generators
    std::vector<Poly> gens = f.gens();
    gens.insert(gens.end(), g.gens().begin(), g.gens().end());
    return RatBuilder::assemble(ring, n, g.m(), g.components(), gens);
  }
  if (is_identity_tuple(g) && g.gens().empty()) return f;

  Substitution subst(f.components(), ring, n);
  // generators: f's, plus the cleared image of each generator of g. The cleared denominators
  // are products of f's denominators, already in the closure, so only numerators add information.
  std::vector<Poly> gens = f.gens();
  for (const auto& u : g.gens()) {
    Poly image = subst.clear(u).num;
    if (image.is_zero()) return empty(ring, n, g.m());
    gens.push_back(std::move(image));
  }
  std::vector<RatFrac> comps;
  comps.reserve(g.m());
  for (const auto& c : g.components()) {
    const Cleared top = subst.clear(c.num);
    const Cleared bottom = subst.clear(c.den);
    // (top / D^a) / (bottom / D^b), cancelling the common powers of the image denominators
    Poly num = top.num;
    Poly den = bottom.num;
    for (std::size_t i = 0; i < f.m(); ++i) {
      const unsigned a = top.den_powers[i], b = bottom.den_powers[i];
      if (b > a) num *= subst.den_power(i, b - a);
      if (a > b) den *= subst.den_power(i, a - b);
    }
    comps.push_back({std::move(num), std::move(den)});
  }
  return RatBuilder::assemble(ring, n, g.m(), std::move(comps), gens);
}

RatMap restriction(const RatMap& f) {
  if (f.is_empty()) return empty(f.ring(), f.n(), f.n());
  RatMap id = identity(f.ring(), f.n());
  return RatBuilder::assemble(f.ring(), f.n(), f.n(), id.components(), f.gens());
}

RatMap pair(const RatMap& f, const RatMap& g) {
  require_same_ring(f, g);
  if (f.n() != g.n()) throw ArityError("pairing needs a common source");
  if (f.is_empty() || g.is_empty()) return empty(f.ring(), f.n(), f.m() + g.m());
  std::vector<RatFrac> comps = f.components();
  comps.insert(comps.end(), g.components().begin(), g.components().end());
  std::vector<Poly> gens = f.gens();
  gens.insert(gens.end(), g.gens().begin(), g.gens().end());
  return RatBuilder::assemble(f.ring(), f.n(), f.m() + g.m(), std::move(comps), gens);
}

RatMap add(const RatMap& f, const RatMap& g) {
  require_parallel(f, g);
  if (f.is_empty() || g.is_empty()) return empty(f.ring(), f.n(), f.m());
  std::vector<RatFrac> comps;
  for (std::size_t i = 0; i < f.m(); ++i) {
    const auto& a = f.components()[i];
    const auto& b = g.components()[i];
    if (a.den == b.den) {
      comps.push_back({a.num + b.num, a.den});
    } else {
      comps.push_back({a.num * b.den + a.den * b.num, a.den * b.den});
    }
  }
  std::vector<Poly> gens = f.gens();
  gens.insert(gens.end(), g.gens().begin(), g.gens().end());
  return RatBuilder::assemble(f.ring(), f.n(), f.m(), std::move(comps), gens);
}

RatMap differential(const RatMap& f) {
  const std::size_t n = f.n();
  const CoeffRing ring = f.ring();
  if (f.is_empty()) return empty(ring, 2 * n, f.m());
  std::vector<RatFrac> comps;
  for (const auto& c : f.components()) {
    Poly num(ring, 2 * n);
    for (std::size_t k = 1; k <= n; ++k) {
      const Poly dk = partial_derivative(c.num, k) * c.den - c.num * partial_derivative(c.den, k);
      if (dk.is_zero()) continue;
      num += Poly::variable(ring, k, 2 * n) * shift_variables(dk, n);
    }
    const Poly den = shift_variables(c.den, n);
    comps.push_back({std::move(num), den * den});
  }
  std::vector<Poly> gens;
  for (const auto& u : f.gens()) gens.push_back(shift_variables(u, n));
  return RatBuilder::assemble(ring, 2 * n, f.m(), std::move(comps), gens);
}

bool equal(const RatMap& f, const RatMap& g) {
  require_parallel(f, g);
  if (f.is_empty() || g.is_empty()) return f.is_empty() && g.is_empty();
  for (std::size_t i = 0; i < f.m(); ++i) {
    const auto& a = f.components()[i];
    const auto& b = g.components()[i];
    if (a.den == b.den) {
      if (!(a.num == b.num)) return false;
    } else if (!(a.num * b.den == b.num * a.den)) {
      return false;
    }
  }
  if (f.gens().size() == g.gens().size() && std::equal(f.gens().begin(), f.gens().end(), g.gens().begin()))
    return true;
  return restriction_set_equiv(f.gens(), g.gens());
}

bool leq(const RatMap& f, const RatMap& g) { return equal(compose(restriction(f), g), f); }

bool compat(const RatMap& f, const RatMap& g) {
  return equal(compose(restriction(f), g), compose(restriction(g), f));
}

bool is_linear(const RatMap& f) {
  const RatMap first = compose(proj0(f.ring(), f.n(), f.n()), f);
  return compat(differential(f), first);
}

namespace {

struct AdditivityParts {
  RatMap sum_then_f;   // (pi0 + pi1) f
  RatMap f_then_sum;   // pi0 f + pi1 f
  RatMap zero_then_f;  // 0 f
  RatMap zero_map;     // 0
};

AdditivityParts additivity_parts(const RatMap& f) {
  const CoeffRing ring = f.ring();
  const std::size_t n = f.n();
  const RatMap p0 = proj0(ring, n, n);
  const RatMap p1 = proj1(ring, n, n);
  return {compose(add(p0, p1), f), add(compose(p0, f), compose(p1, f)), compose(zero(ring, 0, n), f),
          zero(ring, 0, f.m())};
}

}  // namespace

bool is_additive(const RatMap& f) {
  const auto parts = additivity_parts(f);
  return compat(parts.sum_then_f, parts.f_then_sum) && compat(parts.zero_then_f, parts.zero_map);
}

bool is_strongly_additive(const RatMap& f) {
  const auto parts = additivity_parts(f);
  return leq(parts.f_then_sum, parts.sum_then_f) && equal(parts.zero_then_f, parts.zero_map);
}

JoinCandidate candidate_join(const RatMap& f, const RatMap& g, const std::optional<RatMap>& probe) {
  require_parallel(f, g);
  if (!compat(f, g)) throw IncompatibleJoin("candidate join needs compatible maps");
  auto intersect = [](const RatMap& a, const RatMap& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    Poly pa = Poly::constant(a.ring(), 1, a.n());
    Poly pb = pa;
    for (const auto& u : a.gens()) pa *= u;
    for (const auto& v : b.gens()) pb *= v;
    return RatBuilder::assemble(a.ring(), a.n(), a.m(), a.components(), {poly_gcd(pa, pb)});
  };
  JoinCandidate out{intersect(f, g), std::nullopt, std::nullopt, std::nullopt};
  if (probe) {
    out.probe_of_join = compose(*probe, out.candidate);
    out.join_of_probes = intersect(compose(*probe, f), compose(*probe, g));
    out.stable = equal(*out.probe_of_join, *out.join_of_probes);
  }
  return out;
}

std::optional<std::vector<Rational>> eval(const RatMap& f, const std::vector<Rational>& point) {
  if (point.size() != f.n()) throw ArityError("evaluation point has the wrong length");
  for (const auto& u : f.gens())
    if (diffrest::eval(u, point) == 0) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& c : f.components()) {
    const Rational d = diffrest::eval(c.den, point);
    if (d == 0) throw InvariantViolation("denominator " + c.den.str() + " vanishes where every generator is nonzero");
    out.push_back(diffrest::eval(c.num, point) / d);
  }
  return out;
}

}  // namespace rat
}  // namespace diffrest
