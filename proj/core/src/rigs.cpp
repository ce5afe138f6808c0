#include "diffrest/rigs.hpp"

#include "diffrest/errors.hpp"

namespace diffrest {

Integer IntegerRig::gcd(const Integer& a, const Integer& b) const {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer IntegerRig::divide_exact(const Integer& a, const Integer& b) const {
  if (b == 0) throw DivisionError("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw DivisionError("non-exact division " + a.get_str() + " / " + b.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::pair<Integer, Integer> IntegerRig::unit_normalize(const Integer& num, const Integer& den) const {
  if (den < 0) return {-num, -den};
  return {num, den};
}

Rational RationalRig::sample(SplitMix64& rng) const {
  const long p = rng.between(-12, 12);
  const long q = rng.between(1, 6);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational RationalRig::divide_exact(const Rational& a, const Rational& b) const {
  if (b == 0) throw DivisionError("division by zero");
  return a / b;
}

std::pair<Rational, Rational> RationalRig::unit_normalize(const Rational& num, const Rational& den) const {
  if (den == 0) return {num, den};
  return {num / den, Rational(1)};
}

Poly PolyRig::sample(SplitMix64& rng) const {
  const std::size_t terms = static_cast<std::size_t>(rng.between(0, 3));
  std::vector<Poly::Term> raw;
  for (std::size_t i = 0; i < terms; ++i) {
    Monomial m;
    const unsigned degree = static_cast<unsigned>(rng.between(0, 2));
    for (unsigned d = 0; d < degree && nvars_ > 0; ++d)
      m = m * Monomial::variable(static_cast<std::size_t>(rng.below(nvars_)));
    Rational c(rng.between(-5, 5));
    if (ring_ == CoeffRing::Rationals && rng.below(4) == 0) c /= Rational(rng.between(2, 4));
    if (c == 0) c = 1;
    raw.push_back({m, c});
  }
  return Poly::from_terms(ring_, nvars_, std::move(raw));
}

std::string PolyRig::name() const {
  std::string vars;
  for (std::size_t i = 1; i <= nvars_; ++i) vars += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
  return std::string(ring_name(ring_)) + "[" + vars + "]";
}

Poly PolyRig::gcd(const Poly& a, const Poly& b) const {
  if (a.is_zero() && b.is_zero()) return zero();
  return poly_gcd(a, b);
}

std::pair<Poly, Poly> PolyRig::unit_normalize(const Poly& num, const Poly& den) const {
  const Rational u = unit_part(den);
  if (u == 1) return {num, den};
  const Rational inv = Rational(1) / u;
  return {num.scaled(inv), den.scaled(inv)};
}

std::vector<int> ChainLatticeRig::elements() const {
  std::vector<int> out;
  for (int i = 0; i <= top_; ++i) out.push_back(i);
  return out;
}

}  // namespace diffrest
