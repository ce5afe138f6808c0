#pragma once

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffrest/bigint.hpp"

namespace diffrest {

enum class CoeffRing { Integers, Rationals };

std::string_view ring_name(CoeffRing ring);  // "Z" or "Q"

// Exponent vector; variable indices are 0-based internally (x1 is index 0).
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  static Monomial variable(std::size_t index, Exponent power = 1);

  std::size_t width() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return i < exps_.size() ? exps_[i] : Exponent{0}; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }

  bool divides(const Monomial& other) const;
  Monomial with_exponent(std::size_t index, Exponent e) const;
  Monomial shifted(std::size_t offset) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);  // requires b | a
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  // Graded lexicographic order with x1 > x2 > ...; true when a sorts before b.
  friend bool grlex_greater(const Monomial& a, const Monomial& b);

 private:
  void trim();
  boost::container::small_vector<Exponent, 8> exps_;
  unsigned degree_ = 0;
};

// Sparse polynomial over Z or Q; terms kept in descending graded-lex order with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  explicit Poly(CoeffRing ring = CoeffRing::Integers, std::size_t nvars = 0);
  static Poly constant(CoeffRing ring, const Rational& c, std::size_t nvars = 0);
  static Poly variable(CoeffRing ring, std::size_t k, std::size_t nvars = 0);  // k is 1-based
  static Poly from_terms(CoeffRing ring, std::size_t nvars, std::vector<Term> terms);

  CoeffRing ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  Poly with_nvars(std::size_t nvars) const;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t index) const;  // 0-based variable index
  std::size_t used_vars() const;                 // 1 + highest index used; 0 for constants

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;

  std::string str() const;

 private:
  CoeffRing ring_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

Poly partial_derivative(const Poly& p, std::size_t k);  // k is 1-based
Poly substitute(const Poly& p, const std::vector<Poly>& images);
Poly shift_variables(const Poly& p, std::size_t offset);
Rational eval(const Poly& p, const std::vector<Rational>& point);

bool is_unit(const Poly& p);
// Scalar u with p/u unit-normalized: sign of the leading coefficient over Z, the leading coefficient over Q.
Rational unit_part(const Poly& p);
Poly unit_normal(const Poly& p);

Poly poly_gcd(const Poly& a, const Poly& b);
std::optional<Poly> try_divide(const Poly& a, const Poly& b);  // a / b when exact
Poly divide_exact(const Poly& a, const Poly& b);
bool divides(const Poly& a, const Poly& b);  // a | b

Integer integer_content(const Poly& p);  // gcd of coefficients (integer polys only)
Poly squarefree_part(const Poly& p);      // unit-normalized product of distinct irreducible factors
Poly radical(const Poly& p);              // squarefree part times the radical of the integer content

}  // namespace diffrest
