#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffrest/bigint.hpp"
#include "diffrest/fraction.hpp"
#include "diffrest/poly.hpp"
#include "diffrest/sampler.hpp"

namespace diffrest {

class IntegerRig {
 public:
  using value_type = Integer;
  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  Integer add(const Integer& a, const Integer& b) const { return a + b; }
  Integer mul(const Integer& a, const Integer& b) const { return a * b; }
  bool equal(const Integer& a, const Integer& b) const { return a == b; }
  Integer sample(SplitMix64& rng) const { return Integer(rng.between(-24, 24)); }
  std::string show(const Integer& a) const { return a.get_str(); }
  std::string name() const { return "Z"; }

  Integer gcd(const Integer& a, const Integer& b) const;
  Integer divide_exact(const Integer& a, const Integer& b) const;
  bool is_unit(const Integer& a) const { return abs(a) == 1; }
  bool is_zero(const Integer& a) const { return a == 0; }
  Integer radical(const Integer& a) const { return integer_radical(a); }
  std::pair<Integer, Integer> unit_normalize(const Integer& num, const Integer& den) const;
};

// The natural numbers; same carrier type as Z but closed under the operations used here.
class NaturalRig {
 public:
  using value_type = Integer;
  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  Integer add(const Integer& a, const Integer& b) const { return a + b; }
  Integer mul(const Integer& a, const Integer& b) const { return a * b; }
  bool equal(const Integer& a, const Integer& b) const { return a == b; }
  Integer sample(SplitMix64& rng) const { return Integer(rng.between(0, 36)); }
  std::string show(const Integer& a) const { return a.get_str(); }
  std::string name() const { return "N"; }

  Integer gcd(const Integer& a, const Integer& b) const { return IntegerRig{}.gcd(a, b); }
  Integer divide_exact(const Integer& a, const Integer& b) const { return IntegerRig{}.divide_exact(a, b); }
  bool is_unit(const Integer& a) const { return a == 1; }
  bool is_zero(const Integer& a) const { return a == 0; }
  Integer radical(const Integer& a) const { return integer_radical(a); }
  std::pair<Integer, Integer> unit_normalize(const Integer& num, const Integer& den) const { return {num, den}; }
};

class RationalRig {
 public:
  using value_type = Rational;
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  bool equal(const Rational& a, const Rational& b) const { return a == b; }
  Rational sample(SplitMix64& rng) const;
  std::string show(const Rational& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  // a field: every nonzero element is a unit
  Rational gcd(const Rational& a, const Rational& b) const { return (a == 0 && b == 0) ? 0 : 1; }
  Rational divide_exact(const Rational& a, const Rational& b) const;
  bool is_unit(const Rational& a) const { return a != 0; }
  bool is_zero(const Rational& a) const { return a == 0; }
  Rational radical(const Rational& a) const { return a == 0 ? 0 : 1; }
  std::pair<Rational, Rational> unit_normalize(const Rational& num, const Rational& den) const;
};

// Polynomials in `nvars` variables over Z or Q.
class PolyRig {
 public:
  using value_type = Poly;
  PolyRig(CoeffRing ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

  Poly zero() const { return Poly(ring_, nvars_); }
  Poly one() const { return Poly::constant(ring_, 1, nvars_); }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  bool equal(const Poly& a, const Poly& b) const { return a == b; }
  Poly sample(SplitMix64& rng) const;  // degree <= 2, at most 3 terms
  std::string show(const Poly& a) const { return a.str(); }
  std::string name() const;

  Poly gcd(const Poly& a, const Poly& b) const;
  Poly divide_exact(const Poly& a, const Poly& b) const { return diffrest::divide_exact(a, b); }
  bool is_unit(const Poly& a) const { return diffrest::is_unit(a); }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  Poly radical(const Poly& a) const { return diffrest::radical(a); }
  std::pair<Poly, Poly> unit_normalize(const Poly& num, const Poly& den) const;

  CoeffRing ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }

 private:
  CoeffRing ring_;
  std::size_t nvars_;
};

// The chain {0 < 1 < ... < top} as a rig with max as addition and min as multiplication.
class ChainLatticeRig {
 public:
  using value_type = int;
  explicit ChainLatticeRig(int top) : top_(top) {}
  int zero() const { return 0; }
  int one() const { return top_; }
  int add(int a, int b) const { return std::max(a, b); }
  int mul(int a, int b) const { return std::min(a, b); }
  bool equal(int a, int b) const { return a == b; }
  int sample(SplitMix64& rng) const { return static_cast<int>(rng.between(0, top_)); }
  std::string show(int a) const { return std::to_string(a); }
  std::string name() const { return "L" + std::to_string(top_); }
  std::vector<int> elements() const;
  std::size_t index_of(int a) const { return static_cast<std::size_t>(a); }
  bool leq(int a, int b) const { return a <= b; }

 private:
  int top_;
};

}  // namespace diffrest
