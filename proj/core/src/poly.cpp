#include "diffrest/poly.hpp"

#include <algorithm>
#include <sstream>

#include "diffrest/errors.hpp"

namespace diffrest {

std::string_view ring_name(CoeffRing ring) { return ring == CoeffRing::Integers ? "Z" : "Q"; }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, Exponent power) {
  Monomial m;
  if (power == 0) return m;
  m.exps_.assign(index + 1, 0);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::with_exponent(std::size_t index, Exponent e) const {
  Monomial m = *this;
  if (index >= m.exps_.size()) {
    if (e == 0) return m;
    m.exps_.resize(index + 1, 0);
  }
  m.degree_ = m.degree_ - m.exps_[index] + e;
  m.exps_[index] = e;
  m.trim();
  return m;
}

Monomial Monomial::shifted(std::size_t offset) const {
  if (exps_.empty() || offset == 0) return *this;
  Monomial m;
  m.exps_.assign(offset, 0);
  m.exps_.insert(m.exps_.end(), exps_.begin(), exps_.end());
  m.degree_ = degree_;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  const Monomial& longer = a.exps_.size() >= b.exps_.size() ? a : b;
  const Monomial& shorter = a.exps_.size() >= b.exps_.size() ? b : a;
  Monomial m = longer;
  for (std::size_t i = 0; i < shorter.exps_.size(); ++i) m.exps_[i] += shorter.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < b.exps_.size(); ++i) m.exps_[i] -= b.exps_[i];
  m.degree_ = a.degree_ - b.degree_;
  m.trim();
  return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = a[i], y = b[i];
    if (x != y) return x > y;
  }
  return false;
}

// ---------------------------------------------------------------- Poly basics

namespace {

void check_ring(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
}

void check_coefficient(CoeffRing ring, const Rational& c) {
  if (ring == CoeffRing::Integers && !is_integral(c))
    throw Error("non-integer coefficient " + c.get_str() + " over Z");
}

// Sorts and merges a raw term list into canonical form.
std::vector<Poly::Term> canonicalize(std::vector<Poly::Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return grlex_greater(a.mono, b.mono); });
  std::vector<Poly::Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

}  // namespace

Poly::Poly(CoeffRing ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

Poly Poly::constant(CoeffRing ring, const Rational& c, std::size_t nvars) {
  check_coefficient(ring, c);
  Poly p(ring, nvars);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(CoeffRing ring, std::size_t k, std::size_t nvars) {
  if (k == 0) throw ArityError("variable indices start at 1");
  Poly p(ring, std::max(nvars, k));
  p.terms_.push_back({Monomial::variable(k - 1), Rational(1)});
  return p;
}

Poly Poly::from_terms(CoeffRing ring, std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    check_coefficient(ring, t.coeff);
    if (t.mono.width() > nvars) throw ArityError("monomial uses a variable beyond the declared arity");
  }
  Poly p(ring, nvars);
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Poly Poly::with_nvars(std::size_t nvars) const {
  if (nvars < used_vars()) throw ArityError("cannot lower arity below the variables in use");
  Poly p = *this;
  p.nvars_ = nvars;
  return p;
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw Error("constant_value of a non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Poly::degree_in(std::size_t index) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[index]);
  return d;
}

std::size_t Poly::used_vars() const {
  std::size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.mono.width());
  return w;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  check_ring(*this, other);
  nvars_ = std::max(nvars_, other.nvars_);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && grlex_greater(i->mono, j->mono))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || grlex_greater(j->mono, i->mono)) {
      merged.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) merged.push_back({std::move(i->mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) {
  check_ring(a, b);
  Poly p(a.ring_, std::max(a.nvars_, b.nvars_));
  if (a.terms_.empty() || b.terms_.empty()) return p;
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff).with_nvars(p.nvars_);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff).with_nvars(p.nvars_);
  std::vector<Poly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) raw.push_back({s.mono * t.mono, s.coeff * t.coeff});
  p.terms_ = canonicalize(std::move(raw));
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly Poly::scaled(const Rational& c) const {
  check_coefficient(ring_, c);
  Poly p(ring_, nvars_);
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  Poly p(ring_, std::max(nvars_, m.width()));
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;  // multiplying by a monomial preserves the term order
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(ring_, 1, nvars_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < t.mono.width(); ++i) {
      const auto e = t.mono[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += "x" + std::to_string(i + 1);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    const std::string coeff = is_integral(c) ? c.get_str() : "(" + c.get_str() + ")";
    if (factors.empty()) {
      out << coeff;
    } else if (c == 1) {
      out << factors;
    } else {
      out << coeff << '*' << factors;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- calculus and evaluation

Poly partial_derivative(const Poly& p, std::size_t k) {
  if (k == 0 || k > p.nvars()) throw ArityError("partial derivative variable x" + std::to_string(k) + " out of range");
  const std::size_t index = k - 1;
  std::vector<Poly::Term> raw;
  for (const auto& t : p.terms()) {
    const auto e = t.mono[index];
    if (e == 0) continue;
    raw.push_back({t.mono.with_exponent(index, static_cast<Monomial::Exponent>(e - 1)), t.coeff * e});
  }
  return Poly::from_terms(p.ring(), p.nvars(), std::move(raw));
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
  if (images.size() != p.nvars())
    throw ArityError("substitution needs " + std::to_string(p.nvars()) + " images, got " + std::to_string(images.size()));
  std::size_t out_vars = 0;
  for (const auto& img : images) {
    if (img.ring() != p.ring()) throw RingMismatch();
    out_vars = std::max(out_vars, img.nvars());
  }
  // powers[i][e] caches images[i]^e
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(p.ring(), 1, out_vars));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly result(p.ring(), out_vars);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(p.ring(), t.coeff, out_vars);
    for (std::size_t i = 0; i < t.mono.width(); ++i)
      if (t.mono[i] > 0) term *= power(i, t.mono[i]);
    result += term;
  }
  return result;
}

Poly shift_variables(const Poly& p, std::size_t offset) {
  std::vector<Poly::Term> raw;
  raw.reserve(p.terms().size());
  for (const auto& t : p.terms()) raw.push_back({t.mono.shifted(offset), t.coeff});
  Poly out = Poly::from_terms(p.ring(), p.nvars() + offset, std::move(raw));
  return out;
}

Rational eval(const Poly& p, const std::vector<Rational>& point) {
  if (point.size() < p.used_vars()) throw ArityError("evaluation point too short");
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.mono.width(); ++i) {
      const auto e = t.mono[i];
      if (e == 0) continue;
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      v *= pw;
    }
    total += v;
  }
  return total;
}

// ---------------------------------------------------------------- units and division

bool is_unit(const Poly& p) {
  if (!p.is_constant() || p.is_zero()) return false;
  if (p.ring() == CoeffRing::Rationals) return true;
  return abs(p.constant_value()) == 1;
}

Rational unit_part(const Poly& p) {
  if (p.is_zero()) return 1;
  const Rational& lc = p.leading().coeff;
  if (p.ring() == CoeffRing::Rationals) return lc;
  return lc < 0 ? Rational(-1) : Rational(1);
}

Poly unit_normal(const Poly& p) {
  const Rational u = unit_part(p);
  if (u == 1) return p;
  return p.scaled(Rational(1) / u);
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
  if (b.is_zero()) throw DivisionError("division by the zero polynomial");
  const std::size_t nv = std::max(a.nvars(), b.nvars());
  std::vector<Poly::Term> quotient;
  Poly rest = a.with_nvars(nv);
  const auto& lead = b.leading();
  while (!rest.is_zero()) {
    const auto& r = rest.leading();
    if (!lead.mono.divides(r.mono)) return std::nullopt;
    Rational c = r.coeff / lead.coeff;
    if (a.ring() == CoeffRing::Integers && !is_integral(c)) return std::nullopt;
    Monomial m = r.mono / lead.mono;
    rest -= b.times_monomial(m, c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(a.ring(), nv, std::move(quotient));
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw DivisionError("non-exact division of " + a.str() + " by " + b.str());
  return *q;
}

bool divides(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero();
  return try_divide(b, a).has_value();
}

Integer integer_content(const Poly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    if (!is_integral(t.coeff)) throw Error("integer content of a polynomial with fractional coefficients");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// ---------------------------------------------------------------- gcd

namespace {

// Coefficients in the variable `index`, coefficient i multiplying x^i; none of them mention that variable.
std::vector<Poly> split_by(const Poly& p, std::size_t index) {
  std::vector<std::vector<Poly::Term>> buckets(p.degree_in(index) + 1);
  for (const auto& t : p.terms()) buckets[t.mono[index]].push_back({t.mono.with_exponent(index, 0), t.coeff});
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(p.ring(), p.nvars(), std::move(b)));
  return out;
}

Poly leading_coeff_in(const Poly& p, std::size_t index) {
  const unsigned d = p.degree_in(index);
  std::vector<Poly::Term> raw;
  for (const auto& t : p.terms())
    if (t.mono[index] == d) raw.push_back({t.mono.with_exponent(index, 0), t.coeff});
  return Poly::from_terms(p.ring(), p.nvars(), std::move(raw));
}

Poly positive_lead(Poly p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

Poly integer_gcd_poly(const Poly& a, const Poly& b);

// gcd of the coefficients of p viewed as a polynomial in `index`
Poly content_in(const Poly& p, std::size_t index) {
  Poly g(p.ring(), p.nvars());
  for (const auto& c : split_by(p, index)) {
    if (c.is_zero()) continue;
    g = integer_gcd_poly(g, c);
    if (is_unit(g)) break;
  }
  return g;
}

Poly primitive_in(const Poly& p, std::size_t index) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, index));
}

// Pseudo-remainder of a by b with respect to the variable `index`; scaled by a power of lc(b).
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t index) {
  const unsigned db = b.degree_in(index);
  const Poly lcb = leading_coeff_in(b, index);
  while (!a.is_zero() && a.degree_in(index) >= db) {
    const unsigned da = a.degree_in(index);
    const Poly lca = leading_coeff_in(a, index);
    Poly shift = lca * Poly::from_terms(a.ring(), a.nvars(),
                                        {{Monomial::variable(index, static_cast<Monomial::Exponent>(da - db)), Rational(1)}});
    a = lcb * a - shift * b;
  }
  return a;
}

// Primitive remainder sequence in the highest used variable; slow on dense inputs but always terminates.
Poly prs_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  const std::size_t width = std::max(a.used_vars(), b.used_vars());
  const std::size_t nv = std::max(a.nvars(), b.nvars());
  if (width == 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.constant_value().get_num_mpz_t(), b.constant_value().get_num_mpz_t());
    return Poly::constant(a.ring(), Rational(g), nv);
  }
  const std::size_t v = width - 1;
  if (a.degree_in(v) == 0) return integer_gcd_poly(a, content_in(b, v)).with_nvars(nv);
  if (b.degree_in(v) == 0) return integer_gcd_poly(content_in(a, v), b).with_nvars(nv);
  if (divides(a, b)) return positive_lead(a).with_nvars(nv);
  if (divides(b, a)) return positive_lead(b).with_nvars(nv);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  Poly c = integer_gcd_poly(ca, cb);
  Poly x = divide_exact(a, ca);
  Poly y = divide_exact(b, cb);
  if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
  while (true) {
    Poly r = pseudo_remainder(x, y, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      y = Poly::constant(a.ring(), 1, nv);
      break;
    }
    x = std::move(y);
    y = primitive_in(r, v);
  }
  return positive_lead(c * primitive_in(y, v)).with_nvars(nv);
}

Integer max_norm(const Poly& p) {
  Integer n = 0;
  for (const auto& t : p.terms()) {
    const Integer c = abs(t.coeff.get_num());
    if (c > n) n = c;
  }
  return n;
}

Poly evaluate_at(const Poly& p, std::size_t index, const Integer& xi) {
  std::vector<Poly::Term> raw;
  raw.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), xi.get_mpz_t(), t.mono[index]);
    raw.push_back({t.mono.with_exponent(index, 0), Rational(c * t.coeff.get_num())});
  }
  return Poly::from_terms(p.ring(), p.nvars(), std::move(raw));
}

// Inverse of evaluate_at: reads the xi-adic digits of each coefficient, using symmetric remainders.
Poly interpolate_at(Poly image, std::size_t index, const Integer& xi, std::size_t nv) {
  const Integer half = xi / 2;
  std::vector<Poly::Term> out;
  for (Monomial::Exponent power = 0; !image.is_zero(); ++power) {
    if (power > 4096) throw InvariantViolation("heuristic gcd interpolation did not terminate");
    std::vector<Poly::Term> digit;
    std::vector<Poly::Term> rest;
    for (const auto& t : image.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        digit.push_back({t.mono, Rational(r)});
        out.push_back({t.mono.with_exponent(index, power), Rational(r)});
      }
      Integer q = t.coeff.get_num() - r;
      mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
      if (q != 0) rest.push_back({t.mono, Rational(q)});
    }
    image = Poly::from_terms(image.ring(), image.nvars(), std::move(rest));
  }
  return Poly::from_terms(image.ring(), nv, std::move(out));
}

Poly without_integer_content(const Poly& p) {
  const Integer c = integer_content(p);
  if (c == 1) return p;
  std::vector<Poly::Term> raw(p.terms().begin(), p.terms().end());
  for (auto& t : raw) t.coeff /= c;
  return Poly::from_terms(p.ring(), p.nvars(), std::move(raw));
}

// Heuristic gcd by evaluation at a large integer and digit-wise reconstruction; a candidate is accepted
// only after it divides both inputs, so a nullopt result just means "use the remainder sequence".
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  const std::size_t width = std::max(a.used_vars(), b.used_vars());
  const std::size_t nv = std::max(a.nvars(), b.nvars());
  const std::size_t v = width - 1;
  const Integer ca = integer_content(a);
  const Integer cb = integer_content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const Poly pa = without_integer_content(a);
  const Poly pb = without_integer_content(b);
  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  const unsigned degree = std::max(pa.degree_in(v), pb.degree_in(v));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (degree + 1) > 200000) return std::nullopt;
    const Poly ea = evaluate_at(pa, v, xi);
    const Poly eb = evaluate_at(pb, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      const Poly image = integer_gcd_poly(ea, eb);
      Poly candidate = without_integer_content(positive_lead(interpolate_at(image, v, xi, nv)));
      if (!candidate.is_zero() && divides(candidate, pa) && divides(candidate, pb))
        return positive_lead(candidate.scaled(Rational(c))).with_nvars(nv);
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// gcd of two polynomials with integer coefficients; result has positive leading coefficient.
Poly integer_gcd_poly(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  if (std::max(a.used_vars(), b.used_vars()) > 0 && !a.is_constant() && !b.is_constant()) {
    if (auto g = heuristic_gcd(a, b)) return *g;
  }
  return prs_gcd(a, b);
}

// Scales a rational polynomial to an integer primitive one.
Poly clear_to_integer(const Poly& p) {
  Integer l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<Poly::Term> raw;
  for (const auto& t : p.terms()) raw.push_back({t.mono, t.coeff * l});
  return Poly::from_terms(CoeffRing::Integers, p.nvars(), std::move(raw));
}

Poly to_ring(const Poly& p, CoeffRing ring) {
  std::vector<Poly::Term> raw(p.terms().begin(), p.terms().end());
  return Poly::from_terms(ring, p.nvars(), std::move(raw));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
  if (a.is_zero() && b.is_zero()) throw DivisionError("gcd of two zero polynomials");
  if (a.ring() == CoeffRing::Integers) return integer_gcd_poly(a, b);
  const Poly g = integer_gcd_poly(clear_to_integer(a), clear_to_integer(b));
  return unit_normal(to_ring(g, CoeffRing::Rationals));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return Poly::constant(p.ring(), 1, p.nvars());
  Poly prim = p;
  if (p.ring() == CoeffRing::Integers) prim = divide_exact(p, Poly::constant(p.ring(), Rational(integer_content(p)), p.nvars()));
  Poly g = prim;
  for (std::size_t k = 1; k <= p.used_vars(); ++k) {
    if (is_unit(g)) break;
    const Poly d = partial_derivative(prim.with_nvars(std::max(prim.nvars(), k)), k);
    if (!d.is_zero()) g = poly_gcd(g, d);
  }
  return unit_normal(divide_exact(prim, g));
}

Poly radical(const Poly& p) {
  if (p.is_zero()) return p;
  Poly sq = squarefree_part(p);
  if (p.ring() == CoeffRing::Integers)
    sq = sq.scaled(Rational(integer_radical(integer_content(p))));
  return unit_normal(sq);
}

}  // namespace diffrest
