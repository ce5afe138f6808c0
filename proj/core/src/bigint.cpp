#include "diffrest/bigint.hpp"

#include <algorithm>

#include "diffrest/errors.hpp"

namespace diffrest {
namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1;
    const unsigned long m = 64;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer d = abs(x - y);
          q = q * d;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_primes(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  collect_primes(d, out);
  collect_primes(n / d, out);
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& n) {
  if (n == 0) throw DivisionError("prime_factors of zero");
  Integer m = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 2000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  collect_primes(m, primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

Integer integer_radical(const Integer& n) {
  if (n == 0) return 0;
  Integer r = 1;
  for (const auto& p : prime_factors(n)) r *= p;
  return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace diffrest
