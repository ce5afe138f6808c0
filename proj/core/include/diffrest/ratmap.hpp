#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diffrest/fraction.hpp"
#include "diffrest/poly.hpp"

namespace diffrest {

using RatFrac = Frac<Poly>;

namespace detail {
struct RatBuilder;
}

// An arrow n -> m of Rat_R: m rational components in x1..xn plus the generators of its restriction set.
class RatMap {
 public:
  // Checks every denominator against the closure of `gens` (throws InvalidRestrictionSet) and normalizes.
  static RatMap make(CoeffRing ring, std::size_t n, std::size_t m, std::vector<RatFrac> components,
                     std::vector<Poly> gens);

  CoeffRing ring() const { return ring_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const std::vector<RatFrac>& components() const { return components_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool is_empty() const;  // the nowhere-defined map

  std::string str() const;  // map literal in the CLI grammar

 private:
  friend struct detail::RatBuilder;
  RatMap(CoeffRing ring, std::size_t n, std::size_t m) : ring_(ring), n_(n), m_(m) {}

  CoeffRing ring_;
  std::size_t n_;
  std::size_t m_;
  std::vector<RatFrac> components_;
  std::vector<Poly> gens_;
};

std::string frac_str(const Poly& num, const Poly& den);

namespace rat {

// q lies in the factor-closed multiplicative closure of gens
bool membership(const Poly& q, const std::vector<Poly>& gens);
bool restriction_set_equiv(const std::vector<Poly>& a, const std::vector<Poly>& b);
// Pairwise coprime, squarefree, unit-normalized generators with the same closure; {0} when degenerate.
std::vector<Poly> normalize_generators(const std::vector<Poly>& gens, CoeffRing ring, std::size_t nvars);

RatMap identity(CoeffRing ring, std::size_t n);
RatMap proj0(CoeffRing ring, std::size_t a, std::size_t b);  // a+b -> a
RatMap proj1(CoeffRing ring, std::size_t a, std::size_t b);  // a+b -> b
RatMap terminal(CoeffRing ring, std::size_t n);              // n -> 0
RatMap zero(CoeffRing ring, std::size_t n, std::size_t m);
RatMap empty(CoeffRing ring, std::size_t n, std::size_t m);

RatMap compose(const RatMap& f, const RatMap& g);  // f then g
RatMap restriction(const RatMap& f);
RatMap pair(const RatMap& f, const RatMap& g);
RatMap add(const RatMap& f, const RatMap& g);
RatMap differential(const RatMap& f);  // n -> m  gives  n+n -> m, direction first

bool equal(const RatMap& f, const RatMap& g);
bool leq(const RatMap& f, const RatMap& g);
bool compat(const RatMap& f, const RatMap& g);

bool is_linear(const RatMap& f);
bool is_additive(const RatMap& f);
bool is_strongly_additive(const RatMap& f);

struct JoinCandidate {
  RatMap candidate;
  // filled when a probe s was supplied: s(f v g) against sf v sg
  std::optional<RatMap> probe_of_join;
  std::optional<RatMap> join_of_probes;
  std::optional<bool> stable;
};
JoinCandidate candidate_join(const RatMap& f, const RatMap& g, const std::optional<RatMap>& probe = std::nullopt);

// nullopt where the map is undefined (some generator vanishes)
std::optional<std::vector<Rational>> eval(const RatMap& f, const std::vector<Rational>& point);

}  // namespace rat
}  // namespace diffrest
