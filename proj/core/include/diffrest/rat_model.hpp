#pragma once

#include <cstddef>
#include <string>

#include "diffrest/model.hpp"
#include "diffrest/ratmap.hpp"

namespace diffrest {

// Bounds for randomly generated rational maps.
struct RatSampleBounds {
  std::size_t max_arity = 2;
  unsigned max_degree = 2;
  std::size_t max_terms = 3;
  std::size_t max_generators = 2;
  long max_coefficient = 4;
};

// Rat_R as a differential restriction model; objects are arities.
class RatModel {
 public:
  using Obj = std::size_t;
  using Map = RatMap;

  explicit RatModel(CoeffRing ring, RatSampleBounds bounds = {}) : ring_(ring), bounds_(bounds) {}

  CoeffRing ring() const { return ring_; }
  const RatSampleBounds& bounds() const { return bounds_; }
  std::string name() const { return std::string("Rat_") + std::string(ring_name(ring_)); }

  Obj dom(const Map& f) const { return f.n(); }
  Obj cod(const Map& f) const { return f.m(); }
  Map identity(Obj a) const { return rat::identity(ring_, a); }
  Map compose(const Map& f, const Map& g) const { return rat::compose(f, g); }
  Map restriction(const Map& f) const { return rat::restriction(f); }
  Verdict equal(const Map& f, const Map& g) const { return verdict_of(rat::equal(f, g)); }
  std::string show(const Map& f) const { return f.str(); }
  std::string show_object(Obj a) const { return std::to_string(a); }

  Obj product(Obj a, Obj b) const { return a + b; }
  Obj terminal() const { return 0; }
  Map pair(const Map& f, const Map& g) const { return rat::pair(f, g); }
  Map proj0(Obj a, Obj b) const { return rat::proj0(ring_, a, b); }
  Map proj1(Obj a, Obj b) const { return rat::proj1(ring_, a, b); }
  Map bang(Obj a) const { return rat::terminal(ring_, a); }

  Map add(const Map& f, const Map& g) const { return rat::add(f, g); }
  Map zero(Obj a, Obj b) const { return rat::zero(ring_, a, b); }
  Map diff(const Map& f) const { return rat::differential(f); }
  Map empty(Obj a, Obj b) const { return rat::empty(ring_, a, b); }

  Obj sample_object(Chooser& c, Role role) const;
  Map sample(Chooser& c, Obj a, Obj b) const;
  Map sample_idempotent(Chooser& c, Obj a) const;

  // Building blocks of the sampler, exposed for tests and benchmarks.
  Poly sample_poly(Chooser& c, std::size_t nvars, bool allow_constant) const;
  std::vector<Poly> sample_generators(Chooser& c, std::size_t nvars) const;

 private:
  Rational sample_coefficient(Chooser& c) const;

  CoeffRing ring_;
  RatSampleBounds bounds_;
};

}  // namespace diffrest
