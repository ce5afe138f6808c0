#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diffrest/parse.hpp"
#include "diffrest/rat_model.hpp"

namespace oracle {

// Each component a linear form in x1..xn with no constant term, restricted by sampled generators.
inline diffrest::RatMap sample_linear(const diffrest::RatModel& model, diffrest::Chooser& c, std::size_t n,
                                      std::size_t m) {
  using namespace diffrest;
  std::vector<RatFrac> comps;
  for (std::size_t j = 0; j < m; ++j) {
    Poly form(model.ring(), n);
    for (std::size_t k = 1; k <= n; ++k)
      form = form + parse_poly("x" + std::to_string(k), model.ring(), n).scaled(Rational(c.between(-3, 3)));
    comps.push_back({form, Poly::constant(model.ring(), 1).with_nvars(n)});
  }
  return RatMap::make(model.ring(), n, m, comps, model.sample_generators(c, n));
}

}  // namespace oracle
