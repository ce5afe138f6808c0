#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "diffrest/finpar.hpp"
#include "diffrest/model.hpp"

namespace diffrest {

// Finite sets and partial functions. Plain objects are bare sets of size 1..max_size;
// additive objects are the cyclic monoids Z_1..Z_max_size.
class FinparModel {
 public:
  using Obj = FinObj;
  using Map = PartialFn;

  explicit FinparModel(std::size_t max_size = 3);

  std::string name() const { return "finpar"; }
  Obj dom(const Map& f) const { return f.source(); }
  Obj cod(const Map& f) const { return f.target(); }
  Map identity(const Obj& a) const { return pf::identity(a); }
  Map compose(const Map& f, const Map& g) const { return pf::compose(f, g); }
  Map restriction(const Map& f) const { return pf::restriction(f); }
  Verdict equal(const Map& f, const Map& g) const { return verdict_of(f == g); }
  std::string show(const Map& f) const { return f.str(); }
  std::string show_object(const Obj& a) const { return a.str(); }

  Obj product(const Obj& a, const Obj& b) const { return diffrest::product(a, b); }
  Obj terminal() const { return terminal_; }
  Map pair(const Map& f, const Map& g) const { return pf::pair(f, g); }
  Map proj0(const Obj& a, const Obj& b) const { return pf::proj0(a, b); }
  Map proj1(const Obj& a, const Obj& b) const { return pf::proj1(a, b); }
  Map bang(const Obj& a) const { return pf::bang(a); }

  Map add(const Map& f, const Map& g) const { return pf::add(f, g); }
  Map zero(const Obj& a, const Obj& b) const { return pf::zero(a, b); }

  Map join(const Map& f, const Map& g) const { return pf::join(f, g); }
  Map empty(const Obj& a, const Obj& b) const { return pf::empty(a, b); }
  Map complement(const Map& f, const Map& g) const { return pf::complement(f, g); }

  // One draw per decision, so exhaustive enumeration visits each object and map exactly once.
  Obj sample_object(Chooser& c, Role role) const;
  Map sample(Chooser& c, const Obj& a, const Obj& b) const;
  Map sample_idempotent(Chooser& c, const Obj& a) const;
  // Every compatible pair exactly once: per point, neither, only one, or both with a common value.
  std::pair<Map, Map> sample_compatible(Chooser& c, const Obj& a, const Obj& b) const;

  // The partial identities on single points; pairwise disjoint and jointly covering.
  std::vector<Map> point_idempotents(const Obj& a) const;

 private:
  std::vector<FinObj> plain_;
  std::vector<FinObj> additive_;
  FinObj terminal_;
};

}  // namespace diffrest
