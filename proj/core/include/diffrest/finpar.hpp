#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace diffrest {

// A finite commutative monoid on {0..k-1}, stored as its addition table.
class Monoid {
 public:
  // Throws InvariantViolation unless the table is commutative, associative and `unit` is neutral.
  Monoid(std::size_t size, std::vector<int> table, int unit);
  static Monoid cyclic(std::size_t k);  // Z_k
  static Monoid product(const Monoid& a, const Monoid& b);

  std::size_t size() const { return size_; }
  int unit() const { return unit_; }
  int add(int x, int y) const { return table_[static_cast<std::size_t>(x) * size_ + static_cast<std::size_t>(y)]; }
  const std::vector<int>& table() const { return table_; }
  friend bool operator==(const Monoid& a, const Monoid& b) {
    return a.size_ == b.size_ && a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  std::size_t size_;
  std::vector<int> table_;
  int unit_;
};

// A finite set {0..k-1}, optionally carrying a commutative monoid.
class FinObj {
 public:
  FinObj() = default;
  explicit FinObj(std::size_t size) : size_(size) {}
  explicit FinObj(Monoid monoid);

  std::size_t size() const { return size_; }
  bool has_monoid() const { return monoid_ != nullptr; }
  const Monoid& monoid() const;  // throws Unsupported when absent

  friend bool operator==(const FinObj& a, const FinObj& b);
  std::string str() const;  // "3" or "Z3"-style label with the table digest

 private:
  std::size_t size_ = 0;
  std::shared_ptr<const Monoid> monoid_;
};

FinObj product(const FinObj& a, const FinObj& b);  // element (x, y) has index x * |b| + y
FinObj terminal_object();

namespace detail {
struct FinparAccess;
}

// Partial function as a lookup table; kUndefined marks points outside the domain.
class PartialFn {
 public:
  static constexpr int kUndefined = -1;
  // Targets are small, so values fit a byte; keeps copies of whole maps cheap.
  using Graph = boost::container::small_vector<std::int8_t, 24>;
  static constexpr std::size_t kMaxTarget = 127;

  PartialFn(FinObj source, FinObj target, Graph graph);  // checks ranges

  const FinObj& source() const { return source_; }
  const FinObj& target() const { return target_; }
  const Graph& graph() const { return graph_; }
  std::optional<int> at(std::size_t x) const;
  bool defined_at(std::size_t x) const { return graph_[x] != kUndefined; }

  friend bool operator==(const PartialFn& a, const PartialFn& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.graph_ == b.graph_;
  }
  std::string str() const;  // "[0 _ 2]"

 private:
  friend struct detail::FinparAccess;
  struct Trusted {};
  PartialFn(FinObj source, FinObj target, Graph graph, Trusted)
      : source_(std::move(source)), target_(std::move(target)), graph_(std::move(graph)) {}

  FinObj source_;
  FinObj target_;
  Graph graph_;
};

namespace pf {

PartialFn identity(const FinObj& a);
PartialFn compose(const PartialFn& f, const PartialFn& g);  // f then g
PartialFn restriction(const PartialFn& f);
PartialFn empty(const FinObj& a, const FinObj& b);

PartialFn pair(const PartialFn& f, const PartialFn& g);
PartialFn proj0(const FinObj& a, const FinObj& b);
PartialFn proj1(const FinObj& a, const FinObj& b);
PartialFn bang(const FinObj& a);

PartialFn add(const PartialFn& f, const PartialFn& g);  // needs a monoid on the target
PartialFn zero(const FinObj& a, const FinObj& b);

// Union of pairwise compatible maps; IncompatibleJoin when two disagree on a common point.
PartialFn join(const std::vector<PartialFn>& family);
PartialFn join(const PartialFn& f, const PartialFn& g);
// f restricted to dom(f) minus dom(g); requires g <= f.
PartialFn complement(const PartialFn& f, const PartialFn& g);

bool leq(const PartialFn& f, const PartialFn& g);  // g extends f, by table inclusion
bool compat(const PartialFn& f, const PartialFn& g);

std::size_t count_maps(const FinObj& a, const FinObj& b);  // (|b|+1)^|a|, saturating
PartialFn nth_map(const FinObj& a, const FinObj& b, std::size_t index);
// Every partial function a -> b; throws Unsupported above `bound` maps.
std::vector<PartialFn> enumerate(const FinObj& a, const FinObj& b, std::size_t bound = 1u << 20);

}  // namespace pf
}  // namespace diffrest
