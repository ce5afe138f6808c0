#include "diffrest/finpar.hpp"
#include "diffrest/finpar_model.hpp"

#include <limits>
#include <sstream>

#include "diffrest/errors.hpp"

namespace diffrest {

Monoid::Monoid(std::size_t size, std::vector<int> table, int unit)
    : size_(size), table_(std::move(table)), unit_(unit) {
  if (table_.size() != size_ * size_) throw InvariantViolation("monoid table has the wrong shape");
  const int k = static_cast<int>(size_);
  if (unit_ < 0 || unit_ >= k) throw InvariantViolation("monoid unit out of range");
  for (int v : table_)
    if (v < 0 || v >= k) throw InvariantViolation("monoid table entry out of range");
  for (int x = 0; x < k; ++x) {
    if (add(unit_, x) != x) throw InvariantViolation("monoid unit is not neutral");
    for (int y = 0; y < k; ++y) {
      if (add(x, y) != add(y, x)) throw InvariantViolation("monoid is not commutative");
      for (int z = 0; z < k; ++z)
        if (add(add(x, y), z) != add(x, add(y, z))) throw InvariantViolation("monoid is not associative");
    }
  }
}

Monoid Monoid::cyclic(std::size_t k) {
  std::vector<int> table(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) table[x * k + y] = static_cast<int>((x + y) % k);
  return Monoid(k, std::move(table), 0);
}

Monoid Monoid::product(const Monoid& a, const Monoid& b) {
  const std::size_t k = a.size() * b.size();
  std::vector<int> table(k * k);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      const int x = a.add(static_cast<int>(p / b.size()), static_cast<int>(q / b.size()));
      const int y = b.add(static_cast<int>(p % b.size()), static_cast<int>(q % b.size()));
      table[p * k + q] = x * static_cast<int>(b.size()) + y;
    }
  return Monoid(k, std::move(table), a.unit() * static_cast<int>(b.size()) + b.unit());
}

FinObj::FinObj(Monoid monoid) : size_(monoid.size()), monoid_(std::make_shared<const Monoid>(std::move(monoid))) {}

const Monoid& FinObj::monoid() const {
  if (!monoid_) throw Unsupported("object " + str() + " carries no monoid");
  return *monoid_;
}

bool operator==(const FinObj& a, const FinObj& b) {
  if (a.size_ != b.size_ || a.has_monoid() != b.has_monoid()) return false;
  return !a.has_monoid() || a.monoid_ == b.monoid_ || *a.monoid_ == *b.monoid_;
}

std::string FinObj::str() const {
  if (!monoid_) return std::to_string(size_);
  std::ostringstream out;
  out << "M" << size_ << "<";
  for (std::size_t i = 0; i < monoid_->table().size(); ++i) out << monoid_->table()[i];
  out << ">";
  return out.str();
}

FinObj product(const FinObj& a, const FinObj& b) {
  if (a.has_monoid() && b.has_monoid()) return FinObj(Monoid::product(a.monoid(), b.monoid()));
  return FinObj(a.size() * b.size());
}

FinObj terminal_object() { return FinObj(Monoid(1, {0}, 0)); }

PartialFn::PartialFn(FinObj source, FinObj target, Graph graph)
    : source_(std::move(source)), target_(std::move(target)), graph_(std::move(graph)) {
  if (graph_.size() != source_.size()) throw ArityError("graph length differs from the source size");
  if (target_.size() > kMaxTarget) throw Unsupported("target carrier too large for a partial function table");
  for (int v : graph_)
    if (v != kUndefined && (v < 0 || static_cast<std::size_t>(v) >= target_.size()))
      throw ArityError("graph value outside the target");
}

std::optional<int> PartialFn::at(std::size_t x) const {
  if (graph_[x] == kUndefined) return std::nullopt;
  return graph_[x];
}

std::string PartialFn::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < graph_.size(); ++i) {
    if (i > 0) out << " ";
    if (graph_[i] == kUndefined) out << "_";
    else out << static_cast<int>(graph_[i]);
  }
  out << "]";
  return out.str();
}

namespace detail {

// Operations below build graphs that are in range by construction and skip the checks.
struct FinparAccess {
  static PartialFn make(const FinObj& source, const FinObj& target, PartialFn::Graph graph) {
    return PartialFn(source, target, std::move(graph), PartialFn::Trusted{});
  }
};

}  // namespace detail

namespace pf {
namespace {

using detail::FinparAccess;

void require_parallel(const PartialFn& f, const PartialFn& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) throw ArityError("maps are not parallel");
}

}  // namespace

PartialFn identity(const FinObj& a) {
  PartialFn::Graph graph(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) graph[i] = static_cast<int>(i);
  return FinparAccess::make(a, a, std::move(graph));
}

PartialFn compose(const PartialFn& f, const PartialFn& g) {
  if (!(f.target() == g.source())) throw ArityError("composition arity mismatch");
  PartialFn::Graph graph(f.source().size(), PartialFn::kUndefined);
  for (std::size_t x = 0; x < graph.size(); ++x) {
    const int y = f.graph()[x];
    if (y != PartialFn::kUndefined) graph[x] = g.graph()[static_cast<std::size_t>(y)];
  }
  return FinparAccess::make(f.source(), g.target(), std::move(graph));
}

PartialFn restriction(const PartialFn& f) {
  PartialFn::Graph graph(f.source().size(), PartialFn::kUndefined);
  for (std::size_t x = 0; x < graph.size(); ++x)
    if (f.defined_at(x)) graph[x] = static_cast<int>(x);
  return FinparAccess::make(f.source(), f.source(), std::move(graph));
}

PartialFn empty(const FinObj& a, const FinObj& b) {
  return FinparAccess::make(a, b, PartialFn::Graph(a.size(), PartialFn::kUndefined));
}

PartialFn pair(const PartialFn& f, const PartialFn& g) {
  if (!(f.source() == g.source())) throw ArityError("pairing needs a common source");
  const FinObj target = product(f.target(), g.target());
  if (target.size() > PartialFn::kMaxTarget) throw Unsupported("pairing target too large");
  PartialFn::Graph graph(f.source().size(), PartialFn::kUndefined);
  const int width = static_cast<int>(g.target().size());
  for (std::size_t x = 0; x < graph.size(); ++x)
    if (f.defined_at(x) && g.defined_at(x)) graph[x] = f.graph()[x] * width + g.graph()[x];
  return FinparAccess::make(f.source(), target, std::move(graph));
}

PartialFn proj0(const FinObj& a, const FinObj& b) {
  PartialFn::Graph graph(a.size() * b.size());
  for (std::size_t p = 0; p < graph.size(); ++p) graph[p] = static_cast<int>(p / b.size());
  return FinparAccess::make(product(a, b), a, std::move(graph));
}

PartialFn proj1(const FinObj& a, const FinObj& b) {
  PartialFn::Graph graph(a.size() * b.size());
  for (std::size_t p = 0; p < graph.size(); ++p) graph[p] = static_cast<int>(p % b.size());
  return FinparAccess::make(product(a, b), b, std::move(graph));
}

PartialFn bang(const FinObj& a) { return FinparAccess::make(a, terminal_object(), PartialFn::Graph(a.size(), 0)); }

PartialFn add(const PartialFn& f, const PartialFn& g) {
  require_parallel(f, g);
  const Monoid& m = f.target().monoid();
  PartialFn::Graph graph(f.source().size(), PartialFn::kUndefined);
  for (std::size_t x = 0; x < graph.size(); ++x)
    if (f.defined_at(x) && g.defined_at(x)) graph[x] = m.add(f.graph()[x], g.graph()[x]);
  return FinparAccess::make(f.source(), f.target(), std::move(graph));
}

PartialFn zero(const FinObj& a, const FinObj& b) {
  return FinparAccess::make(a, b, PartialFn::Graph(a.size(), b.monoid().unit()));
}

PartialFn join(const PartialFn& f, const PartialFn& g) {
  require_parallel(f, g);
  PartialFn::Graph graph = f.graph();
  for (std::size_t x = 0; x < graph.size(); ++x) {
    const int v = g.graph()[x];
    if (v == PartialFn::kUndefined) continue;
    if (graph[x] != PartialFn::kUndefined && graph[x] != v)
      throw IncompatibleJoin("maps disagree at point " + std::to_string(x));
    graph[x] = v;
  }
  return FinparAccess::make(f.source(), f.target(), std::move(graph));
}

PartialFn join(const std::vector<PartialFn>& family) {
  if (family.empty()) throw ArityError("join of an empty family needs explicit objects; use empty()");
  PartialFn acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = join(acc, family[i]);
  return acc;
}

PartialFn complement(const PartialFn& f, const PartialFn& g) {
  if (!leq(g, f)) throw InvariantViolation("complement needs the second map below the first");
  PartialFn::Graph graph = f.graph();
  for (std::size_t x = 0; x < graph.size(); ++x)
    if (g.defined_at(x)) graph[x] = PartialFn::kUndefined;
  return FinparAccess::make(f.source(), f.target(), std::move(graph));
}

bool leq(const PartialFn& f, const PartialFn& g) {
  require_parallel(f, g);
  for (std::size_t x = 0; x < f.graph().size(); ++x)
    if (f.defined_at(x) && f.graph()[x] != g.graph()[x]) return false;
  return true;
}

bool compat(const PartialFn& f, const PartialFn& g) {
  require_parallel(f, g);
  for (std::size_t x = 0; x < f.graph().size(); ++x)
    if (f.defined_at(x) && g.defined_at(x) && f.graph()[x] != g.graph()[x]) return false;
  return true;
}

std::size_t count_maps(const FinObj& a, const FinObj& b) {
  std::size_t total = 1;
  const std::size_t base = b.size() + 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / base) return std::numeric_limits<std::size_t>::max();
    total *= base;
  }
  return total;
}

PartialFn nth_map(const FinObj& a, const FinObj& b, std::size_t index) {
  const std::size_t base = b.size() + 1;
  PartialFn::Graph graph(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    graph[x] = static_cast<int>(index % base) - 1;  // digit 0 is "undefined"
    index /= base;
  }
  return FinparAccess::make(a, b, std::move(graph));
}

std::vector<PartialFn> enumerate(const FinObj& a, const FinObj& b, std::size_t bound) {
  const std::size_t total = count_maps(a, b);
  if (total > bound) throw Unsupported("enumeration of " + a.str() + " -> " + b.str() + " exceeds the bound");
  std::vector<PartialFn> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.push_back(nth_map(a, b, i));
  return out;
}

}  // namespace pf
}  // namespace diffrest

namespace diffrest {

FinparModel::FinparModel(std::size_t max_size) : terminal_(terminal_object()) {
  for (std::size_t k = 1; k <= max_size; ++k) {
    plain_.emplace_back(k);
    additive_.emplace_back(k == 1 ? terminal_object().monoid() : Monoid::cyclic(k));
  }
}

FinObj FinparModel::sample_object(Chooser& c, Role role) const {
  const auto& pool = role == Role::additive ? additive_ : plain_;
  return pool[c.choose(pool.size())];
}

PartialFn FinparModel::sample(Chooser& c, const FinObj& a, const FinObj& b) const {
  const std::size_t count = pf::count_maps(a, b);
  if (count > (std::size_t{1} << 40)) throw Unsupported("too many maps to sample from " + a.str() + " -> " + b.str());
  return pf::nth_map(a, b, c.choose(count));
}

PartialFn FinparModel::sample_idempotent(Chooser& c, const FinObj& a) const {
  if (a.size() >= 40) throw Unsupported("object too large for idempotent sampling");
  const std::size_t mask = c.choose(std::size_t{1} << a.size());
  PartialFn::Graph graph(a.size(), PartialFn::kUndefined);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (mask >> x & 1U) graph[x] = static_cast<int>(x);
  return detail::FinparAccess::make(a, a, std::move(graph));
}

std::pair<PartialFn, PartialFn> FinparModel::sample_compatible(Chooser& c, const FinObj& a, const FinObj& b) const {
  const std::size_t k = b.size();
  const std::size_t per_point = 3 * k + 1;
  std::size_t count = 1;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (count > (std::size_t{1} << 40) / per_point) throw Unsupported("too many compatible pairs to sample");
    count *= per_point;
  }
  std::size_t index = c.choose(count);
  PartialFn::Graph f(a.size(), PartialFn::kUndefined), g(a.size(), PartialFn::kUndefined);
  for (std::size_t x = 0; x < a.size(); ++x) {
    const std::size_t digit = index % per_point;
    index /= per_point;
    if (digit == 0) continue;
    const int value = static_cast<int>((digit - 1) % k);
    switch ((digit - 1) / k) {
      case 0: f[x] = static_cast<std::int8_t>(value); break;
      case 1: g[x] = static_cast<std::int8_t>(value); break;
      default: f[x] = g[x] = static_cast<std::int8_t>(value); break;
    }
  }
  return {detail::FinparAccess::make(a, b, std::move(f)), detail::FinparAccess::make(a, b, std::move(g))};
}

std::vector<PartialFn> FinparModel::point_idempotents(const FinObj& a) const {
  std::vector<PartialFn> out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    PartialFn::Graph graph(a.size(), PartialFn::kUndefined);
    graph[x] = static_cast<int>(x);
    out.emplace_back(a, a, std::move(graph));
  }
  return out;
}

}  // namespace diffrest
