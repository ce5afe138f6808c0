#include "diffrest/sampler.hpp"

#include "diffrest/errors.hpp"

namespace diffrest {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw Error("SplitMix64::below(0)");
  // rejection sampling keeps the distribution exactly uniform
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = next(); while (x >= limit);
  return x % bound;
}

long SplitMix64::between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  SplitMix64 mix(seed ^ (a * 0xD1B54A32D192ED03ull));
  mix.next();
  SplitMix64 again(mix.next() ^ (b * 0x8CB92BA72F3D8DD7ull));
  return again.next();
}

std::size_t RandomChooser::choose(std::size_t count) {
  if (count == 0) throw Error("choose(0)");
  return static_cast<std::size_t>(rng_.below(count));
}

std::size_t EnumeratingChooser::choose(std::size_t count) {
  if (count == 0) throw Error("choose(0)");
  if (position_ < trail_.size()) {
    auto& [value, n] = trail_[position_++];
    if (n != count) throw InvariantViolation("enumeration replay diverged");
    return value;
  }
  trail_.emplace_back(0, count);
  ++position_;
  return 0;
}

bool EnumeratingChooser::advance() {
  // drop decisions that were never replayed on the last pass
  trail_.resize(position_);
  position_ = 0;
  while (!trail_.empty()) {
    auto& [value, n] = trail_.back();
    if (++value < n) return true;
    trail_.pop_back();
  }
  return false;
}

}  // namespace diffrest
