#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace diffrest {

// 64-bit splitmix stream; the fixed generator behind every seeded sample.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), bound > 0
  long between(long lo, long hi);            // uniform in [lo, hi]

 private:
  std::uint64_t state_;
};

// Mixes a base seed with stream coordinates (axiom index, case index, ...).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

// Source of discrete choices; samplers draw every random decision through it so the
// same generator code supports seeded random runs and exhaustive enumeration.
class Chooser {
 public:
  virtual ~Chooser() = default;
  virtual std::size_t choose(std::size_t count) = 0;  // value in [0, count)
  virtual bool exhaustive() const { return false; }

  long between(long lo, long hi) { return lo + static_cast<long>(choose(static_cast<std::size_t>(hi - lo + 1))); }
  bool coin(std::size_t one_in) { return choose(one_in) == 0; }
};

class RandomChooser final : public Chooser {
 public:
  explicit RandomChooser(std::uint64_t seed) : rng_(seed) {}
  std::size_t choose(std::size_t count) override;

 private:
  SplitMix64 rng_;
};

// Depth-first enumeration of every choice sequence (an odometer over the decision trail).
class EnumeratingChooser final : public Chooser {
 public:
  std::size_t choose(std::size_t count) override;
  bool exhaustive() const override { return true; }
  // Moves to the next unexplored sequence; false once everything has been visited.
  bool advance();

 private:
  std::vector<std::pair<std::size_t, std::size_t>> trail_;  // (current value, count)
  std::size_t position_ = 0;
};

}  // namespace diffrest
