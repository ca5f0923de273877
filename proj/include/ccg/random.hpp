#pragma once

// Portable seeded randomness. std::mt19937_64 produces the same stream on
// every conforming implementation; the standard distributions do not, so
// doubles are formed from the top 53 bits directly. Per-trial streams are
// derived from (seed, trial) with the SplitMix64 finalizer, which makes every
// trial independent of evaluation order.

#include <cstdint>
#include <random>

namespace ccg {

/// SplitMix64 finalizer applied to seed + golden-ratio increments.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(mix_seed(seed, trial)); }

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ccg
