#pragma once

#include <cstdint>
#include <random>

namespace flaglab {

/// A trial's random source is fixed by the master seed and its stream index.
struct RngSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream = 0;
};

/// Mersenne twister seeded from all 128 bits of an RngSpec, so distinct
/// streams never share a seed sequence.
class Rng {
 public:
  explicit Rng(RngSpec spec);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Number of failures before the first success in Bernoulli(p) trials,
  /// saturated at `limit`. Requires 0 < p < 1.
  std::uint64_t geometric(double p, std::uint64_t limit);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace flaglab
