#pragma once

#include <cstdint>
#include <random>

namespace pbf {

/// std::mt19937_64 seeded through SplitMix64. A given seed always yields the
/// same stream; split() derives independent child streams deterministically,
/// so chunked or parallel sampling stays reproducible.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  /// Child stream `stream`; independent of the parent's draw position.
  Rng split(std::uint64_t stream) const;

  /// Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Beta(a, b) via two gamma variates.
  double beta(double a, double b);

  std::mt19937_64& engine() noexcept { return engine_; }

  static std::uint64_t splitmix64(std::uint64_t x);

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace pbf
