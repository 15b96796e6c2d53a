#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sqw {

/// Seeded generator behind every stochastic routine. The engine and the
/// double conversion are fixed so streams are identical across platforms;
/// bump the version string if either ever changes.
class WalkRng {
 public:
  static constexpr std::string_view kName = "mt19937_64/v1";

  explicit WalkRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  /// Seed of the index-th independent stream derived from `seed`.
  static constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t index) noexcept { return seed ^ index; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sqw
