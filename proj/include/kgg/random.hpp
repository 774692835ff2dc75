#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "kgg/geom.hpp"

namespace kgg {

/// Seeded generator with platform-independent output: the engine is
/// std::mt19937_64 (fully specified by the standard) and every conversion to
/// doubles and ranges is done here rather than by <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  /// Standard normal (Marsaglia polar method).
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 mix of (seed, index); independent per-trial streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class Distribution { Uniform, Gaussian, Clustered };

std::string_view distribution_name(Distribution d);
Distribution parse_distribution(std::string_view text);

/// n points with no two coincident under pol. Uniform: unit square.
/// Gaussian: standard normal. Clustered: 1-4 uniform centers with
/// sigma 0.05 scatter.
PointSet random_points(Rng& rng, int n, Distribution dist, const TolerancePolicy& pol = {});

}  // namespace kgg
