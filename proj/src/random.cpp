#include "kgg/random.hpp"

#include <cmath>
#include <string>

#include "kgg/error.hpp"

namespace kgg {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = uniform(-1.0, 1.0);
    v = uniform(-1.0, 1.0);
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string_view distribution_name(Distribution d) {
  switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::Gaussian: return "gaussian";
    case Distribution::Clustered: return "clustered";
  }
  return "?";
}

Distribution parse_distribution(std::string_view text) {
  if (text == "uniform" || text == "uniform-square") return Distribution::Uniform;
  if (text == "gaussian") return Distribution::Gaussian;
  if (text == "clustered") return Distribution::Clustered;
  throw InvalidArgument("unknown distribution '" + std::string(text) + "'");
}

PointSet random_points(Rng& rng, int n, Distribution dist, const TolerancePolicy& pol) {
  PointSet pts;
  pts.reserve(static_cast<std::size_t>(n));
  std::vector<Point> centers;
  if (dist == Distribution::Clustered) {
    const int clusters = rng.between(1, 4);
    for (int c = 0; c < clusters; ++c) centers.push_back({rng.uniform(), rng.uniform()});
  }
  while (static_cast<int>(pts.size()) < n) {
    Point p;
    switch (dist) {
      case Distribution::Uniform: p = {rng.uniform(), rng.uniform()}; break;
      case Distribution::Gaussian: p = {rng.normal(), rng.normal()}; break;
      case Distribution::Clustered: {
        const Point& c = centers[rng.below(centers.size())];
        p = {c.x + 0.05 * rng.normal(), c.y + 0.05 * rng.normal()};
        break;
      }
    }
    bool clash = false;
    for (const Point& q : pts) clash = clash || coincident(p, q, pol);
    if (!clash) pts.push_back(p);
  }
  return pts;
}

}  // namespace kgg
