#include "kgg/geom.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <tuple>
#include <string>

#include "kgg/error.hpp"

namespace kgg {

TolerancePolicy TolerancePolicy::from_env() {
  TolerancePolicy pol;
  if (const char* env = std::getenv("KGG_TAU"); env != nullptr && *env != '\0') {
    const std::string text = env;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
      throw InvalidArgument("KGG_TAU is not a number: '" + text + "'");
    }
    pol.tau = value;
  }
  validate(pol);
  return pol;
}

void validate(const TolerancePolicy& pol) {
  if (!std::isfinite(pol.tau) || pol.tau < 0.0) {
    throw InvalidArgument("tolerance must be finite and non-negative");
  }
}

DiskMembership disk_membership(Point a, Point b, Point r, const TolerancePolicy& pol) {
  if (coincident(a, b, pol)) {
    throw DegenerateDiameter("diameter endpoints coincide within tolerance");
  }
  const double d = diameter_discriminant(a, b, r);
  if (d < -pol.tau) return DiskMembership::Inside;
  if (d > pol.tau) return DiskMembership::Outside;
  return DiskMembership::Boundary;
}

void validate_points(std::span<const Point> pts, const TolerancePolicy& pol) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
      throw InvalidArgument("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  // Sort by x so only a narrow window of candidates needs checking.
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return std::tie(pts[l].x, pts[l].y, l) < std::tie(pts[r].x, pts[r].y, r);
  });
  const double reach = pol.tau;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Point& p = pts[order[i]];
      const Point& q = pts[order[j]];
      if (q.x - p.x > reach) break;
      if (coincident(p, q, pol)) {
        const auto lo = std::min(order[i], order[j]);
        const auto hi = std::max(order[i], order[j]);
        throw DuplicatePoints("points " + std::to_string(lo) + " and " + std::to_string(hi) +
                              " coincide within tolerance");
      }
    }
  }
}

int orientation(Point a, Point b, Point c) {
  const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (cross > 0.0) - (cross < 0.0);
}

bool segments_properly_cross(Point p, Point q, Point r, Point s) {
  const int o1 = orientation(p, q, r);
  const int o2 = orientation(p, q, s);
  const int o3 = orientation(r, s, p);
  const int o4 = orientation(r, s, q);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

WeightSequence::WeightSequence(std::vector<double> weights) : weights_(std::move(weights)) {
  std::sort(weights_.begin(), weights_.end(), std::greater<>());
}

std::weak_ordering compare_ws(const WeightSequence& lhs, const WeightSequence& rhs) {
  const auto& a = lhs.weights();
  const auto& b = rhs.weights();
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] < b[i]) return std::weak_ordering::less;
    if (b[i] < a[i]) return std::weak_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace kgg
