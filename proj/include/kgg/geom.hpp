#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace kgg {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

/// Absolute tolerance applied to every squared-length predicate discriminant.
struct TolerancePolicy {
  double tau = 1e-9;

  /// Default policy, overridden by the KGG_TAU environment variable when set.
  static TolerancePolicy from_env();
};

/// Throws InvalidArgument unless tau is finite and non-negative.
void validate(const TolerancePolicy& pol);

enum class DiskMembership { Outside, Boundary, Inside };

inline bool counts_as_contained(DiskMembership m) {
  return m != DiskMembership::Outside;
}

inline double dist2(Point p, Point q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

/// d = |ar|^2 + |rb|^2 - |ab|^2, evaluated as 2 (a-r).(b-r).
/// Negative strictly inside the circle with diameter ab, zero on it.
inline double diameter_discriminant(Point a, Point b, Point r) {
  return 2.0 * ((a.x - r.x) * (b.x - r.x) + (a.y - r.y) * (b.y - r.y));
}

/// Classifies r against the closed disk D[a,b]. Throws DegenerateDiameter
/// when a and b coincide within tolerance.
DiskMembership disk_membership(Point a, Point b, Point r, const TolerancePolicy& pol = {});

/// True when p and q are indistinguishable under the policy (|pq| <= tau).
inline bool coincident(Point p, Point q, const TolerancePolicy& pol) {
  return dist2(p, q) <= pol.tau * pol.tau;
}

/// Throws InvalidArgument on a non-finite coordinate and DuplicatePoints
/// when two points coincide within tolerance.
void validate_points(std::span<const Point> pts, const TolerancePolicy& pol);

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn, 0 collinear.
int orientation(Point a, Point b, Point c);

/// True when the open segments pq and rs cross at a single interior point.
bool segments_properly_cross(Point p, Point q, Point r, Point s);

/// Edge weights sorted non-increasingly; compared lexicographically.
class WeightSequence {
 public:
  WeightSequence() = default;
  explicit WeightSequence(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  double front() const { return weights_.empty() ? 0.0 : weights_.front(); }

 private:
  std::vector<double> weights_;
};

/// Lexicographic order; a proper prefix compares less.
std::weak_ordering compare_ws(const WeightSequence& lhs, const WeightSequence& rhs);

}  // namespace kgg
