#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgg/geom.hpp"
#include "kgg/graph.hpp"

namespace kgg {

/// A point set with optional per-point names and numeric parameters.
struct LabeledInstance {
  PointSet points;
  std::vector<std::string> labels;  ///< parallel to points; empty string = unlabeled
  std::map<std::string, double> params;

  /// Throws InvalidArgument when no point carries the label.
  int index_of(std::string_view label) const;
};

/// Extra points meant to separate every pair of original points.
struct BlockerSet {
  PointSet blockers;
  int order = 0;
};

struct BlockingReport {
  bool blocked = false;
  std::vector<Edge> unblocked;  ///< P-P edges surviving in k-GG(P + K)
};

inline constexpr double kDefaultCounterexampleEps = 0.005;

/// First violated constraint of the 20-point configuration at this eps, if any.
std::optional<std::string> counterexample_violation(double eps);

/// Supremum of eps for which every constraint of the 20-point configuration
/// holds, located by bisection on counterexample_violation.
double counterexample_eps_max();

/// Twenty points "a", "b", "u1".."u9", "r1".."r9": |ab| = 1 centered at the
/// origin along 10 degrees, u_j at radius 1/2 - eps and r_j at radius 3/2,
/// both in direction 40 j degrees. Every bottleneck matching uses (a, b), whose
/// diameter disk holds the nine u_j. Throws ConstraintViolated on bad eps.
LabeledInstance gen_counterexample_8gg(double eps = kDefaultCounterexampleEps);

/// Seventeen lattice points whose Gabriel graph is a tree of maximum degree 4
/// with maximum matching 4 and independence number 13. Self-verified.
LabeledInstance gen_tight_0gg();

/// Thirteen points forming a corner-sharing chain of four unit squares, and
/// one blocker at each square center. Self-verified.
std::pair<LabeledInstance, BlockerSet> gen_blocking_tight();

/// 1e-4 times the smallest pairwise distance of pts.
double default_blocker_offset(std::span<const Point> pts);

/// k + 1 points at offsets (j delta, 0), j = 1..k+1, from every point except
/// the lexicographically largest one. Pairs sharing an x-coordinate are not
/// separated by this construction; verify_blocked reports them.
BlockerSet blockers_right(std::span<const Point> pts, int k, double delta);

/// Checks that no two points of pts are adjacent in k-GG(pts + blockers).
BlockingReport verify_blocked(std::span<const Point> pts, std::span<const Point> blockers, int k,
                              const TolerancePolicy& pol = {});

/// n points at (i * spacing, 0).
PointSet gen_collinear(int n, double spacing = 1.0);

}  // namespace kgg
