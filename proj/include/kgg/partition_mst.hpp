#pragma once

#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "kgg/geom.hpp"
#include "kgg/graph.hpp"

namespace kgg {

/// Disjoint, non-empty classes of point indices. The ground set is their union.
struct Partition {
  std::vector<std::vector<int>> classes;

  std::vector<int> ground_set() const;

  /// One class per index of pts.
  static Partition singletons(std::size_t n);
};

/// Closest pair between two classes.
struct ClassLink {
  int class_a = 0;
  int class_b = 0;
  Edge witness;      ///< point indices realizing the class distance
  double len2 = 0.0; ///< squared distance between the classes
};

/// Complete graph on the classes, weighted by nearest inter-class distance.
struct ClassGraph {
  int classes = 0;
  std::vector<ClassLink> links;  ///< one per class pair (i < j), in row order
};

struct WitnessEdge {
  Edge points;   ///< the straight-line edge (a, b) in the point set
  int class_a = 0;
  int class_b = 0;
  double length = 0.0;
};

/// Edges of the point set realizing a minimum spanning tree of the class graph.
struct WitnessTree {
  std::vector<WitnessEdge> edges;
};

struct Disk {
  Point center;
  double radius2 = 0.0;
  Point a;  ///< diameter endpoints
  Point b;
  Edge witness;
};

struct DiskSystem {
  std::vector<Disk> disks;
};

struct DepthReport {
  int depth = 0;
  Point where;
};

/// Throws EmptyClass for an empty class and InvalidArgument for an index
/// outside pts or shared between classes. Ties between equally close pairs
/// go to the lexicographically smallest (a, b) with a in the lower class.
ClassGraph partition_graph(std::span<const Point> pts, const Partition& partition);

/// Kruskal over the class graph; ties broken by the witness pair so that the
/// result is deterministic.
WitnessTree mst_witness(const ClassGraph& graph);

/// Euclidean minimum spanning tree under the same tie-breaking rule.
WitnessTree euclidean_mst(std::span<const Point> pts);

/// Minimum spanning forest of an abstract weighted graph (Kruskal, ties by
/// edge). Returns indices into edges.
std::vector<std::size_t> minimum_spanning_forest(int n, std::span<const Edge> edges,
                                                 std::span<const double> weights);

DiskSystem disk_system(std::span<const Point> pts, const WitnessTree& tree);

/// Largest number of closed disks sharing a point. With probe points, the
/// maximum is over those points; otherwise over the whole plane, evaluated at
/// every disk center and pairwise boundary intersection. A disk does not
/// count at its own diameter endpoints, where tree edges meet.
DepthReport max_depth(const DiskSystem& system, std::optional<std::span<const Point>> probes = {},
                      const TolerancePolicy& pol = {});

/// True iff no disk contains (closed) the center of another disk.
bool center_exclusion_check(const DiskSystem& system, const TolerancePolicy& pol = {});

/// Indices of ground-set points lying in a disk other than at its endpoints.
/// Empty for every system built from a valid partition.
std::vector<std::pair<std::size_t, int>> disk_emptiness_violations(const DiskSystem& system,
                                                                   std::span<const Point> pts,
                                                                   std::span<const int> ground,
                                                                   const TolerancePolicy& pol = {});

/// Circle-circle intersections in squared-length form; tangency within
/// tolerance yields one point.
std::vector<Point> circle_intersections(Point c1, double r1sq, Point c2, double r2sq,
                                        const TolerancePolicy& pol = {});

}  // namespace kgg
