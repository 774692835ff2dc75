#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "kgg/geom.hpp"
#include "kgg/graph.hpp"

namespace kgg {

enum class Family { GG, RNG, DG };

std::string_view family_name(Family f);
/// Accepts "GG", "RNG", "DG" (case-insensitive); throws InvalidArgument otherwise.
Family parse_family(std::string_view text);

/// Order-k proximity graph together with the witness count of every pair.
///
/// depth(i, j) is the number of points counted against the pair: points of
/// the closed diameter disk for GG, of the open lune for RNG, and the
/// smallest number of points strictly inside any circle through both
/// endpoints for DG. The pair is an edge iff depth <= order.
class ProximityGraph {
 public:
  ProximityGraph(Family family, int order, int n, std::vector<int> depths);

  Family family() const { return family_; }
  int order() const { return order_; }
  int size() const { return n_; }
  int depth(int i, int j) const { return depths_[pair_index(n_, i, j)]; }
  const std::vector<Edge>& edges() const { return graph_.edges; }
  const Graph& graph() const { return graph_; }
  bool has_edge(int i, int j) const { return i != j && depth(i, j) <= order_; }

  /// Same depths, different threshold.
  ProximityGraph with_order(int order) const;

 private:
  Family family_;
  int order_;
  int n_;
  std::vector<int> depths_;
  Graph graph_;
};

/// Points of P other than p_i, p_j inside or on the circle with diameter p_i p_j.
int edge_depth_gg(std::span<const Point> pts, int i, int j, const TolerancePolicy& pol = {});
/// Points of P other than p_i, p_j strictly inside the lune of p_i p_j.
int edge_depth_rng(std::span<const Point> pts, int i, int j, const TolerancePolicy& pol = {});
/// Minimum, over circles through p_i and p_j, of the points strictly inside.
int edge_depth_dg(std::span<const Point> pts, int i, int j, const TolerancePolicy& pol = {});

ProximityGraph build_kgg(std::span<const Point> pts, int k, const TolerancePolicy& pol = {});
ProximityGraph build_krng(std::span<const Point> pts, int k, const TolerancePolicy& pol = {});
ProximityGraph build_kdg(std::span<const Point> pts, int k, const TolerancePolicy& pol = {});
ProximityGraph build_proximity(Family family, std::span<const Point> pts, int k,
                               const TolerancePolicy& pol = {});

}  // namespace kgg
