#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kgg/geom.hpp"
#include "kgg/graph.hpp"

namespace kgg {

// Oracle size caps. Each exhaustive routine refuses larger inputs with TooLarge.
inline constexpr int kMaxEnumerationVertices = 14;
inline constexpr int kMaxDeficiencyVertices = 16;
inline constexpr int kMaxIndependenceVertices = 20;

/// A set of vertex-disjoint pairs. When the matching lives on a point set,
/// ws holds the Euclidean edge lengths and bottleneck is the longest one.
struct Matching {
  std::vector<Edge> pairs;
  WeightSequence ws;
  double bottleneck = 0.0;

  std::size_t size() const { return pairs.size(); }
  bool contains(Edge e) const;
};

/// Sorts the pairs and, if pts is non-empty, fills ws and bottleneck.
/// Throws InvalidArgument when two pairs share a vertex.
Matching make_matching(std::vector<Edge> pairs, std::span<const Point> pts = {});

/// Maximum-cardinality matching of a general graph (Edmonds' blossom search).
Matching max_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// Number of odd components of G - S.
int odd_components_without(const Graph& g, std::span<const int> removed);

/// Tutte's condition o(G - S) <= |S| for every S, by subset enumeration.
bool tutte_condition(const Graph& g);

struct DeficiencyReport {
  int deficiency = 0;
  std::vector<int> witness;
};

/// max over S of o(G - S) - |S| with the first maximizing S in subset order.
/// Throws TooLarge above kMaxDeficiencyVertices.
DeficiencyReport deficiency(const Graph& g);

struct BottleneckOptions {
  /// Candidate edges; every pair of points when absent.
  std::optional<std::vector<Edge>> allowed;
  /// One edge excluded from the candidates.
  std::optional<Edge> forbid;
};

/// Perfect matching minimizing the longest edge. Throws OddCardinality for
/// odd n and NoPerfectMatching when the candidate edges admit none.
Matching bottleneck_matching(std::span<const Point> pts, const BottleneckOptions& options = {});

/// Calls visit once per perfect matching of g; visit returns false to stop.
/// Returns the number of matchings visited.
std::size_t enumerate_perfect_matchings(const Graph& g,
                                        const std::function<bool(std::span<const Edge>)>& visit);

/// Same, over the complete graph on n vertices.
std::size_t enumerate_perfect_matchings(int n,
                                        const std::function<bool(std::span<const Edge>)>& visit);

/// Perfect matching with the lexicographically smallest weight sequence,
/// found by exhaustive enumeration; ties keep the first matching found.
Matching lexmin_matching(std::span<const Point> pts);

/// Exact size of a maximum independent set. Throws TooLarge above
/// kMaxIndependenceVertices.
int independence_number(const Graph& g);

}  // namespace kgg
