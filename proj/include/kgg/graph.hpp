#pragma once

#include <compare>
#include <utility>
#include <cstddef>
#include <vector>

namespace kgg {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edge_list);

  std::vector<std::vector<int>> adjacency() const;
  bool has_edge(int u, int v) const;
};

/// Index of the unordered pair {i, j} (i != j) in a packed upper triangle.
inline std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  const auto ii = static_cast<std::size_t>(i);
  const auto nn = static_cast<std::size_t>(n);
  return ii * (2 * nn - ii - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

}  // namespace kgg
