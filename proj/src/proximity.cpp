#include "kgg/proximity.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

#include "graph_util.hpp"
#include "kgg/error.hpp"
#include "kgg/simd/kernels.hpp"

namespace kgg {

Graph::Graph(int vertex_count, std::vector<Edge> edge_list)
    : n(vertex_count), edges(std::move(edge_list)) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") is not a valid simple edge");
    }
  }
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool Graph::has_edge(int u, int v) const {
  return u != v && std::binary_search(edges.begin(), edges.end(), Edge(u, v));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::GG: return "GG";
    case Family::RNG: return "RNG";
    case Family::DG: return "DG";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string up(text);
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "GG") return Family::GG;
  if (up == "RNG") return Family::RNG;
  if (up == "DG") return Family::DG;
  throw InvalidArgument("unknown graph family '" + std::string(text) + "' (expected GG, RNG or DG)");
}

ProximityGraph::ProximityGraph(Family family, int order, int n, std::vector<int> depths)
    : family_(family), order_(order), n_(n), depths_(std::move(depths)) {
  std::vector<Edge> edges;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (depth(i, j) <= order_) edges.emplace_back(i, j);
    }
  }
  graph_.n = n_;
  graph_.edges = std::move(edges);
}

ProximityGraph ProximityGraph::with_order(int order) const {
  return ProximityGraph(family_, order, n_, depths_);
}

namespace {

void check_pair(std::span<const Point> pts, int i, int j, const TolerancePolicy& pol) {
  const int n = static_cast<int>(pts.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw InvalidArgument("edge endpoints must be two distinct valid indices");
  }
  validate(pol);
  if (coincident(pts[i], pts[j], pol)) {
    throw DegenerateDiameter("points " + std::to_string(i) + " and " + std::to_string(j) +
                             " coincide within tolerance");
  }
}

int gg_depth(simd::Coords soa, Point a, Point b, double tau) {
  // Both endpoints evaluate to exactly zero and are always counted.
  return static_cast<int>(simd::count_closed_diameter(soa, a, b, tau)) - 2;
}

int rng_depth(simd::Coords soa, Point p, Point q, double tau) {
  // Endpoints sit on the lune boundary (slack exactly zero) and never count.
  return static_cast<int>(simd::count_open_lune(soa, p, q, tau));
}

// Circles through p and q have centers m + t n with n perpendicular to pq.
// For a third point r, 2 (|c-r|^2 - |c-p|^2) = base_r + t slope_r where
// base_r is the diameter discriminant and slope_r = 2 n.((p-r) + (q-r)).
// Each count is piecewise constant in t and lower semicontinuous (open
// interiors), so its minimum is attained at a breakpoint t_r or in an
// unbounded interval.
class DelaunayDepth {
 public:
  explicit DelaunayDepth(std::size_t n) : base_(n), slope_(n) {}

  int operator()(std::span<const Point> pts, Point p, Point q, double tau) {
    const double nx = -(q.y - p.y);
    const double ny = q.x - p.x;
    std::size_t plus = 0;
    std::size_t minus = 0;
    std::size_t fixed = 0;
    candidates_.clear();
    candidates_.push_back(0.0);
    for (std::size_t r = 0; r < pts.size(); ++r) {
      const Point& pr = pts[r];
      base_[r] = diameter_discriminant(p, q, pr);
      slope_[r] = 2.0 * (nx * ((p.x - pr.x) + (q.x - pr.x)) + ny * ((p.y - pr.y) + (q.y - pr.y)));
      if (slope_[r] == 0.0) {
        fixed += base_[r] < -tau;
      } else {
        plus += slope_[r] < 0.0;
        minus += slope_[r] > 0.0;
        candidates_.push_back(-base_[r] / slope_[r]);
      }
    }
    std::size_t best = std::min(plus, minus) + fixed;
    for (double t : candidates_) {
      if (best == 0) break;
      best = std::min(best, simd::count_affine_below(base_, slope_, t, tau));
    }
    return static_cast<int>(best);
  }

 private:
  std::vector<double> base_;
  std::vector<double> slope_;
  std::vector<double> candidates_;
};

void check_build(std::span<const Point> pts, int k, const TolerancePolicy& pol) {
  validate(pol);
  if (pts.size() < 2) throw InvalidArgument("a proximity graph needs at least two points");
  if (k < 0) throw InvalidArgument("order k must be non-negative");
  validate_points(pts, pol);
}

}  // namespace

int edge_depth_gg(std::span<const Point> pts, int i, int j, const TolerancePolicy& pol) {
  check_pair(pts, i, j, pol);
  const detail::SoaPoints soa(pts);
  return gg_depth(soa.view(), pts[i], pts[j], pol.tau);
}

int edge_depth_rng(std::span<const Point> pts, int i, int j, const TolerancePolicy& pol) {
  check_pair(pts, i, j, pol);
  const detail::SoaPoints soa(pts);
  return rng_depth(soa.view(), pts[i], pts[j], pol.tau);
}

int edge_depth_dg(std::span<const Point> pts, int i, int j, const TolerancePolicy& pol) {
  check_pair(pts, i, j, pol);
  DelaunayDepth depth(pts.size());
  return depth(pts, pts[i], pts[j], pol.tau);
}

ProximityGraph build_kgg(std::span<const Point> pts, int k, const TolerancePolicy& pol) {
  check_build(pts, k, pol);
  const int n = static_cast<int>(pts.size());
  const detail::SoaPoints soa(pts);
  std::vector<int> depths(pair_index(n, n - 2, n - 1) + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      depths[pair_index(n, i, j)] = gg_depth(soa.view(), pts[i], pts[j], pol.tau);
    }
  }
  return ProximityGraph(Family::GG, k, n, std::move(depths));
}

ProximityGraph build_krng(std::span<const Point> pts, int k, const TolerancePolicy& pol) {
  check_build(pts, k, pol);
  const int n = static_cast<int>(pts.size());
  const detail::SoaPoints soa(pts);
  std::vector<int> depths(pair_index(n, n - 2, n - 1) + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      depths[pair_index(n, i, j)] = rng_depth(soa.view(), pts[i], pts[j], pol.tau);
    }
  }
  return ProximityGraph(Family::RNG, k, n, std::move(depths));
}

ProximityGraph build_kdg(std::span<const Point> pts, int k, const TolerancePolicy& pol) {
  check_build(pts, k, pol);
  const int n = static_cast<int>(pts.size());
  DelaunayDepth depth(pts.size());
  std::vector<int> depths(pair_index(n, n - 2, n - 1) + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      depths[pair_index(n, i, j)] = depth(pts, pts[i], pts[j], pol.tau);
    }
  }
  return ProximityGraph(Family::DG, k, n, std::move(depths));
}

ProximityGraph build_proximity(Family family, std::span<const Point> pts, int k,
                               const TolerancePolicy& pol) {
  switch (family) {
    case Family::GG: return build_kgg(pts, k, pol);
    case Family::RNG: return build_krng(pts, k, pol);
    case Family::DG: return build_kdg(pts, k, pol);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace kgg
