#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kgg/constructions.hpp"
#include "kgg/error.hpp"
#include "kgg/partition_mst.hpp"
#include "kgg/proximity.hpp"
#include "kgg/random.hpp"

using namespace kgg;

namespace {

// Fixed instance; reference edge sets below come from an independent
// implementation (numpy brute force and scipy's Delaunay triangulation).
const PointSet kTwelve{{0.12, 0.83}, {0.47, 0.21}, {0.91, 0.64}, {0.33, 0.55},
                       {0.68, 0.92}, {0.05, 0.14}, {0.79, 0.08}, {0.56, 0.47},
                       {0.24, 0.31}, {0.87, 0.36}, {0.41, 0.97}, {0.63, 0.71}};

std::vector<Edge> edges_of(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Edge> out;
  for (auto [u, v] : list) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force depths written directly from the definitions.
int brute_gg(const PointSet& p, int i, int j) {
  int c = 0;
  for (int r = 0; r < static_cast<int>(p.size()); ++r) {
    if (r == i || r == j) continue;
    if (dist2(p[i], p[r]) + dist2(p[j], p[r]) <= dist2(p[i], p[j]) + 1e-9) ++c;
  }
  return c;
}

int brute_rng(const PointSet& p, int i, int j) {
  int c = 0;
  for (int r = 0; r < static_cast<int>(p.size()); ++r) {
    if (r == i || r == j) continue;
    if (std::max(dist2(p[i], p[r]), dist2(p[j], p[r])) < dist2(p[i], p[j]) - 1e-9) ++c;
  }
  return c;
}

// Minimum over circumcircles through (p_i, p_j, p_r) and the two half-planes
// bounded by line p_i p_j of the number of points strictly inside.
int brute_dg(const PointSet& p, int i, int j) {
  const int n = static_cast<int>(p.size());
  const Point a = p[i];
  const Point b = p[j];
  int best = std::numeric_limits<int>::max();
  int left = 0, right = 0;
  for (int r = 0; r < n; ++r) {
    if (r == i || r == j) continue;
    const double cr = (b.x - a.x) * (p[r].y - a.y) - (b.y - a.y) * (p[r].x - a.x);
    const double dot = (p[r].x - a.x) * (p[r].x - b.x) + (p[r].y - a.y) * (p[r].y - b.y);
    if (std::abs(cr) < 1e-12) {
      if (dot < 0) ++left, ++right;  // on the open segment: inside every circle
      continue;
    }
    (cr > 0 ? left : right)++;
  }
  best = std::min({best, left, right});
  for (int r = 0; r < n; ++r) {
    if (r == i || r == j) continue;
    const Point c = p[r];
    const double d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (std::abs(d) < 1e-12) continue;
    const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, c2 = c.x * c.x + c.y * c.y;
    const Point o{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                  (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    const double rad2 = dist2(o, a);
    int inside = 0;
    for (int s = 0; s < n; ++s) {
      if (s == i || s == j || s == r) continue;
      if (dist2(o, p[s]) < rad2 - 1e-9) ++inside;
    }
    best = std::min(best, inside);
  }
  return best;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("gg") == Family::GG);
  CHECK(parse_family("RNG") == Family::RNG);
  CHECK(parse_family("Dg") == Family::DG);
  CHECK_THROWS_AS(parse_family("XG"), InvalidArgument);
  CHECK(family_name(Family::DG) == "DG");
}

TEST_CASE("edge_depth_gg examples") {
  CHECK(edge_depth_gg(PointSet{{0, 0}, {2, 0}, {1, 0}}, 0, 1) == 1);
  CHECK(edge_depth_gg(PointSet{{0, 0}, {2, 0}, {1, 1}}, 0, 1) == 1);
  CHECK(edge_depth_gg(PointSet{{0, 0}, {2, 0}, {1, 1.5}}, 0, 1) == 0);
  const LabeledInstance cx = gen_counterexample_8gg(0.005);
  CHECK(edge_depth_gg(cx.points, cx.index_of("a"), cx.index_of("b")) == 9);
}

TEST_CASE("build_kgg examples") {
  CHECK(build_kgg(PointSet{{0, 0}, {1, 0}}, 0).edges() == edges_of({{0, 1}}));
  const PointSet three{{0, 0}, {2, 0}, {1, 0}};
  CHECK(build_kgg(three, 0).edges() == edges_of({{0, 2}, {1, 2}}));
  CHECK(build_kgg(three, 1).edges() == edges_of({{0, 1}, {0, 2}, {1, 2}}));
  const auto g = build_kgg(three, 0);
  CHECK(g.depth(0, 1) == 1);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.with_order(1).has_edge(0, 1));
}

TEST_CASE("build_krng examples") {
  CHECK(build_krng(PointSet{{0, 0}, {1, 0}}, 0).edges() == edges_of({{0, 1}}));
  const double h = std::sqrt(3.0) / 2.0;
  const PointSet tri{{0, 0}, {1, 0}, {0.5, h}};
  // |pr| is 1 up to rounding; the third point is on the lune boundary
  CHECK(build_krng(tri, 0).edges().size() == 3);
  // right angle at (1,1): that point is strictly inside the lune of the hypotenuse
  const PointSet right{{0, 0}, {2, 0}, {1, 1}};
  CHECK(build_krng(right, 0).edges() == edges_of({{0, 2}, {1, 2}}));
  CHECK(edge_depth_rng(right, 0, 1) == 1);
}

TEST_CASE("build_kdg examples") {
  for (int k = 0; k <= 2; ++k) CHECK(build_kdg(PointSet{{0, 0}, {1, 0}}, k).edges().size() == 1);
  const PointSet square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  // open interiors: the circumcircle has no point strictly inside, so the
  // diagonals are 0-DG edges as well
  CHECK(build_kdg(square, 0).edges().size() == 6);
  CHECK(edge_depth_dg(square, 0, 2) == 0);
  // GG does count the cocircular corners
  CHECK(build_kgg(square, 0).edges() == edges_of({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(edge_depth_gg(square, 0, 2) == 2);
  // a center point is strictly inside every circle through opposite corners
  const PointSet centered{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  CHECK(edge_depth_dg(centered, 0, 2) == 1);
  CHECK(edge_depth_dg(centered, 0, 1) == 0);
}

TEST_CASE("reference instance: GG and RNG edge counts") {
  const int gg_counts[] = {19, 28, 42, 48};
  const int rng_counts[] = {15, 20, 32, 39};
  for (int k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(build_kgg(kTwelve, k).edges().size() == static_cast<std::size_t>(gg_counts[k]));
    CHECK(build_krng(kTwelve, k).edges().size() == static_cast<std::size_t>(rng_counts[k]));
  }
  CHECK(build_kgg(kTwelve, 0).edges() ==
        edges_of({{0, 3}, {0, 10}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 9}, {2, 11}, {3, 7}, {3, 8},
                  {3, 10}, {3, 11}, {4, 10}, {4, 11}, {5, 8}, {6, 9}, {7, 9}, {7, 11}, {10, 11}}));
}

TEST_CASE("reference instance: 0-DG is the Delaunay triangulation") {
  CHECK(build_kdg(kTwelve, 0).edges() ==
        edges_of({{0, 3},  {0, 5},  {0, 8},  {0, 10}, {1, 5},  {1, 6},  {1, 7},  {1, 8},  {1, 9},
                  {2, 4},  {2, 7},  {2, 9},  {2, 11}, {3, 7},  {3, 8},  {3, 10}, {3, 11}, {4, 10},
                  {4, 11}, {5, 6},  {5, 8},  {6, 9},  {7, 8},  {7, 9},  {7, 11}, {10, 11}}));
}

TEST_CASE("depths agree with brute force on random sets") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    const int n = rng.between(2, 16);
    const PointSet pts = random_points(rng, n, seed % 2 ? Distribution::Uniform : Distribution::Gaussian);
    const auto gg = build_kgg(pts, 0);
    const auto rn = build_krng(pts, 0);
    const auto dg = build_kdg(pts, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        CAPTURE(seed);
        CHECK(gg.depth(i, j) == brute_gg(pts, i, j));
        CHECK(rn.depth(i, j) == brute_rng(pts, i, j));
        CHECK(dg.depth(i, j) == brute_dg(pts, i, j));
        CHECK(edge_depth_gg(pts, i, j) == gg.depth(i, j));
        CHECK(edge_depth_rng(pts, i, j) == rn.depth(i, j));
        CHECK(edge_depth_dg(pts, i, j) == dg.depth(i, j));
      }
    }
  }
}

TEST_CASE("structural chain on random sets") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    Rng rng(seed);
    const int n = 10;
    const PointSet pts = random_points(rng, n, Distribution::Uniform);
    const auto gg0 = build_kgg(pts, 0);
    CHECK(static_cast<int>(gg0.edges().size()) <= 3 * n - 8);
    for (const auto& w : euclidean_mst(pts).edges) CHECK(gg0.has_edge(w.points.u, w.points.v));
    for (int k = 0; k <= 3; ++k) {
      const auto g = build_kgg(pts, k);
      const auto r = build_krng(pts, k);
      const auto d = build_kdg(pts, k);
      for (Edge e : r.edges()) CHECK(g.has_edge(e.u, e.v));
      for (Edge e : g.edges()) CHECK(d.has_edge(e.u, e.v));
      for (Edge e : g.edges()) CHECK(build_kgg(pts, k + 1).has_edge(e.u, e.v));
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(build_kgg(PointSet{{0, 0}}, 0), InvalidArgument);
  CHECK_THROWS_AS(build_kgg(PointSet{{0, 0}, {1, 0}}, -1), InvalidArgument);
  CHECK_THROWS_AS(build_kgg(PointSet{{0, 0}, {1, 0}, {0, 0}}, 0), DuplicatePoints);
  CHECK_THROWS_AS(edge_depth_gg(PointSet{{0, 0}, {0, 0}}, 0, 1), DegenerateDiameter);
  CHECK_THROWS_AS(edge_depth_gg(PointSet{{0, 0}, {1, 0}}, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(edge_depth_rng(PointSet{{0, 0}, {1, 0}}, 0, 5), InvalidArgument);
}
