#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kgg/error.hpp"
#include "kgg/partition_mst.hpp"
#include "kgg/proximity.hpp"
#include "kgg/random.hpp"

using namespace kgg;

namespace {

// Depth at x counting closed containment, skipping disks whose diameter ends at x.
int brute_depth(const DiskSystem& s, Point x) {
  int c = 0;
  for (const Disk& d : s.disks) {
    if (dist2(x, d.a) <= 1e-18 || dist2(x, d.b) <= 1e-18) continue;
    if (dist2(x, d.center) <= d.radius2 + 1e-9) ++c;
  }
  return c;
}

Partition random_partition(Rng& rng, int n) {
  const int classes = rng.between(2, std::max(2, n / 2));
  Partition p;
  p.classes.resize(static_cast<std::size_t>(classes));
  for (int i = 0; i < n; ++i) {
    if (rng.uniform() < 0.25) continue;
    p.classes[rng.below(static_cast<std::uint64_t>(classes))].push_back(i);
  }
  std::erase_if(p.classes, [](const auto& c) { return c.empty(); });
  return p;
}

}  // namespace

TEST_CASE("partition graph examples") {
  const PointSet two{{0, 0}, {3, 4}};
  const ClassGraph g = partition_graph(two, Partition::singletons(2));
  REQUIRE(g.links.size() == 1);
  CHECK(g.links[0].len2 == 25.0);

  const PointSet four{{0, 0}, {1, 0}, {5, 0}, {4, 0}};
  const ClassGraph h = partition_graph(four, Partition{{{0, 1}, {2, 3}}});
  REQUIRE(h.links.size() == 1);
  CHECK(h.links[0].len2 == 9.0);
  CHECK(h.links[0].witness == Edge(1, 3));
  const WitnessTree t = mst_witness(h);
  REQUIRE(t.edges.size() == 1);
  CHECK(t.edges[0].points == Edge(1, 3));
  CHECK(t.edges[0].length == 3.0);
}

TEST_CASE("partition validation") {
  const PointSet pts{{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(partition_graph(pts, Partition{{{0}, {}}}), EmptyClass);
  CHECK_THROWS_AS(partition_graph(pts, Partition{{{0}, {7}}}), InvalidArgument);
  CHECK_THROWS_AS(partition_graph(pts, Partition{{{0, 1}, {1, 2}}}), InvalidArgument);
  CHECK(Partition{{{2}, {0}}}.ground_set() == std::vector<int>{0, 2});
}

TEST_CASE("singleton partition gives the Euclidean MST") {
  Rng rng(8);
  const PointSet pts = random_points(rng, 25, Distribution::Uniform);
  const WitnessTree a = mst_witness(partition_graph(pts, Partition::singletons(pts.size())));
  const WitnessTree b = euclidean_mst(pts);
  REQUIRE(a.edges.size() == 24);
  REQUIRE(b.edges.size() == 24);
  for (std::size_t i = 0; i < a.edges.size(); ++i) CHECK(a.edges[i].points == b.edges[i].points);
  // Prim oracle: total length
  std::vector<bool> in(pts.size(), false);
  std::vector<double> best(pts.size(), 1e300);
  best[0] = 0;
  double total = 0;
  for (std::size_t it = 0; it < pts.size(); ++it) {
    std::size_t v = pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!in[i] && (v == pts.size() || best[i] < best[v])) v = i;
    }
    in[v] = true;
    total += std::sqrt(best[v]);
    for (std::size_t i = 0; i < pts.size(); ++i) best[i] = std::min(best[i], dist2(pts[v], pts[i]));
  }
  double sum = 0;
  for (const auto& e : b.edges) sum += e.length;
  CHECK(sum == doctest::Approx(total).epsilon(1e-12));
}

TEST_CASE("disk system examples") {
  CHECK(disk_system(PointSet{}, WitnessTree{}).disks.empty());
  const PointSet pts{{0, 0}, {2, 0}};
  const DiskSystem s = disk_system(pts, euclidean_mst(pts));
  REQUIRE(s.disks.size() == 1);
  CHECK(s.disks[0].center == Point{1, 0});
  CHECK(s.disks[0].radius2 == 1.0);
  const DepthReport r = max_depth(s);
  CHECK(r.depth == 1);
  CHECK(center_exclusion_check(s));
}

TEST_CASE("depth examples") {
  DiskSystem far;
  far.disks.push_back({{0, 0}, 1, {-1, 0}, {1, 0}, {0, 1}});
  far.disks.push_back({{10, 0}, 1, {9, 0}, {11, 0}, {2, 3}});
  CHECK(max_depth(far).depth == 1);
  CHECK(center_exclusion_check(far));
  // two overlapping disks; each contains the other's center
  DiskSystem overlap;
  overlap.disks.push_back({{0, 0}, 1, {-1, 0}, {1, 0}, {0, 1}});
  overlap.disks.push_back({{0.5, 0}, 1, {-0.5, 0}, {1.5, 0}, {2, 3}});
  CHECK(max_depth(overlap).depth == 2);
  CHECK_FALSE(center_exclusion_check(overlap));
  const PointSet probes{{5, 5}, {0.25, 0}};
  CHECK(max_depth(overlap, std::span<const Point>(probes)).depth == 2);
  const PointSet outside{{5, 5}};
  CHECK(max_depth(overlap, std::span<const Point>(outside)).depth == 0);
}

TEST_CASE("disks do not count at their own endpoints") {
  // degree-4 star: all four disks pass through the hub
  const PointSet star{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const DiskSystem s = disk_system(star, euclidean_mst(star));
  REQUIRE(s.disks.size() == 4);
  const DepthReport r = max_depth(s);
  CHECK(r.depth == 2);
  const PointSet hub{{0, 0}};
  CHECK(max_depth(s, std::span<const Point>(hub)).depth == 0);
}

TEST_CASE("circle intersections") {
  auto two = circle_intersections({0, 0}, 1, {1, 0}, 1);
  REQUIRE(two.size() == 2);
  std::sort(two.begin(), two.end(), [](Point a, Point b) { return a.y < b.y; });
  CHECK(two[0].x == doctest::Approx(0.5));
  CHECK(two[0].y == doctest::Approx(-std::sqrt(3.0) / 2));
  CHECK(circle_intersections({0, 0}, 1, {2, 0}, 1).size() == 1);
  CHECK(circle_intersections({0, 0}, 1, {3, 0}, 1).empty());
  CHECK(circle_intersections({0, 0}, 1, {0, 0}, 1).empty());
  CHECK(circle_intersections({0, 0}, 4, {0.5, 0}, 0.25).empty());
}

TEST_CASE("random partitions: depth, emptiness, center exclusion, MST membership") {
  Rng rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.between(3, 40);
    const PointSet pts = random_points(rng, n, trial % 3 == 0 ? Distribution::Clustered : Distribution::Uniform);
    const Partition part = random_partition(rng, n);
    if (part.classes.size() < 2) continue;
    const WitnessTree tree = mst_witness(partition_graph(pts, part));
    CHECK(tree.edges.size() == part.classes.size() - 1);
    const DiskSystem sys = disk_system(pts, tree);
    const DepthReport plane = max_depth(sys);
    CAPTURE(trial);
    CHECK(plane.depth <= 3);
    CHECK(brute_depth(sys, plane.where) == plane.depth);
    // grid sampling never beats the exact arrangement search
    for (int gx = 0; gx <= 40; ++gx) {
      for (int gy = 0; gy <= 40; ++gy) {
        const Point x{-0.5 + 2.0 * gx / 40, -0.5 + 2.0 * gy / 40};
        CHECK(brute_depth(sys, x) <= plane.depth);
      }
    }
    const std::vector<int> ground = part.ground_set();
    CHECK(disk_emptiness_violations(sys, pts, ground).empty());
    CHECK(center_exclusion_check(sys));
    // every witness edge is an MST edge of the ground set
    PointSet gp;
    for (int g : ground) gp.push_back(pts[g]);
    std::vector<Edge> emst;
    for (const auto& w : euclidean_mst(gp).edges) emst.emplace_back(ground[w.points.u], ground[w.points.v]);
    for (const auto& w : tree.edges) CHECK(std::find(emst.begin(), emst.end(), w.points) != emst.end());
  }
}

TEST_CASE("emptiness violation is reported") {
  const PointSet pts{{0, 0}, {2, 0}, {1, 0.1}};
  WitnessTree t;
  t.edges.push_back({Edge(0, 1), 0, 1, 2.0});
  const DiskSystem s = disk_system(pts, t);
  const std::vector<int> ground{0, 1, 2};
  const auto v = disk_emptiness_violations(s, pts, ground);
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == 0);
  CHECK(v[0].second == 2);
}

TEST_CASE("minimum spanning forest") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}};
  const std::vector<double> w{1, 2, 3, 1};
  auto f = minimum_spanning_forest(5, edges, w);
  std::sort(f.begin(), f.end());
  CHECK(f == std::vector<std::size_t>{0, 1, 3});
}
