#include "kgg/partition_mst.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "kgg/error.hpp"
#include "kgg/simd/kernels.hpp"

namespace kgg {

std::vector<int> Partition::ground_set() const {
  std::vector<int> ground;
  for (const auto& c : classes) ground.insert(ground.end(), c.begin(), c.end());
  std::sort(ground.begin(), ground.end());
  return ground;
}

Partition Partition::singletons(std::size_t n) {
  Partition p;
  p.classes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.classes.push_back({static_cast<int>(i)});
  return p;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

ClassGraph partition_graph(std::span<const Point> pts, const Partition& partition) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> owner(pts.size(), -1);
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    if (partition.classes[c].empty()) {
      throw EmptyClass("partition class " + std::to_string(c) + " is empty");
    }
    for (int v : partition.classes[c]) {
      if (v < 0 || v >= n) {
        throw InvalidArgument("partition refers to point " + std::to_string(v) +
                              " outside the point set");
      }
      if (owner[v] != -1) {
        throw InvalidArgument("point " + std::to_string(v) + " belongs to two classes");
      }
      owner[v] = static_cast<int>(c);
    }
  }

  ClassGraph graph;
  graph.classes = static_cast<int>(partition.classes.size());
  for (int i = 0; i < graph.classes; ++i) {
    for (int j = i + 1; j < graph.classes; ++j) {
      ClassLink best{i, j, {}, 0.0};
      bool found = false;
      for (int a : partition.classes[i]) {
        for (int b : partition.classes[j]) {
          const double d = dist2(pts[a], pts[b]);
          const Edge e(a, b);
          if (!found || std::tie(d, e) < std::tie(best.len2, best.witness)) {
            best.len2 = d;
            best.witness = e;
            found = true;
          }
        }
      }
      graph.links.push_back(best);
    }
  }
  return graph;
}

WitnessTree mst_witness(const ClassGraph& graph) {
  std::vector<const ClassLink*> order;
  order.reserve(graph.links.size());
  for (const auto& link : graph.links) order.push_back(&link);
  std::sort(order.begin(), order.end(), [](const ClassLink* l, const ClassLink* r) {
    return std::tie(l->len2, l->witness) < std::tie(r->len2, r->witness);
  });
  DisjointSets sets(graph.classes);
  WitnessTree tree;
  for (const ClassLink* link : order) {
    if (sets.unite(link->class_a, link->class_b)) {
      tree.edges.push_back({link->witness, link->class_a, link->class_b, std::sqrt(link->len2)});
    }
  }
  return tree;
}

WitnessTree euclidean_mst(std::span<const Point> pts) {
  return mst_witness(partition_graph(pts, Partition::singletons(pts.size())));
}

std::vector<std::size_t> minimum_spanning_forest(int n, std::span<const Edge> edges,
                                                 std::span<const double> weights) {
  if (edges.size() != weights.size()) {
    throw InvalidArgument("one weight per edge is required");
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return std::tie(weights[l], edges[l]) < std::tie(weights[r], edges[r]);
  });
  DisjointSets sets(n);
  std::vector<std::size_t> chosen;
  for (std::size_t idx : order) {
    if (sets.unite(edges[idx].u, edges[idx].v)) chosen.push_back(idx);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

DiskSystem disk_system(std::span<const Point> pts, const WitnessTree& tree) {
  DiskSystem system;
  system.disks.reserve(tree.edges.size());
  for (const WitnessEdge& e : tree.edges) {
    const Point a = pts[e.points.u];
    const Point b = pts[e.points.v];
    const Point center{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    system.disks.push_back({center, dist2(a, b) / 4.0, a, b, e.points});
  }
  return system;
}

std::vector<Point> circle_intersections(Point c1, double r1sq, Point c2, double r2sq,
                                        const TolerancePolicy& pol) {
  const double d2 = dist2(c1, c2);
  if (d2 <= pol.tau) return {};
  const double r1 = std::sqrt(r1sq);
  const double r2 = std::sqrt(r2sq);
  const double outer = (r1 + r2) * (r1 + r2);
  const double inner = (r1 - r2) * (r1 - r2);
  if (d2 > outer + pol.tau || d2 < inner - pol.tau) return {};

  const double d = std::sqrt(d2);
  const double ux = (c2.x - c1.x) / d;
  const double uy = (c2.y - c1.y) / d;
  const double along = (r1sq - r2sq + d2) / (2.0 * d);
  const double h2 = r1sq - along * along;
  const Point foot{c1.x + along * ux, c1.y + along * uy};
  if (std::abs(d2 - outer) <= pol.tau || std::abs(d2 - inner) <= pol.tau || h2 <= 0.0) {
    return {foot};
  }
  const double h = std::sqrt(h2);
  return {{foot.x - h * uy, foot.y + h * ux}, {foot.x + h * uy, foot.y - h * ux}};
}

namespace {

struct DiskArrays {
  std::vector<double> cx, cy, r2;

  explicit DiskArrays(const DiskSystem& system) {
    for (const Disk& d : system.disks) {
      cx.push_back(d.center.x);
      cy.push_back(d.center.y);
      r2.push_back(d.radius2);
    }
  }

  simd::Disks view() const { return {cx, cy, r2}; }
};

int depth_at(const DiskSystem& system, const DiskArrays& arrays, Point x,
             const TolerancePolicy& pol) {
  auto count = static_cast<int>(simd::count_disks_covering(arrays.view(), x, pol.tau));
  if (count == 0) return 0;
  for (const Disk& d : system.disks) {
    if (!coincident(x, d.a, pol) && !coincident(x, d.b, pol)) continue;
    const double dx = x.x - d.center.x;
    const double dy = x.y - d.center.y;
    count -= dx * dx + dy * dy - d.radius2 <= pol.tau;
  }
  return count;
}

}  // namespace

DepthReport max_depth(const DiskSystem& system, std::optional<std::span<const Point>> probes,
                      const TolerancePolicy& pol) {
  DepthReport best;
  if (system.disks.empty()) return best;
  const DiskArrays arrays(system);
  auto consider = [&](Point x) {
    const int depth = depth_at(system, arrays, x, pol);
    if (depth > best.depth) {
      best.depth = depth;
      best.where = x;
    }
  };
  if (probes) {
    for (const Point& q : *probes) consider(q);
    return best;
  }
  const auto& disks = system.disks;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    consider(disks[i].center);
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      for (const Point& x : circle_intersections(disks[i].center, disks[i].radius2,
                                                 disks[j].center, disks[j].radius2, pol)) {
        consider(x);
      }
    }
  }
  return best;
}

bool center_exclusion_check(const DiskSystem& system, const TolerancePolicy& pol) {
  const auto& disks = system.disks;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = 0; j < disks.size(); ++j) {
      if (i == j) continue;
      if (dist2(disks[j].center, disks[i].center) - disks[i].radius2 <= pol.tau) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, int>> disk_emptiness_violations(const DiskSystem& system,
                                                                   std::span<const Point> pts,
                                                                   std::span<const int> ground,
                                                                   const TolerancePolicy& pol) {
  std::vector<std::pair<std::size_t, int>> bad;
  for (std::size_t i = 0; i < system.disks.size(); ++i) {
    const Disk& d = system.disks[i];
    for (int v : ground) {
      if (v == d.witness.u || v == d.witness.v) continue;
      if (counts_as_contained(disk_membership(d.a, d.b, pts[v], pol))) bad.emplace_back(i, v);
    }
  }
  return bad;
}

}  // namespace kgg
