#include "kgg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <tuple>

#include "graph_util.hpp"
#include "kgg/error.hpp"
#include "kgg/matching.hpp"
#include "kgg/proximity.hpp"
#include "kgg/simd/kernels.hpp"

namespace kgg {

int LabeledInstance::index_of(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidArgument("no point labeled '" + std::string(label) + "'");
  return static_cast<int>(it - labels.begin());
}

namespace {

constexpr int kSpokes = 9;
constexpr double kSpokeStepDeg = 40.0;
constexpr double kDiameterPhaseDeg = 10.0;
constexpr double kOuterRadius = 1.5;

Point polar(double radius, double degrees) {
  const double rad = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(rad), radius * std::sin(rad)};
}

LabeledInstance place_counterexample(double eps) {
  LabeledInstance inst;
  const Point half = polar(0.5, kDiameterPhaseDeg);
  inst.points.push_back({-half.x, -half.y});
  inst.points.push_back(half);
  inst.labels = {"a", "b"};
  for (int j = 1; j <= kSpokes; ++j) {
    inst.points.push_back(polar(0.5 - eps, kSpokeStepDeg * j));
    inst.labels.push_back("u" + std::to_string(j));
  }
  for (int j = 1; j <= kSpokes; ++j) {
    inst.points.push_back(polar(kOuterRadius, kSpokeStepDeg * j));
    inst.labels.push_back("r" + std::to_string(j));
  }
  inst.params["eps"] = eps;
  return inst;
}

}  // namespace

std::optional<std::string> counterexample_violation(double eps) {
  if (!(eps > 0.0 && eps < 0.5)) return "eps must lie in (0, 1/2)";
  const LabeledInstance inst = place_counterexample(eps);
  const auto& p = inst.points;
  const double target = 1.0 + eps;
  const Point a = p[0];
  const Point b = p[1];
  auto u = [&](int j) { return p[1 + j]; };
  auto r = [&](int j) { return p[1 + kSpokes + j]; };
  auto len = [](Point x, Point y) { return std::sqrt(dist2(x, y)); };
  for (int j = 1; j <= kSpokes; ++j) {
    const std::string rj = "r" + std::to_string(j);
    if (std::abs(len(r(j), u(j)) - target) > 1e-12 * target) {
      return "|" + rj + " u" + std::to_string(j) + "| != 1+eps";
    }
    if (!(len(r(j), a) > target)) return "|" + rj + " a| <= 1+eps";
    if (!(len(r(j), b) > target)) return "|" + rj + " b| <= 1+eps";
    for (int k = 1; k <= kSpokes; ++k) {
      if (k == j) continue;
      if (!(len(r(j), r(k)) > target)) return "|" + rj + " r" + std::to_string(k) + "| <= 1+eps";
      if (!(len(r(j), u(k)) > target)) return "|" + rj + " u" + std::to_string(k) + "| <= 1+eps";
    }
  }
  return std::nullopt;
}

double counterexample_eps_max() {
  double ok = 1e-6;
  double bad = 0.5;
  for (int it = 0; it < 200 && bad - ok > 1e-15; ++it) {
    const double mid = 0.5 * (ok + bad);
    (counterexample_violation(mid) ? bad : ok) = mid;
  }
  return ok;
}

LabeledInstance gen_counterexample_8gg(double eps) {
  if (auto why = counterexample_violation(eps)) {
    throw ConstraintViolated("eps = " + std::to_string(eps) + ": " + *why);
  }
  LabeledInstance inst = place_counterexample(eps);
  inst.params["eps_max"] = counterexample_eps_max();
  return inst;
}

namespace {

bool is_tree(const Graph& g) {
  if (static_cast<int>(g.edges.size()) != g.n - 1) return false;
  std::vector<int> comp(static_cast<std::size_t>(g.n));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (const Edge& e : g.edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    comp[a] = b;
  }
  return true;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (const auto& nbrs : g.adjacency()) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

}  // namespace

LabeledInstance gen_tight_0gg() {
  // Four degree-4 hubs on a horizontal line, joined through three shared
  // arms; every other arm is a leaf. Unit lattice spacing puts a hub or
  // connector exactly on the diameter circle of each would-be shortcut.
  LabeledInstance inst;
  int leaf = 0;
  auto add = [&](double x, double y, std::string label) {
    inst.points.push_back({x, y});
    inst.labels.push_back(std::move(label));
  };
  for (int h = 0; h < 4; ++h) add(2.0 * h, 0.0, "h" + std::to_string(h + 1));
  for (int c = 0; c < 3; ++c) add(2.0 * c + 1.0, 0.0, "c" + std::to_string(c + 1));
  for (int h = 0; h < 4; ++h) {
    const double x = 2.0 * h;
    add(x, 1.0, "l" + std::to_string(++leaf));
    add(x, -1.0, "l" + std::to_string(++leaf));
  }
  add(-1.0, 0.0, "l" + std::to_string(++leaf));
  add(7.0, 0.0, "l" + std::to_string(++leaf));

  const ProximityGraph gg = build_kgg(inst.points, 0);
  if (!is_tree(gg.graph())) throw SelfCheckFailed("tight 0-GG instance is not a tree");
  if (max_degree(gg.graph()) != 4) throw SelfCheckFailed("tight 0-GG instance: max degree != 4");
  if (max_matching(gg.graph()).size() != 4) throw SelfCheckFailed("tight 0-GG instance: nu != 4");
  if (independence_number(gg.graph()) != 13) {
    throw SelfCheckFailed("tight 0-GG instance: alpha != 13");
  }
  return inst;
}

std::pair<LabeledInstance, BlockerSet> gen_blocking_tight() {
  LabeledInstance inst;
  BlockerSet blockers;
  constexpr int kSquares = 4;
  for (int s = 0; s < kSquares; ++s) {
    const double o = s;
    if (s == 0) inst.points.push_back({o, o});
    inst.points.push_back({o + 1.0, o});
    inst.points.push_back({o, o + 1.0});
    inst.points.push_back({o + 1.0, o + 1.0});
    // The four side disks of a square all pass through its center.
    blockers.blockers.push_back({o + 0.5, o + 0.5});
  }
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    inst.labels.push_back("p" + std::to_string(i + 1));
  }

  const ProximityGraph gg = build_kgg(inst.points, 0);
  if (gg.edges().size() != 4 * kSquares) {
    throw SelfCheckFailed("blocking instance: Gabriel graph is not the 16 square sides");
  }
  if (!verify_blocked(inst.points, blockers.blockers, 0).blocked) {
    throw SelfCheckFailed("blocking instance is not blocked");
  }
  for (std::size_t drop = 0; drop < blockers.blockers.size(); ++drop) {
    PointSet fewer = blockers.blockers;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
    if (verify_blocked(inst.points, fewer, 0).blocked) {
      throw SelfCheckFailed("blocking instance stays blocked without blocker " +
                            std::to_string(drop + 1));
    }
  }
  return {inst, blockers};
}

double default_blocker_offset(std::span<const Point> pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist2(pts[i], pts[j]));
  if (!std::isfinite(best)) throw InvalidArgument("need at least two points");
  return 1e-4 * std::sqrt(best);
}

BlockerSet blockers_right(std::span<const Point> pts, int k, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw InvalidArgument("delta must be positive");
  if (k < 0) throw InvalidArgument("order k must be non-negative");
  if (pts.empty()) return {{}, k};
  const auto rightmost = std::max_element(pts.begin(), pts.end(), [](Point l, Point r) {
    return std::tie(l.x, l.y) < std::tie(r.x, r.y);
  });
  BlockerSet out;
  out.order = k;
  for (auto it = pts.begin(); it != pts.end(); ++it) {
    if (it == rightmost) continue;
    for (int j = 1; j <= k + 1; ++j) out.blockers.push_back({it->x + j * delta, it->y});
  }
  return out;
}

BlockingReport verify_blocked(std::span<const Point> pts, std::span<const Point> blockers, int k,
                              const TolerancePolicy& pol) {
  PointSet all(pts.begin(), pts.end());
  all.insert(all.end(), blockers.begin(), blockers.end());
  validate(pol);
  validate_points(all, pol);
  const detail::SoaPoints soa(all);
  BlockingReport report;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto depth =
          static_cast<int>(simd::count_closed_diameter(soa.view(), pts[i], pts[j], pol.tau)) - 2;
      if (depth <= k) report.unblocked.emplace_back(i, j);
    }
  }
  report.blocked = report.unblocked.empty();
  return report;
}

PointSet gen_collinear(int n, double spacing) {
  if (n < 2) throw InvalidArgument("collinear instance needs n >= 2");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) throw InvalidArgument("spacing must be positive");
  PointSet pts;
  for (int i = 0; i < n; ++i) pts.push_back({i * spacing, 0.0});
  return pts;
}

}  // namespace kgg
