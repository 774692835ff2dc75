#include "kgg/trials.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "kgg/constructions.hpp"
#include "kgg/error.hpp"
#include "kgg/matching.hpp"
#include "kgg/partition_mst.hpp"
#include "kgg/proximity.hpp"

namespace kgg {

namespace {

struct TheoremInfo {
  Theorem theorem;
  std::string_view id;
  int n_min;
  int n_max;
  int k;
  bool even_only;
  int cap;  // largest n the oracles accept
};

constexpr int kNoCap = 1 << 20;

constexpr TheoremInfo kTheorems[] = {
    {Theorem::BottleneckIn10GG, "thm3.2", 2, 12, 10, true, kMaxEnumerationVertices},
    {Theorem::Counterexample8GG, "counterexample8gg", 20, 20, 8, true, 20},
    {Theorem::FourDisks, "thm4.5", 3, 30, 0, false, kNoCap},
    {Theorem::PerfectIn2GG, "thm4.6", 2, 60, 2, true, kNoCap},
    {Theorem::MatchingIn1GG, "thm4.7", 2, 60, 1, false, kNoCap},
    {Theorem::MatchingIn0GG, "thm4.8", 2, 60, 0, false, kNoCap},
    {Theorem::TutteBerge, "tutte-berge", 1, 14, 0, false, kMaxDeficiencyVertices},
    {Theorem::Blocking, "blocking", 2, 20, 0, false, kNoCap},
    {Theorem::BlockingNecessity, "thm5.1", 2, 30, 0, false, kNoCap},
    {Theorem::Structural, "structural", 2, 40, 3, false, kNoCap},
    {Theorem::Independence, "independence", 2, 20, 0, false, kMaxIndependenceVertices},
};

const TheoremInfo& info(Theorem t) {
  for (const auto& i : kTheorems) {
    if (i.theorem == t) return i;
  }
  throw InvalidArgument("unknown theorem");
}

nlohmann::ordered_json points_json(std::span<const Point> pts) {
  auto arr = nlohmann::ordered_json::array();
  for (const Point& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

nlohmann::ordered_json edges_json(std::span<const Edge> edges) {
  auto arr = nlohmann::ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

void fail(TrialRecord& rec, const std::string& why) {
  if (rec.pass) rec.detail = why;
  rec.pass = false;
}

void keep_points(TrialRecord& rec, std::span<const Point> pts) {
  rec.instance = nlohmann::ordered_json::object();
  rec.instance["points"] = points_json(pts);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::string edge_name(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

struct Context {
  const TrialConfig& cfg;
  TolerancePolicy pol;
  Rng& rng;
  TrialRecord& rec;
  Distribution dist;
};

PointSet sample(Context& c) {
  PointSet pts = random_points(c.rng, c.rec.n, c.dist, c.pol);
  keep_points(c.rec, pts);
  return pts;
}

void trial_bottleneck_10gg(Context& c) {
  const PointSet pts = sample(c);
  const Matching lex = lexmin_matching(pts);
  const Matching bot = bottleneck_matching(pts);
  int worst = 0;
  for (Edge e : lex.pairs) {
    const int d = edge_depth_gg(pts, e.u, e.v, c.pol);
    worst = std::max(worst, d);
    if (d > c.cfg.k) fail(c.rec, "lex-min edge " + edge_name(e) + " has depth " + std::to_string(d));
  }
  if (lex.bottleneck != bot.bottleneck) {
    fail(c.rec, "lex-min bottleneck differs from threshold search");
  }
  c.rec.quantities["lambda"] = lex.bottleneck;
  c.rec.quantities["max_edge_depth"] = worst;
}

void trial_counterexample(Context& c) {
  const double eps = c.cfg.eps;
  const LabeledInstance inst = gen_counterexample_8gg(eps);
  keep_points(c.rec, inst.points);
  const int a = inst.index_of("a");
  const int b = inst.index_of("b");
  const Edge ab(a, b);
  const int depth = edge_depth_gg(inst.points, a, b, c.pol);
  const Matching bot = bottleneck_matching(inst.points);
  BottleneckOptions forbid;
  forbid.forbid = ab;
  const Matching alt = bottleneck_matching(inst.points, forbid);
  const double target = 1.0 + eps;
  c.rec.quantities["eps"] = eps;
  c.rec.quantities["depth_ab"] = depth;
  c.rec.quantities["lambda"] = bot.bottleneck;
  c.rec.quantities["lambda_without_ab"] = alt.bottleneck;
  if (depth != 9) fail(c.rec, "depth of ab is " + std::to_string(depth));
  if (std::abs(bot.bottleneck - target) > 1e-12 * target) fail(c.rec, "lambda differs from 1 + eps");
  if (!bot.contains(ab)) fail(c.rec, "bottleneck matching avoids ab");
  if (!(alt.bottleneck > target)) fail(c.rec, "a bottleneck matching avoids ab");
  if (build_kgg(inst.points, c.cfg.k, c.pol).has_edge(a, b)) fail(c.rec, "ab is an edge at this order");
}

Partition random_partition(Rng& rng, std::span<const Point> pts, int mode) {
  const int n = static_cast<int>(pts.size());
  if (mode == 0) return Partition::singletons(pts.size());
  Partition part;
  const int classes = rng.between(2, std::max(2, n / 2 + 1));
  part.classes.resize(static_cast<std::size_t>(classes));
  if (mode == 1) {
    // random labels over a random subset
    for (int i = 0; i < n; ++i) {
      if (rng.uniform() < 0.2) continue;
      part.classes[rng.below(static_cast<std::uint64_t>(classes))].push_back(i);
    }
  } else {
    // spatial cells around random sites
    std::vector<Point> sites;
    for (int c = 0; c < classes; ++c) sites.push_back(pts[rng.below(pts.size())]);
    for (int i = 0; i < n; ++i) {
      std::size_t best = 0;
      for (std::size_t s = 1; s < sites.size(); ++s) {
        if (dist2(pts[static_cast<std::size_t>(i)], sites[s]) <
            dist2(pts[static_cast<std::size_t>(i)], sites[best])) {
          best = s;
        }
      }
      part.classes[best].push_back(i);
    }
  }
  std::erase_if(part.classes, [](const auto& cls) { return cls.empty(); });
  if (part.classes.size() < 2) return Partition::singletons(pts.size());
  return part;
}

void trial_four_disks(Context& c) {
  const PointSet pts = sample(c);
  const int mode = c.rec.index % 3;
  const Partition part = random_partition(c.rng, pts, mode);
  const ClassGraph cg = partition_graph(pts, part);
  const WitnessTree tree = mst_witness(cg);
  const DiskSystem sys = disk_system(pts, tree);
  const DepthReport plane = max_depth(sys, std::nullopt, c.pol);
  const DepthReport probe = max_depth(sys, std::span<const Point>(pts), c.pol);
  const std::vector<int> ground = part.ground_set();
  const auto violations = disk_emptiness_violations(sys, pts, ground, c.pol);
  const bool centers_ok = center_exclusion_check(sys, c.pol);

  c.rec.instance["classes"] = part.classes;
  c.rec.quantities["partition"] = mode == 0 ? "singletons" : mode == 1 ? "labels" : "cells";
  c.rec.quantities["classes"] = part.classes.size();
  c.rec.quantities["disks"] = sys.disks.size();
  c.rec.quantities["plane_depth"] = plane.depth;
  c.rec.quantities["probe_depth"] = probe.depth;
  if (plane.depth > 3) {
    fail(c.rec, std::to_string(plane.depth) + " disks share a point");
  }
  if (probe.depth > 3) fail(c.rec, "probe depth " + std::to_string(probe.depth));
  if (!violations.empty()) {
    fail(c.rec, "ground point " + std::to_string(violations.front().second) + " lies in disk " +
                    std::to_string(violations.front().first));
  }
  if (!centers_ok) fail(c.rec, "a disk contains another disk's center");

  // witness edges belong to the minimum spanning tree of the ground set
  PointSet ground_pts;
  for (int g : ground) ground_pts.push_back(pts[static_cast<std::size_t>(g)]);
  std::vector<Edge> emst;
  for (const WitnessEdge& w : euclidean_mst(ground_pts).edges) {
    emst.emplace_back(ground[static_cast<std::size_t>(w.points.u)],
                      ground[static_cast<std::size_t>(w.points.v)]);
  }
  std::sort(emst.begin(), emst.end());
  for (const WitnessEdge& w : tree.edges) {
    if (!std::binary_search(emst.begin(), emst.end(), w.points)) {
      fail(c.rec, "witness edge " + edge_name(w.points) + " is not a ground-set MST edge");
    }
  }
}

void trial_matching_bound(Context& c, int order, int bound, bool perfect) {
  const PointSet pts = sample(c);
  const ProximityGraph g = build_kgg(pts, order, c.pol);
  const Matching m = max_matching(g.graph());
  const int nu = static_cast<int>(m.size());
  c.rec.quantities["edges"] = g.edges().size();
  c.rec.quantities["nu"] = nu;
  c.rec.quantities["bound"] = bound;
  for (Edge e : m.pairs) {
    if (!g.has_edge(e.u, e.v)) fail(c.rec, "matching uses non-edge " + edge_name(e));
  }
  if (nu < bound) fail(c.rec, "nu = " + std::to_string(nu) + " < " + std::to_string(bound));
  if (perfect && 2 * nu != c.rec.n) fail(c.rec, "no perfect matching");
}

void trial_tutte_berge(Context& c) {
  const int n = c.rec.n;
  const double p = c.rng.uniform(0.05, 0.7);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (c.rng.uniform() < p) edges.emplace_back(i, j);
    }
  }
  const Graph g(n, edges);
  c.rec.instance = nlohmann::ordered_json::object();
  c.rec.instance["n"] = n;
  c.rec.instance["edges"] = edges_json(g.edges);
  const int nu = static_cast<int>(max_matching(g).size());
  const DeficiencyReport def = deficiency(g);
  c.rec.quantities["edges"] = g.edges.size();
  c.rec.quantities["nu"] = nu;
  c.rec.quantities["deficiency"] = def.deficiency;
  if (2 * nu != n - def.deficiency) fail(c.rec, "2 nu != n - def");
  const int witnessed =
      odd_components_without(g, def.witness) - static_cast<int>(def.witness.size());
  if (witnessed != def.deficiency) fail(c.rec, "witness does not reproduce the deficiency");
  if (tutte_condition(g) != (2 * nu == n)) fail(c.rec, "Tutte condition disagrees with nu");
}

void trial_blocking(Context& c) {
  const PointSet pts = sample(c);
  const int k = c.cfg.k;
  double delta = default_blocker_offset(pts);
  BlockerSet set;
  BlockingReport rep;
  int attempts = 0;
  do {
    if (attempts > 0) delta /= 2.0;
    set = blockers_right(pts, k, delta);
    rep = verify_blocked(pts, set.blockers, k, c.pol);
    ++attempts;
  } while (!rep.blocked && attempts < 30);
  const int expected = (k + 1) * (c.rec.n - 1);
  c.rec.quantities["k"] = k;
  c.rec.quantities["blockers"] = set.blockers.size();
  c.rec.quantities["attempts"] = attempts;
  if (static_cast<int>(set.blockers.size()) != expected) fail(c.rec, "wrong blocker count");
  if (!rep.blocked) fail(c.rec, "edge " + edge_name(rep.unblocked.front()) + " survives");
}

void trial_blocking_necessity(Context& c) {
  const PointSet pts = sample(c);
  const int n = c.rec.n;
  const int budget = std::max(0, ceil_div(n - 1, 3) - 1);
  const DiskSystem mst = disk_system(pts, euclidean_mst(pts));

  // Greedy adversary: arrangement vertices of the MST disks, each chosen to
  // hit as many not-yet-hit disks as possible.
  std::vector<Point> candidates;
  for (std::size_t i = 0; i < mst.disks.size(); ++i) {
    candidates.push_back(mst.disks[i].center);
    for (std::size_t j = i + 1; j < mst.disks.size(); ++j) {
      for (Point q : circle_intersections(mst.disks[i].center, mst.disks[i].radius2,
                                          mst.disks[j].center, mst.disks[j].radius2, c.pol)) {
        candidates.push_back(q);
      }
    }
  }
  std::erase_if(candidates, [&](Point q) {
    return std::any_of(pts.begin(), pts.end(), [&](Point p) { return coincident(p, q, c.pol); });
  });
  std::vector<bool> hit(mst.disks.size(), false);
  PointSet blockers;
  for (int round = 0; round < budget && !candidates.empty(); ++round) {
    std::size_t best = 0;
    int best_gain = -1;
    for (std::size_t q = 0; q < candidates.size(); ++q) {
      int gain = 0;
      for (std::size_t d = 0; d < mst.disks.size(); ++d) {
        if (!hit[d] && counts_as_contained(disk_membership(mst.disks[d].a, mst.disks[d].b,
                                                           candidates[q], c.pol))) {
          ++gain;
        }
      }
      if (gain > best_gain) best_gain = gain, best = q;
    }
    const Point chosen = candidates[best];
    for (std::size_t d = 0; d < mst.disks.size(); ++d) {
      if (counts_as_contained(disk_membership(mst.disks[d].a, mst.disks[d].b, chosen, c.pol))) {
        hit[d] = true;
      }
    }
    blockers.push_back(chosen);
    std::erase_if(candidates, [&](Point q) { return coincident(q, chosen, c.pol); });
  }
  const BlockingReport rep = verify_blocked(pts, blockers, 0, c.pol);
  c.rec.instance["blockers"] = points_json(blockers);
  c.rec.quantities["budget"] = budget;
  c.rec.quantities["disks_hit"] = std::count(hit.begin(), hit.end(), true);
  c.rec.quantities["surviving_edges"] = rep.unblocked.size();
  if (rep.blocked) fail(c.rec, std::to_string(blockers.size()) + " points block 0-GG");
}

void trial_structural(Context& c) {
  const PointSet pts = sample(c);
  const int n = c.rec.n;
  const ProximityGraph gg = build_kgg(pts, 0, c.pol);
  const ProximityGraph rng = build_krng(pts, 0, c.pol);
  const ProximityGraph dg = build_kdg(pts, 0, c.pol);
  const int top = std::max(0, c.cfg.k);
  for (int k = 0; k <= top; ++k) {
    const ProximityGraph g = gg.with_order(k);
    const ProximityGraph r = rng.with_order(k);
    const ProximityGraph d = dg.with_order(k);
    for (Edge e : r.edges()) {
      if (!g.has_edge(e.u, e.v)) fail(c.rec, "RNG edge " + edge_name(e) + " missing from GG at k=" + std::to_string(k));
    }
    for (Edge e : g.edges()) {
      if (!d.has_edge(e.u, e.v)) fail(c.rec, "GG edge " + edge_name(e) + " missing from DG at k=" + std::to_string(k));
    }
    if (k < top) {
      for (const ProximityGraph* h : {&g, &r, &d}) {
        const ProximityGraph next = h->with_order(k + 1);
        for (Edge e : h->edges()) {
          if (!next.has_edge(e.u, e.v)) fail(c.rec, "edge " + edge_name(e) + " lost at k=" + std::to_string(k + 1));
        }
      }
    }
    c.rec.quantities["edges_k" + std::to_string(k)] = {r.edges().size(), g.edges().size(), d.edges().size()};
  }
  const auto& e0 = gg.edges();
  for (std::size_t i = 0; i < e0.size(); ++i) {
    for (std::size_t j = i + 1; j < e0.size(); ++j) {
      const auto at = [&](int v) { return pts[static_cast<std::size_t>(v)]; };
      if (segments_properly_cross(at(e0[i].u), at(e0[i].v), at(e0[j].u), at(e0[j].v))) {
        fail(c.rec, "0-GG edges " + edge_name(e0[i]) + " and " + edge_name(e0[j]) + " cross");
      }
    }
  }
  if (n >= 5 && static_cast<int>(e0.size()) > 3 * n - 8) fail(c.rec, "0-GG has more than 3n-8 edges");
  for (const WitnessEdge& w : euclidean_mst(pts).edges) {
    if (!gg.has_edge(w.points.u, w.points.v)) fail(c.rec, "MST edge " + edge_name(w.points) + " missing from 0-GG");
  }
}

void trial_independence(Context& c) {
  const PointSet pts = sample(c);
  const ProximityGraph g = build_kgg(pts, c.cfg.k, c.pol);
  const int nu = static_cast<int>(max_matching(g.graph()).size());
  const int alpha = independence_number(g.graph());
  c.rec.quantities["nu"] = nu;
  c.rec.quantities["alpha"] = alpha;
  if (alpha > c.rec.n - nu) fail(c.rec, "alpha exceeds n - nu");
}

}  // namespace

std::string_view theorem_id(Theorem t) { return info(t).id; }

Theorem parse_theorem(std::string_view id) {
  for (const auto& i : kTheorems) {
    if (i.id == id) return i.theorem;
  }
  std::string known;
  for (const auto& i : kTheorems) known += (known.empty() ? "" : ", ") + std::string(i.id);
  throw InvalidArgument("unknown theorem '" + std::string(id) + "' (known: " + known + ")");
}

std::vector<Theorem> all_theorems() {
  std::vector<Theorem> out;
  for (const auto& i : kTheorems) out.push_back(i.theorem);
  return out;
}

TrialConfig resolve(TrialConfig cfg) {
  const TheoremInfo& ti = info(cfg.theorem);
  if (cfg.n_min == 0) cfg.n_min = ti.n_min;
  if (cfg.n_max == 0) cfg.n_max = std::max(ti.n_max, cfg.n_min);
  if (cfg.k < 0) cfg.k = ti.k;
  if (cfg.trials < 1) throw InvalidArgument("trials must be at least 1");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw InvalidArgument("bad n range");
  if (cfg.dists.empty()) throw InvalidArgument("no distribution given");
  TolerancePolicy pol{cfg.tau};
  validate(pol);
  if (cfg.threads < 0) throw InvalidArgument("threads must be non-negative");
  if (ti.even_only && cfg.theorem != Theorem::Counterexample8GG &&
      (cfg.n_min % 2 != 0 || cfg.n_max % 2 != 0)) {
    throw InvalidArgument(std::string(ti.id) + " needs even n bounds");
  }
  if (cfg.n_max > ti.cap) {
    throw TooLarge(std::string(ti.id) + " accepts n <= " + std::to_string(ti.cap));
  }
  if (cfg.theorem != Theorem::TutteBerge && cfg.n_min < 2) {
    throw InvalidArgument(std::string(ti.id) + " needs n >= 2");
  }
  return cfg;
}

TrialRecord run_trial(const TrialConfig& cfg, int index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(index));
  Rng rng(rec.seed);
  const TheoremInfo& ti = info(cfg.theorem);
  if (cfg.theorem == Theorem::Counterexample8GG) {
    rec.n = 20;
  } else if (ti.even_only) {
    rec.n = 2 * rng.between(cfg.n_min / 2, cfg.n_max / 2);
  } else {
    rec.n = rng.between(cfg.n_min, cfg.n_max);
  }
  const Distribution dist = cfg.dists[static_cast<std::size_t>(index) % cfg.dists.size()];
  Context c{cfg, TolerancePolicy{cfg.tau}, rng, rec, dist};
  rec.quantities["dist"] = distribution_name(dist);
  try {
    switch (cfg.theorem) {
      case Theorem::BottleneckIn10GG: trial_bottleneck_10gg(c); break;
      case Theorem::Counterexample8GG: trial_counterexample(c); break;
      case Theorem::FourDisks: trial_four_disks(c); break;
      case Theorem::PerfectIn2GG: trial_matching_bound(c, 2, rec.n / 2, true); break;
      case Theorem::MatchingIn1GG: trial_matching_bound(c, 1, ceil_div(2 * (rec.n - 1), 5), false); break;
      case Theorem::MatchingIn0GG: trial_matching_bound(c, 0, ceil_div(rec.n - 1, 4), false); break;
      case Theorem::TutteBerge: trial_tutte_berge(c); break;
      case Theorem::Blocking: trial_blocking(c); break;
      case Theorem::BlockingNecessity: trial_blocking_necessity(c); break;
      case Theorem::Structural: trial_structural(c); break;
      case Theorem::Independence: trial_independence(c); break;
    }
  } catch (const Error& e) {
    fail(rec, std::string("error: ") + e.what());
  }
  if (rec.pass) rec.instance = nullptr;
  return rec;
}

const TrialRecord* Report::first_failure() const {
  for (const auto& r : records) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

Report run_trials(const TrialConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.config = resolve(config);
  const int trials = report.config.trials;
  report.records.resize(static_cast<std::size_t>(trials));

  int threads = report.config.threads;
  if (threads == 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, trials);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < trials; i = next++) {
      report.records[static_cast<std::size_t>(i)] = run_trial(report.config, i);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& r : report.records) (r.pass ? report.passed : report.failed)++;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json to_json(const Report& report) {
  const TrialConfig& cfg = report.config;
  nlohmann::ordered_json out;
  out["theorem"] = theorem_id(cfg.theorem);
  auto& c = out["config"];
  c["n_min"] = cfg.n_min;
  c["n_max"] = cfg.n_max;
  c["k"] = cfg.k;
  auto dists = nlohmann::ordered_json::array();
  for (Distribution d : cfg.dists) dists.push_back(distribution_name(d));
  c["dist"] = dists;
  c["trials"] = cfg.trials;
  c["seed"] = cfg.seed;
  c["tau"] = cfg.tau;
  if (cfg.theorem == Theorem::Counterexample8GG) c["eps"] = cfg.eps;
  out["passed"] = report.passed;
  out["failed"] = report.failed;
  auto records = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json j;
    j["index"] = r.index;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["pass"] = r.pass;
    for (const auto& [key, value] : r.quantities.items()) j[key] = value;
    if (!r.pass) j["detail"] = r.detail;
    records.push_back(std::move(j));
  }
  out["records"] = std::move(records);
  if (const TrialRecord* f = report.first_failure()) {
    nlohmann::ordered_json cx;
    cx["index"] = f->index;
    cx["seed"] = f->seed;
    cx["n"] = f->n;
    cx["detail"] = f->detail;
    for (const auto& [key, value] : f->instance.items()) cx[key] = value;
    out["counterexample"] = std::move(cx);
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

}  // namespace kgg
