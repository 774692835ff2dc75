#include "kgg/matching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "kgg/error.hpp"

namespace kgg {

bool Matching::contains(Edge e) const {
  return std::binary_search(pairs.begin(), pairs.end(), e);
}

Matching make_matching(std::vector<Edge> pairs, std::span<const Point> pts) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> seen;
  for (const Edge& e : pairs) {
    seen.push_back(e.u);
    seen.push_back(e.v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidArgument("matching pairs share a vertex");
  }
  Matching m;
  m.pairs = std::move(pairs);
  if (!pts.empty()) {
    std::vector<double> lengths;
    lengths.reserve(m.pairs.size());
    for (const Edge& e : m.pairs) lengths.push_back(std::sqrt(dist2(pts[e.u], pts[e.v])));
    m.ws = WeightSequence(std::move(lengths));
    m.bottleneck = m.ws.front();
  }
  return m;
}

bool has_perfect_matching(const Graph& g) {
  if (g.n % 2 != 0) return false;
  return 2 * static_cast<int>(max_matching(g).size()) == g.n;
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbour_masks(const Graph& g) {
  std::vector<Mask> nb(static_cast<std::size_t>(g.n), 0);
  for (const Edge& e : g.edges) {
    nb[e.u] |= Mask{1} << e.v;
    nb[e.v] |= Mask{1} << e.u;
  }
  return nb;
}

int odd_components(const std::vector<Mask>& nb, Mask alive) {
  int odd = 0;
  while (alive != 0) {
    Mask component = alive & (~alive + 1);
    Mask frontier = component;
    while (frontier != 0) {
      Mask grown = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) {
        grown |= nb[static_cast<std::size_t>(std::countr_zero(f))];
      }
      frontier = grown & alive & ~component;
      component |= frontier;
    }
    odd += std::popcount(component) & 1;
    alive &= ~component;
  }
  return odd;
}

void require_at_most(const Graph& g, int cap, const char* what) {
  if (g.n > cap) {
    throw TooLarge(std::string(what) + " is limited to " + std::to_string(cap) +
                   " vertices, got " + std::to_string(g.n));
  }
}

Mask full_mask(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

int odd_components_without(const Graph& g, std::span<const int> removed) {
  if (g.n <= 32) {
    Mask alive = full_mask(g.n);
    for (int v : removed) alive &= ~(Mask{1} << v);
    return odd_components(neighbour_masks(g), alive);
  }
  std::vector<bool> gone(static_cast<std::size_t>(g.n), false);
  for (int v : removed) gone[v] = true;
  const auto adj = g.adjacency();
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  int odd = 0;
  for (int s = 0; s < g.n; ++s) {
    if (gone[s] || seen[s]) continue;
    int size = 0;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : adj[v]) {
        if (!gone[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    odd += size & 1;
  }
  return odd;
}

DeficiencyReport deficiency(const Graph& g) {
  require_at_most(g, kMaxDeficiencyVertices, "deficiency");
  const auto nb = neighbour_masks(g);
  const Mask all = full_mask(g.n);
  DeficiencyReport report;
  report.deficiency = -g.n - 1;
  Mask best = 0;
  for (Mask s = 0;; ++s) {
    const int value = odd_components(nb, all & ~s) - std::popcount(s);
    if (value > report.deficiency) {
      report.deficiency = value;
      best = s;
    }
    if (s == all) break;
  }
  for (Mask b = best; b != 0; b &= b - 1) report.witness.push_back(std::countr_zero(b));
  return report;
}

bool tutte_condition(const Graph& g) {
  require_at_most(g, kMaxDeficiencyVertices, "Tutte's condition");
  const auto nb = neighbour_masks(g);
  const Mask all = full_mask(g.n);
  for (Mask s = 0;; ++s) {
    if (odd_components(nb, all & ~s) > std::popcount(s)) return false;
    if (s == all) break;
  }
  return true;
}

Matching bottleneck_matching(std::span<const Point> pts, const BottleneckOptions& options) {
  const int n = static_cast<int>(pts.size());
  if (n % 2 != 0) throw OddCardinality("bottleneck matching needs an even number of points");
  if (n == 0) return {};

  struct Candidate {
    double len2;
    Edge edge;
  };
  std::vector<Candidate> cands;
  auto add = [&](Edge e) {
    if (options.forbid && *options.forbid == e) return;
    cands.push_back({dist2(pts[e.u], pts[e.v]), e});
  };
  if (options.allowed) {
    for (const Edge& e : Graph(n, *options.allowed).edges) add(e);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) add(Edge(i, j));
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.len2 < b.len2 || (a.len2 == b.len2 && a.edge < b.edge);
  });

  std::vector<double> thresholds;
  for (const Candidate& c : cands) {
    if (thresholds.empty() || thresholds.back() != c.len2) thresholds.push_back(c.len2);
  }
  auto solve_at = [&](double limit) {
    std::vector<Edge> edges;
    for (const Candidate& c : cands) {
      if (c.len2 > limit) break;
      edges.push_back(c.edge);
    }
    return max_matching(Graph(n, std::move(edges)));
  };

  if (thresholds.empty() || 2 * static_cast<int>(solve_at(thresholds.back()).size()) != n) {
    throw NoPerfectMatching("the candidate edges admit no perfect matching");
  }
  // Feasibility is monotone in the threshold.
  std::size_t lo = 0;
  std::size_t hi = thresholds.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (2 * static_cast<int>(solve_at(thresholds[mid]).size()) == n) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  Matching best = solve_at(thresholds[lo]);
  Matching result = make_matching(std::move(best.pairs), pts);
  result.bottleneck = std::sqrt(thresholds[lo]);
  return result;
}

namespace {

// Pairs the lowest unmatched vertex with each available neighbour in turn.
class PerfectMatchingWalker {
 public:
  PerfectMatchingWalker(const std::vector<Mask>& nb, int n,
                        const std::function<bool(std::span<const Edge>)>& visit)
      : nb_(nb), n_(n), visit_(visit) {}

  std::size_t run() {
    current_.clear();
    count_ = 0;
    stopped_ = false;
    recurse(full_mask(n_));
    return count_;
  }

 private:
  void recurse(Mask free) {
    if (stopped_) return;
    if (free == 0) {
      ++count_;
      if (!visit_(current_)) stopped_ = true;
      return;
    }
    const int u = std::countr_zero(free);
    const Mask rest = free & ~(Mask{1} << u);
    for (Mask options = nb_[u] & rest; options != 0 && !stopped_; options &= options - 1) {
      const int v = std::countr_zero(options);
      current_.emplace_back(u, v);
      recurse(rest & ~(Mask{1} << v));
      current_.pop_back();
    }
  }

  const std::vector<Mask>& nb_;
  int n_;
  const std::function<bool(std::span<const Edge>)>& visit_;
  std::vector<Edge> current_;
  std::size_t count_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::size_t enumerate_perfect_matchings(const Graph& g,
                                        const std::function<bool(std::span<const Edge>)>& visit) {
  require_at_most(g, kMaxEnumerationVertices, "perfect matching enumeration");
  if (g.n % 2 != 0) throw OddCardinality("perfect matchings need an even number of vertices");
  const auto nb = neighbour_masks(g);
  return PerfectMatchingWalker(nb, g.n, visit).run();
}

std::size_t enumerate_perfect_matchings(int n,
                                        const std::function<bool(std::span<const Edge>)>& visit) {
  if (n > kMaxEnumerationVertices) {
    throw TooLarge("perfect matching enumeration is limited to " +
                   std::to_string(kMaxEnumerationVertices) + " vertices");
  }
  if (n < 0) throw InvalidArgument("vertex count must be non-negative");
  if (n % 2 != 0) throw OddCardinality("perfect matchings need an even number of vertices");
  std::vector<Mask> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nb[v] = full_mask(n) & ~(Mask{1} << v);
  return PerfectMatchingWalker(nb, n, visit).run();
}

Matching lexmin_matching(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  if (n > kMaxEnumerationVertices) {
    throw TooLarge("lex-min matching enumerates at most " +
                   std::to_string(kMaxEnumerationVertices) + " points");
  }
  if (n % 2 != 0) throw OddCardinality("lex-min matching needs an even number of points");

  // Squared lengths order matchings exactly as lengths do.
  std::vector<double> len2(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) len2[i * n + j] = dist2(pts[i], pts[j]);

  std::vector<Edge> best_pairs;
  std::vector<double> best_ws;
  std::vector<double> ws;
  bool have_best = false;
  enumerate_perfect_matchings(n, [&](std::span<const Edge> pairs) {
    ws.clear();
    for (const Edge& e : pairs) ws.push_back(len2[e.u * n + e.v]);
    std::sort(ws.begin(), ws.end(), std::greater<>());
    if (!have_best ||
        std::lexicographical_compare(ws.begin(), ws.end(), best_ws.begin(), best_ws.end())) {
      have_best = true;
      best_ws = ws;
      best_pairs.assign(pairs.begin(), pairs.end());
    }
    return true;
  });
  return make_matching(std::move(best_pairs), pts);
}

namespace {

int max_independent(const std::vector<Mask>& nb, Mask alive) {
  if (alive == 0) return 0;
  // Vertices of degree <= 1 within alive can always be taken.
  int best_v = -1;
  int best_deg = -1;
  for (Mask a = alive; a != 0; a &= a - 1) {
    const int v = std::countr_zero(a);
    const int deg = std::popcount(nb[v] & alive);
    if (deg <= 1) return 1 + max_independent(nb, alive & ~(nb[v] | (Mask{1} << v)));
    if (deg > best_deg) {
      best_deg = deg;
      best_v = v;
    }
  }
  const Mask bit = Mask{1} << best_v;
  const int without = max_independent(nb, alive & ~bit);
  const int with = 1 + max_independent(nb, alive & ~(nb[best_v] | bit));
  return std::max(without, with);
}

}  // namespace

int independence_number(const Graph& g) {
  require_at_most(g, kMaxIndependenceVertices, "independence number");
  return max_independent(neighbour_masks(g), full_mask(g.n));
}

}  // namespace kgg
