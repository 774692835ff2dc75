// Edmonds' blossom algorithm for maximum-cardinality matching, O(V^3).

#include <algorithm>
#include <numeric>
#include <queue>

#include "kgg/matching.hpp"

namespace kgg {

namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : n_(g.n),
        adj_(g.adjacency()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, false),
        in_blossom_(n_, false) {}

  std::vector<int> solve() {
    greedy_start();
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_augmenting_path(v);
      // Flip the alternating path ending at u.
      while (u != -1) {
        const int pu = parent_[u];
        const int next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
    }
    return match_;
  }

 private:
  void greedy_start() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
  }

  int lowest_common_ancestor(int a, int b) const {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int blossom_base, int child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract the blossom onto its base.
          const int cur = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
  const std::vector<int> mate = BlossomMatcher(g).solve();
  std::vector<Edge> pairs;
  for (int v = 0; v < g.n; ++v) {
    if (mate[v] > v) pairs.emplace_back(v, mate[v]);
  }
  return make_matching(std::move(pairs));
}

}  // namespace kgg
