#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kgg/geom.hpp"
#include "kgg/random.hpp"

namespace kgg {

enum class Theorem {
  BottleneckIn10GG,   ///< "thm3.2": a bottleneck matching lies in 10-GG
  Counterexample8GG,  ///< "counterexample8gg": none lies in 8-GG
  FourDisks,          ///< "thm4.5": partition-MST disks have plane depth <= 3
  PerfectIn2GG,       ///< "thm4.6": 2-GG has a perfect matching (even n)
  MatchingIn1GG,      ///< "thm4.7": nu(1-GG) >= ceil(2(n-1)/5)
  MatchingIn0GG,      ///< "thm4.8": nu(0-GG) >= ceil((n-1)/4)
  TutteBerge,         ///< "tutte-berge": 2 nu = n - def on random graphs
  Blocking,           ///< "blocking": blockers_right blocks k-GG
  BlockingNecessity,  ///< "thm5.1": fewer than ceil((n-1)/3) points never block 0-GG
  Structural,         ///< "structural": containment, monotonicity, planarity
  Independence,       ///< "independence": alpha(k-GG) <= n - nu
};

std::string_view theorem_id(Theorem t);
Theorem parse_theorem(std::string_view id);
std::vector<Theorem> all_theorems();

struct TrialConfig {
  Theorem theorem = Theorem::FourDisks;
  int n_min = 0;  ///< 0: theorem default
  int n_max = 0;
  int k = -1;     ///< -1: theorem default
  std::vector<Distribution> dists{Distribution::Uniform, Distribution::Clustered};
  int trials = 100;
  std::uint64_t seed = 1;
  double tau = 1e-9;
  double eps = 0.005;  ///< counterexample8gg only
  int threads = 0;     ///< 0: hardware concurrency
};

/// Fills theorem defaults and throws InvalidArgument / TooLarge on an
/// unusable configuration.
TrialConfig resolve(TrialConfig config);

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  bool pass = true;
  std::string detail;
  nlohmann::ordered_json quantities = nlohmann::ordered_json::object();
  nlohmann::ordered_json instance;  ///< kept only for failing trials
};

struct Report {
  TrialConfig config;
  std::vector<TrialRecord> records;
  int passed = 0;
  int failed = 0;
  double seconds = 0.0;  ///< wall time; not part of the JSON
  const TrialRecord* first_failure() const;
};

/// Runs every trial; the result does not depend on the thread count.
Report run_trials(const TrialConfig& config);

/// Single trial, exposed for replay.
TrialRecord run_trial(const TrialConfig& resolved, int index);

nlohmann::ordered_json to_json(const Report& report);

}  // namespace kgg
