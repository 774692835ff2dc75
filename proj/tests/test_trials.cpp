#include <doctest.h>

#include "kgg/error.hpp"
#include "kgg/trials.hpp"

using namespace kgg;

namespace {

TrialConfig config(Theorem t, int trials, std::uint64_t seed = 7) {
  TrialConfig c;
  c.theorem = t;
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("theorem ids") {
  for (Theorem t : all_theorems()) CHECK(parse_theorem(theorem_id(t)) == t);
  CHECK_THROWS_AS(parse_theorem("thm9.9"), InvalidArgument);
}

TEST_CASE("every trial family passes a short run") {
  for (Theorem t : all_theorems()) {
    CAPTURE(theorem_id(t));
    const Report r = run_trials(config(t, 12));
    CHECK(r.failed == 0);
    CHECK(r.passed == 12);
    CHECK(r.first_failure() == nullptr);
  }
}

TEST_CASE("bottleneck trials at n = 10") {
  TrialConfig c = config(Theorem::BottleneckIn10GG, 100, 7);
  c.n_min = c.n_max = 10;
  const Report r = run_trials(c);
  CHECK(r.failed == 0);
  for (const auto& rec : r.records) CHECK(rec.n == 10);
}

TEST_CASE("reports are reproducible and independent of threads") {
  TrialConfig c = config(Theorem::FourDisks, 40, 99);
  c.threads = 1;
  const std::string one = to_json(run_trials(c)).dump();
  c.threads = 4;
  const std::string four = to_json(run_trials(c)).dump();
  CHECK(one == four);
  c.seed = 100;
  CHECK(to_json(run_trials(c)).dump() != one);
}

TEST_CASE("configuration validation") {
  TrialConfig odd = config(Theorem::PerfectIn2GG, 1);
  odd.n_min = 3;
  odd.n_max = 9;
  CHECK_THROWS_AS(resolve(odd), InvalidArgument);
  TrialConfig big = config(Theorem::BottleneckIn10GG, 1);
  big.n_min = 4;
  big.n_max = 16;
  CHECK_THROWS_AS(resolve(big), TooLarge);
  CHECK_THROWS_AS(resolve(config(Theorem::FourDisks, 0)), InvalidArgument);
  TrialConfig tau = config(Theorem::FourDisks, 1);
  tau.tau = -1;
  CHECK_THROWS_AS(resolve(tau), InvalidArgument);
  const TrialConfig r = resolve(config(Theorem::BottleneckIn10GG, 1));
  CHECK(r.k == 10);
  CHECK(r.n_max == 12);
}

TEST_CASE("a failing trial carries its instance") {
  // the counterexample forbids order 8 but the claim holds at order 9
  TrialConfig c = config(Theorem::Counterexample8GG, 1);
  c.k = 9;
  const Report r = run_trials(c);
  CHECK(r.failed == 1);
  const auto j = to_json(r);
  REQUIRE(j["counterexample"].is_object());
  CHECK(j["counterexample"]["points"].size() == 20);
  CHECK(j["records"][0]["pass"] == false);

  // order 9 in the bottleneck family is still fine; order 0 is not
  TrialConfig strict = config(Theorem::BottleneckIn10GG, 30, 1);
  strict.k = 0;
  const Report s = run_trials(strict);
  CHECK(s.failed > 0);
  const auto js = to_json(s);
  const auto& cx = js["counterexample"];
  CHECK(cx["points"].size() == static_cast<std::size_t>(cx["n"].get<int>()));
  // replaying the recorded trial reproduces the failure
  const TrialRecord replay = run_trial(resolve(strict), cx["index"].get<int>());
  CHECK_FALSE(replay.pass);
  CHECK(replay.detail == cx["detail"].get<std::string>());
}

TEST_CASE("report field order") {
  const auto j = to_json(run_trials(config(Theorem::MatchingIn0GG, 2)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"theorem", "config", "passed", "failed", "records", "counterexample"});
  CHECK(j["counterexample"].is_null());
}
