// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit if any
// criterion fails. Runs headless.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/golden.hpp"
#include "xkg/xkg.hpp"

namespace {

using xkg::asteroids::AsteroidsState;
using xkg::tetris::TetrisConfig;
using xkg::tetris::TetrisState;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome throughput() {
  xkg::BenchRequest req;
  req.game = "tetris";
  req.max_ticks = 10'000'000;
  req.seed = 1;
  const xkg::TicksReport rep = xkg::bench(req);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.2f M ticks/s over %lld ticks (floor 5.00)", rep.mticks_per_second(),
                static_cast<long long>(rep.ticks));
  return {rep.ticks_per_second >= 5e6, buf};
}

Outcome heuristic_ratio() {
  auto best = [](const char* game) {
    double rate = 0;
    for (int i = 0; i < 2; ++i) {
      xkg::BenchRequest req;
      req.game = game;
      req.max_ticks = 3'000'000;
      rate = std::max(rate, xkg::bench(req).ticks_per_second);
    }
    return rate;
  };
  const double plain = best("tetris"), heuristic = best("tetris-heuristic");
  char buf[128];
  std::snprintf(buf, sizeof buf, "plain %.2f M / heuristic %.2f M = %.2f (floor 2.0)", plain / 1e6, heuristic / 1e6,
                plain / heuristic);
  return {plain / heuristic >= 2.0, buf};
}

template <class S, class Make>
int determinism_failures(Make make) {
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    xkg::RandomAgent a(seed ^ xkg::kPolicySeedSalt), b(seed ^ xkg::kPolicySeedSalt);
    failures += xkg::run_headless(make(seed), a, 500).state.hash() != xkg::run_headless(make(seed), b, 500).state.hash();
  }
  return failures;
}

Outcome determinism() {
  TetrisConfig tc;
  tc.gravity_every = 1;
  const int t = determinism_failures<TetrisState>([&](std::uint64_t s) { return TetrisState(tc, s); });
  const int a = determinism_failures<AsteroidsState>([](std::uint64_t s) { return AsteroidsState({}, s); });
  return {t == 0 && a == 0, "1000 seeds x 500 ticks; failures: tetris " + std::to_string(t) + ", asteroids " +
                                std::to_string(a)};
}

template <class S, class Make>
int copy_failures(Make make, int trials) {
  xkg::SplitMix64 rng(2024);
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    const S original = make(static_cast<std::uint64_t>(i), rng.uniform(300));
    const std::uint64_t before = original.hash();
    S copy = original;
    for (int k = 0, n = 1 + rng.uniform(50); k < n && !copy.is_terminal(); ++k)
      copy.next(copy.actions()[static_cast<std::size_t>(rng.uniform(copy.n_actions()))]);
    failures += original.hash() != before;
  }
  return failures;
}

Outcome copy_independence() {
  const int t = copy_failures<TetrisState>([](std::uint64_t s, int n) { return xkg::testing::random_tetris(s, n); },
                                           10'000);
  const int a = copy_failures<AsteroidsState>(
      [](std::uint64_t s, int n) { return xkg::testing::random_asteroids(s, n); }, 10'000);
  return {t == 0 && a == 0, "10000 trials per game; failures: tetris " + std::to_string(t) + ", asteroids " +
                                std::to_string(a)};
}

Outcome line_clear_oracle() {
  const int mismatches = xkg::testing::exhaustive_clear_mismatches();
  return {mismatches == 0, "1024 row patterns x 16 full-row masks; mismatches " + std::to_string(mismatches)};
}

struct Sample {
  double mean = 0, sd = 0;
};

template <class MakeAgent>
Sample final_heuristic_scores(MakeAgent make_agent) {
  TetrisConfig tc;
  tc.gravity_every = 1;
  std::vector<double> scores;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto agent = make_agent(seed);
    const auto r = xkg::run_headless(TetrisState(tc, seed), agent, 1000);
    scores.push_back(xkg::tetris::heuristic_score(r.state, 1.0));
  }
  Sample s;
  for (double x : scores) s.mean += x;
  s.mean /= static_cast<double>(scores.size());
  for (double x : scores) s.sd += (x - s.mean) * (x - s.mean);
  s.sd = std::sqrt(s.sd / static_cast<double>(scores.size() - 1));
  return s;
}

Outcome rhea_efficacy() {
  xkg::RheaConfig cfg;
  cfg.score_mode = xkg::ScoreMode::heuristic(1.0);
  const Sample rhea = final_heuristic_scores(
      [&](std::uint64_t seed) { return xkg::RheaAgent<TetrisState>(cfg, seed ^ xkg::kPolicySeedSalt); });
  const Sample random =
      final_heuristic_scores([](std::uint64_t seed) { return xkg::RandomAgent(seed ^ xkg::kPolicySeedSalt); });
  const double se = std::sqrt(rhea.sd * rhea.sd / 20 + random.sd * random.sd / 20);
  const double margin = rhea.mean - random.mean;
  char buf[160];
  std::snprintf(buf, sizeof buf, "rhea mean %.2f (sd %.2f), random mean %.2f (sd %.2f), margin %.2f > 2se %.2f",
                rhea.mean, rhea.sd, random.mean, random.sd, margin, 2 * se);
  return {margin > 2 * se, buf};
}

Outcome bandit() {
  xkg::RheaConfig cfg;
  cfg.sequence_length = 1;
  cfg.n_evals = 100;
  cfg.mutation_prob = 1.0;
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const xkg::testing::BanditGame g{static_cast<int>(seed % 5)};
    xkg::SplitMix64 rng(seed);
    xkg::RheaMemory memory;
    wins += xkg::rhea_select(g, cfg, memory, rng).action.id == g.winner;
  }
  return {wins >= 195, std::to_string(wins) + "/200 seeds pick the winning arm (floor 195)"};
}

Outcome goldens() {
  TetrisConfig tc;
  tc.gravity_every = 1;
  TetrisState t(tc, 7);
  AsteroidsState a({}, 7);
  std::vector<std::pair<std::string, std::string>> cases{
      {"tetris_seed7.json", xkg::serialize_drawlist(t.render())},
      {"asteroids_seed7.json", xkg::serialize_drawlist(a.render())},
  };
  for (int id : xkg::kGoldenTetrisScript) t.step(id);
  for (int id : xkg::kGoldenAsteroidsScript) a.step(id);
  cases.emplace_back("tetris_seed7_script.json", xkg::serialize_drawlist(t.render()));
  cases.emplace_back("asteroids_seed7_script.json", xkg::serialize_drawlist(a.render()));
  std::string mismatched;
  for (const auto& [file, bytes] : cases) {
    std::string golden;
    try {
      golden = xkg::testing::read_golden(file);
    } catch (const std::exception&) {
    }
    if (golden != bytes) mismatched += " " + file;
  }
  return {mismatched.empty(), mismatched.empty() ? "4 draw-lists byte-identical" : "mismatch:" + mismatched};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"throughput >= 5M ticks/s", throughput},
      {"heuristic slowdown ratio >= 2", heuristic_ratio},
      {"determinism", determinism},
      {"copy independence", copy_independence},
      {"line-clear oracle", line_clear_oracle},
      {"RHEA efficacy vs random", rhea_efficacy},
      {"RHEA bandit sanity", bandit},
      {"golden draw-lists", goldens},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
