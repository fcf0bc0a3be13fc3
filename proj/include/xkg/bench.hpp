#pragma once

// Headless throughput benchmark: game ticks per second.
//
// Only the tick loop is timed. A game that ends is replaced by a fresh one
// (seeded from a stream derived from the benchmark seed) until the requested
// number of ticks has run; those restarts happen inside the timed region and
// are counted in the report. In heuristic mode the heuristic score is
// computed once per tick, inside the timed region.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include "xkg/agents.hpp"
#include "xkg/asteroids.hpp"
#include "xkg/json_writer.hpp"
#include "xkg/session.hpp"
#include "xkg/tetris.hpp"

namespace xkg {

struct TicksReport {
  std::string game;
  std::string score_mode;
  std::string policy;
  std::uint64_t seed = 0;
  std::int64_t ticks = 0;
  std::int64_t restarts = 0;
  double wall_seconds = 0.0;
  double ticks_per_second = 0.0;
  double final_score = 0.0;
  std::uint64_t state_hash = 0;

  [[nodiscard]] double mticks_per_second() const { return ticks_per_second / 1e6; }
};

struct BenchRequest {
  std::string game = "tetris";  // tetris | tetris-heuristic | asteroids
  std::int64_t max_ticks = 1'000'000;
  std::uint64_t seed = 1;
  std::string policy = "random";
  double alpha = 1.0;
  RheaConfig rhea;
};

inline constexpr std::uint64_t kPolicySeedSalt = 0xA5A5A5A5A5A5A5A5ULL;

template <ForwardModel S, class P, class Make>
[[nodiscard]] TicksReport bench_game(Make&& make, P& policy, const ScoreMode& mode, std::int64_t max_ticks,
                                     std::uint64_t seed) {
  if (max_ticks < 1) throw UsageError("ticks must be >= 1");
  check_score_mode<S>(mode);
  SplitMix64 seeds(seed);
  S state = make(seed);
  std::int64_t ticks = 0, restarts = 0;
  double sink = 0.0;

  const auto t0 = std::chrono::steady_clock::now();
  while (ticks < max_ticks) {
    if (state.is_terminal()) {
      state = make(seeds.next());
      ++restarts;
      if (state.is_terminal()) throw std::logic_error("freshly constructed game is already over");
    }
    HeadlessResult<S> r = [&] {
      if (mode.kind == ScoreMode::Kind::heuristic)
        return run_headless(std::move(state), policy, max_ticks - ticks,
                            [&](const S& s) { sink += score_with(s, mode); });
      return run_headless(std::move(state), policy, max_ticks - ticks);
    }();
    state = std::move(r.state);
    ticks += r.ticks;
  }
  const auto t1 = std::chrono::steady_clock::now();

  // Keeps the per-tick heuristic work observable to the optimizer.
  volatile double keep = sink;
  (void)keep;

  TicksReport rep;
  rep.score_mode = mode.name();
  rep.seed = seed;
  rep.ticks = ticks;
  rep.restarts = restarts;
  rep.wall_seconds = std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
  rep.ticks_per_second = static_cast<double>(ticks) / rep.wall_seconds;
  rep.final_score = score_with(state, mode);
  rep.state_hash = state.hash();
  return rep;
}

namespace detail {

template <ForwardModel S, class Make>
TicksReport bench_with_policy(const BenchRequest& req, Make&& make, const ScoreMode& mode) {
  const std::uint64_t policy_seed = req.seed ^ kPolicySeedSalt;
  if (req.policy == "rhea") {
    RheaConfig rc = req.rhea;
    rc.score_mode = mode;
    RheaAgent<S> agent(rc, policy_seed);
    return bench_game<S>(make, agent, mode, req.max_ticks, req.seed);
  }
  RandomAgent agent(policy_seed);
  return bench_game<S>(make, agent, mode, req.max_ticks, req.seed);
}

}  // namespace detail

/// Runs a benchmark for a registered game and policy name.
[[nodiscard]] inline TicksReport bench(const BenchRequest& req) {
  require_name("game", req.game, kGameNames);
  require_name("policy", req.policy, kPolicyNames);
  TicksReport rep;
  if (req.game == "asteroids") {
    rep = detail::bench_with_policy<asteroids::AsteroidsState>(
        req, [](std::uint64_t s) { return asteroids::AsteroidsState({}, s); }, ScoreMode::plain());
  } else {
    tetris::TetrisConfig tc;
    tc.gravity_every = 1;
    tc.heuristic_alpha = req.alpha;
    const ScoreMode mode = req.game == "tetris-heuristic" ? ScoreMode::heuristic(req.alpha) : ScoreMode::plain();
    rep = detail::bench_with_policy<tetris::TetrisState>(
        req, [&tc](std::uint64_t s) { return tetris::TetrisState(tc, s); }, mode);
  }
  rep.game = req.game;
  rep.policy = req.policy;
  return rep;
}

/// Benchmark report, schema version 1. stateHash is a hex string because
/// 64-bit integers do not survive JavaScript numbers.
[[nodiscard]] inline std::string report_json(const TicksReport& r) {
  std::string out = "{";
  json::append_key(out, "v", true);
  json::append_integer(out, 1);
  json::append_key(out, "game");
  json::append_string(out, r.game);
  json::append_key(out, "scoreMode");
  json::append_string(out, r.score_mode);
  json::append_key(out, "policy");
  json::append_string(out, r.policy);
  json::append_key(out, "seed");
  json::append_string(out, std::to_string(r.seed));
  json::append_key(out, "ticks");
  json::append_integer(out, r.ticks);
  json::append_key(out, "restarts");
  json::append_integer(out, r.restarts);
  json::append_key(out, "wallSeconds");
  json::append_number(out, r.wall_seconds);
  json::append_key(out, "ticksPerSecond");
  json::append_number(out, r.ticks_per_second);
  json::append_key(out, "mTicksPerSecond");
  json::append_number(out, r.mticks_per_second());
  json::append_key(out, "finalScore");
  json::append_number(out, r.final_score);
  json::append_key(out, "stateHash");
  json::append_string(out, json::hex64(r.state_hash));
  out.push_back('}');
  return out;
}

[[nodiscard]] inline std::string report_table(const TicksReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "game          %s\n"
                "score mode    %s\n"
                "policy        %s\n"
                "seed          %llu\n"
                "ticks         %lld\n"
                "restarts      %lld\n"
                "wall seconds  %.4f\n"
                "ticks/sec     %.0f (%.2f M)\n"
                "final score   %g\n"
                "state hash    %s\n",
                r.game.c_str(), r.score_mode.c_str(), r.policy.c_str(), static_cast<unsigned long long>(r.seed),
                static_cast<long long>(r.ticks), static_cast<long long>(r.restarts), r.wall_seconds,
                r.ticks_per_second, r.mticks_per_second(), r.final_score, json::hex64(r.state_hash).c_str());
  return buf;
}

}  // namespace xkg
