#pragma once

// Statistical forward planning agents: Rolling Horizon Evolution as a (1+1)
// evolutionary loop over fixed-length action sequences, and a uniform random
// baseline.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "xkg/game.hpp"
#include "xkg/json_writer.hpp"
#include "xkg/rng.hpp"

namespace xkg {

/// How a rollout's end state is scored.
struct ScoreMode {
  enum class Kind { plain, heuristic } kind = Kind::plain;
  double alpha = 1.0;

  static ScoreMode plain() { return {}; }
  static ScoreMode heuristic(double alpha) { return {Kind::heuristic, alpha}; }

  [[nodiscard]] std::string name() const { return kind == Kind::plain ? "plain" : "heuristic"; }
};

template <class S>
concept HasHeuristicScore = requires(const S& s, double alpha) {
  { heuristic_score(s, alpha) } -> std::convertible_to<double>;
};

/// Score of `s` under `mode`. Heuristic mode requires the game to provide
/// `heuristic_score(state, alpha)` (found by ADL).
template <ForwardModel S>
[[nodiscard]] double score_with(const S& s, const ScoreMode& mode) {
  if (mode.kind == ScoreMode::Kind::plain) return s.score();
  if constexpr (HasHeuristicScore<S>) {
    return heuristic_score(s, mode.alpha);
  } else {
    throw std::invalid_argument("game has no heuristic score");
  }
}

template <ForwardModel S>
void check_score_mode(const ScoreMode& mode) {
  if (mode.kind == ScoreMode::Kind::heuristic) {
    if constexpr (!HasHeuristicScore<S>) throw std::invalid_argument("game has no heuristic score");
    if (!(mode.alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  }
}

struct RheaConfig {
  int sequence_length = 20;
  int n_evals = 50;
  double mutation_prob = 0.15;
  bool use_shift_buffer = true;
  ScoreMode score_mode;

  void validate() const {
    if (sequence_length < 1) throw std::invalid_argument("sequenceLength must be >= 1");
    if (n_evals < 1) throw std::invalid_argument("nEvals must be >= 1");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) throw std::invalid_argument("mutationProb must be in [0, 1]");
  }
};

struct RolloutRecord {
  int eval_index = 0;
  double reward = 0.0;
  bool accepted = false;

  friend bool operator==(const RolloutRecord&, const RolloutRecord&) = default;
};

/// Copies `s`, plays `seq` on the copy (stopping early at a terminal state)
/// and scores the result. `s` is never modified.
template <ForwardModel S, class ScoreFn>
[[nodiscard]] double evaluate_sequence(const S& s, std::span<const Action> seq, ScoreFn&& score_fn) {
  S rollout = s;
  for (const Action& a : seq) {
    if (rollout.is_terminal()) break;
    rollout.next(a);
  }
  return score_fn(static_cast<const S&>(rollout));
}

/// Incumbent carried between decisions when the shift buffer is on.
struct RheaMemory {
  std::vector<Action> incumbent;
};

struct RheaDecision {
  Action action;
  std::vector<RolloutRecord> records;
};

/*
 * One Rolling Horizon Evolution decision.
 *
 * Evaluation 0 scores the starting incumbent: a fresh uniform-random sequence,
 * or (with the shift buffer) last decision's incumbent shifted left by one
 * gene with a random gene appended. Each of the remaining n_evals - 1
 * evaluations resamples every gene of a copy of the incumbent with
 * probability mutation_prob and replaces the incumbent when its fitness is
 * >= the incumbent's. Returns the incumbent's first action and one record per
 * evaluation.
 */
template <ForwardModel S>
[[nodiscard]] RheaDecision rhea_select(const S& s, const RheaConfig& cfg, RheaMemory& memory, SplitMix64& rng) {
  const auto actions = s.actions();
  const int n_actions = static_cast<int>(actions.size());
  const auto len = static_cast<std::size_t>(cfg.sequence_length);
  auto random_action = [&] { return actions[static_cast<std::size_t>(rng.uniform(n_actions))]; };
  auto fitness = [&](std::span<const Action> seq) {
    return evaluate_sequence(s, seq, [&](const S& end) { return score_with(end, cfg.score_mode); });
  };

  std::vector<Action> incumbent;
  incumbent.reserve(len);
  if (cfg.use_shift_buffer && memory.incumbent.size() == len) {
    incumbent.assign(memory.incumbent.begin() + 1, memory.incumbent.end());
    incumbent.push_back(random_action());
  } else {
    for (std::size_t i = 0; i < len; ++i) incumbent.push_back(random_action());
  }

  RheaDecision out;
  out.records.reserve(static_cast<std::size_t>(cfg.n_evals));
  double best = fitness(incumbent);
  out.records.push_back({0, best, true});

  std::vector<Action> candidate(len);
  for (int e = 1; e < cfg.n_evals; ++e) {
    for (std::size_t i = 0; i < len; ++i)
      candidate[i] = rng.bernoulli(cfg.mutation_prob) ? random_action() : incumbent[i];
    const double f = fitness(candidate);
    const bool accepted = f >= best;
    if (accepted) {
      best = f;
      incumbent.swap(candidate);
    }
    out.records.push_back({e, f, accepted});
  }

  out.action = incumbent.front();
  memory.incumbent = std::move(incumbent);
  return out;
}

/// RHEA as an Agent: owns its PRNG (separate from the game's) and memory.
template <ForwardModel S>
class RheaAgent {
 public:
  RheaAgent(const RheaConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {
    cfg_.validate();
    check_score_mode<S>(cfg_.score_mode);
  }

  Action select_action(const S& s) {
    RheaDecision d = rhea_select(s, cfg_, memory_, rng_);
    last_records_ = std::move(d.records);
    return d.action;
  }

  [[nodiscard]] const std::vector<RolloutRecord>& last_records() const { return last_records_; }
  [[nodiscard]] const RheaConfig& config() const { return cfg_; }
  void reset() { memory_.incumbent.clear(); }

 private:
  RheaConfig cfg_;
  SplitMix64 rng_;
  RheaMemory memory_;
  std::vector<RolloutRecord> last_records_;
};

template <ForwardModel S>
[[nodiscard]] Action random_select(const S& s, SplitMix64& rng) {
  const auto actions = s.actions();
  return actions[static_cast<std::size_t>(rng.uniform(static_cast<int>(actions.size())))];
}

class RandomAgent {
 public:
  explicit RandomAgent(std::uint64_t seed) : rng_(seed) {}

  template <ForwardModel S>
  Action select_action(const S& s) {
    return random_select(s, rng_);
  }

 private:
  SplitMix64 rng_;
};

/// Always plays one fixed action id.
class ConstantAgent {
 public:
  explicit ConstantAgent(int id = 0) : id_(id) {}

  template <ForwardModel S>
  Action select_action(const S& s) {
    return s.actions()[static_cast<std::size_t>(id_)];
  }

 private:
  int id_;
};

/// Rollout-record wire format (schema version 1), canonical like the
/// draw-list encoding.
[[nodiscard]] inline std::string serialize_rollouts(std::span<const RolloutRecord> records) {
  std::string out = "{\"v\":1,\"records\":[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back('{');
    json::append_key(out, "evalIndex", true);
    json::append_integer(out, records[i].eval_index);
    json::append_key(out, "reward");
    json::append_number(out, records[i].reward);
    json::append_key(out, "accepted");
    json::append_bool(out, records[i].accepted);
    out.push_back('}');
  }
  out += "]}";
  return out;
}

}  // namespace xkg
