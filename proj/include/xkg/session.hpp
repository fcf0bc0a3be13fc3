#pragma once

// Game-independent driver for interactive play: picks a game by name, feeds
// it actions from a human (keyboard) or an AI controller one frame at a time
// and renders it. The native loop and a browser build both drive this.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xkg/agents.hpp"
#include "xkg/asteroids.hpp"
#include "xkg/drawlist_json.hpp"
#include "xkg/game.hpp"
#include "xkg/tetris.hpp"

namespace xkg {

inline constexpr std::array<std::string_view, 3> kGameNames{"tetris", "tetris-heuristic", "asteroids"};
inline constexpr std::array<std::string_view, 2> kPolicyNames{"random", "rhea"};
inline constexpr std::array<std::string_view, 2> kControllerNames{"human", "rhea"};

/// Bad game/policy/controller name or option; the message lists valid names.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <std::size_t N>
[[nodiscard]] std::string join_names(const std::array<std::string_view, N>& names) {
  std::string out;
  for (std::string_view n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

template <std::size_t N>
void require_name(std::string_view kind, std::string_view value, const std::array<std::string_view, N>& names) {
  if (std::find(names.begin(), names.end(), value) == names.end())
    throw UsageError("unknown " + std::string(kind) + " '" + std::string(value) + "' (registered: " +
                     join_names(names) + ")");
}

/// Tracks held keys. A key pressed during a frame yields its action on that
/// frame even if it was released before the frame ended; a key still held
/// repeats every frame; with nothing held the action is none.
class HumanController {
 public:
  void handle(const KeyEvent& e) {
    std::erase(held_, e.code);
    if (e.pressed) {
      held_.push_back(e.code);
      pressed_this_frame_.push_back(e.code);
    }
  }

  template <PlayableGame S>
  Action next_action() {
    int id = 0;
    if (auto from = latest_mapped<S>(pressed_this_frame_))
      id = *from;
    else if (auto held = latest_mapped<S>(held_))
      id = *held;
    pressed_this_frame_.clear();
    return S::actions()[static_cast<std::size_t>(id)];
  }

 private:
  template <PlayableGame S>
  static std::optional<int> latest_mapped(const std::vector<Key>& keys) {
    for (auto it = keys.rbegin(); it != keys.rend(); ++it)
      if (auto id = S::action_for_key(*it)) return id;
    return std::nullopt;
  }

  std::vector<Key> held_;
  std::vector<Key> pressed_this_frame_;
};

struct SessionConfig {
  std::string game = "tetris";
  std::string controller = "human";
  std::uint64_t seed = 1;
  RheaConfig rhea;
  // Tetris gravityEvery; 0 picks 30 (~2 rows/s at 60 FPS) for a human and 1
  // for RHEA, whose default 20-tick horizon would otherwise never see a lock.
  int tetris_gravity_every = 0;
  double alpha = 1.0;  // heuristic weight for tetris-heuristic
};

class Session {
 public:
  explicit Session(const SessionConfig& cfg) : game_(cfg.game) {
    require_name("game", cfg.game, kGameNames);
    require_name("controller", cfg.controller, kControllerNames);
    const bool human = cfg.controller == "human";
    if (cfg.game == "asteroids") {
      impl_ = std::make_unique<Model<asteroids::AsteroidsState>>(asteroids::AsteroidsState({}, cfg.seed), human,
                                                                  cfg.rhea, cfg.seed);
    } else {
      tetris::TetrisConfig tc;
      tc.gravity_every = cfg.tetris_gravity_every > 0 ? cfg.tetris_gravity_every : (human ? 30 : 1);
      tc.heuristic_alpha = cfg.alpha;
      RheaConfig rc = cfg.rhea;
      if (cfg.game == "tetris-heuristic") rc.score_mode = ScoreMode::heuristic(cfg.alpha);
      impl_ = std::make_unique<Model<tetris::TetrisState>>(tetris::TetrisState(tc, cfg.seed), human, rc, cfg.seed);
    }
  }

  void handle(const KeyEvent& e) { impl_->handle(e); }

  /// Chooses one action and advances one tick; a finished game is left as is.
  /// Returns whether a tick happened.
  bool frame() { return impl_->frame(); }

  [[nodiscard]] DrawList render() const { return impl_->render(); }
  [[nodiscard]] std::string render_json() const { return serialize_drawlist(impl_->render()); }
  [[nodiscard]] std::span<const RolloutRecord> last_rollouts() const { return impl_->last_rollouts(); }
  [[nodiscard]] std::string last_rollouts_json() const { return serialize_rollouts(impl_->last_rollouts()); }
  [[nodiscard]] std::int64_t tick() const { return impl_->tick(); }
  [[nodiscard]] bool terminal() const { return impl_->terminal(); }
  [[nodiscard]] double score() const { return impl_->score(); }
  [[nodiscard]] std::uint64_t hash() const { return impl_->hash(); }
  [[nodiscard]] const std::string& game() const { return game_; }

 private:
  struct Impl {
    virtual ~Impl() = default;
    virtual void handle(const KeyEvent&) = 0;
    virtual bool frame() = 0;
    virtual DrawList render() const = 0;
    virtual std::span<const RolloutRecord> last_rollouts() const = 0;
    virtual std::int64_t tick() const = 0;
    virtual bool terminal() const = 0;
    virtual double score() const = 0;
    virtual std::uint64_t hash() const = 0;
  };

  template <PlayableGame S>
  struct Model final : Impl {
    Model(S s, bool human_controlled, const RheaConfig& rc, std::uint64_t seed)
        : state(std::move(s)), human(human_controlled), rhea(rc, seed ^ 0xA5A5A5A5A5A5A5A5ULL) {}

    void handle(const KeyEvent& e) override { keys.handle(e); }

    bool frame() override {
      const Action a = human ? keys.next_action<S>() : Action{};
      if (state.is_terminal()) return false;
      state.next(human ? a : rhea.select_action(state));
      return true;
    }

    DrawList render() const override { return state.render(); }
    std::span<const RolloutRecord> last_rollouts() const override { return rhea.last_records(); }
    std::int64_t tick() const override { return state.tick(); }
    bool terminal() const override { return state.is_terminal(); }
    double score() const override { return state.score(); }
    std::uint64_t hash() const override { return state.hash(); }

    S state;
    bool human;
    HumanController keys;
    RheaAgent<S> rhea;
  };

  std::string game_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace xkg
