#pragma once

// Fixed-timestep game loop. Contains no game-specific code: games are reached
// only through Session (and so through the GameState/render contracts).

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "xkg/graphics.hpp"
#include "xkg/session.hpp"

namespace xkg {

/// A platform window or terminal: supplies key events, shows frames.
class Frontend {
 public:
  virtual ~Frontend() = default;
  virtual std::vector<KeyEvent> poll_events() = 0;
  virtual void present(const DrawList& frame, std::span<const RolloutRecord> rollouts) = 0;
  [[nodiscard]] virtual bool closed() const = 0;
};

struct LoopConfig {
  int fps = 60;
  std::string controller = "human";
  std::string game = "tetris";
  std::uint64_t seed = 1;
  RheaConfig rhea;
  std::int64_t max_frames = -1;  // < 0 runs until the frontend closes
  bool paced = true;             // false: run frames back to back (tests)
};

struct LoopStats {
  std::int64_t frames = 0;
  std::int64_t ticks = 0;
};

/// Per frame: drain input, one controller decision and one next() (none once
/// the game is over), render, present, then sleep to the next frame boundary.
/// Escape closes the loop.
inline LoopStats run_loop(const LoopConfig& cfg, Frontend& frontend) {
  if (cfg.fps < 1) throw UsageError("fps must be >= 1");
  SessionConfig sc;
  sc.game = cfg.game;
  sc.controller = cfg.controller;
  sc.seed = cfg.seed;
  sc.rhea = cfg.rhea;
  Session session(sc);

  using clock = std::chrono::steady_clock;
  const auto period = std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(1.0 / cfg.fps));
  auto deadline = clock::now();
  LoopStats stats;
  bool quit = false;
  while (!quit && !frontend.closed() && (cfg.max_frames < 0 || stats.frames < cfg.max_frames)) {
    for (const KeyEvent& e : frontend.poll_events()) {
      if (e.code == Key::escape && e.pressed) quit = true;
      session.handle(e);
    }
    if (session.frame()) ++stats.ticks;
    frontend.present(session.render(), session.last_rollouts());
    ++stats.frames;
    if (cfg.paced) {
      deadline += period;
      const auto now = clock::now();
      if (deadline < now) deadline = now;  // fell behind: do not try to catch up
      std::this_thread::sleep_until(deadline);
    }
  }
  return stats;
}

}  // namespace xkg
