// xkg: headless benchmark, interactive play and wire-format dumps.
//
//   xkg bench --game tetris|tetris-heuristic|asteroids --ticks N --seed S --policy random|rhea [--alpha A] [--json]
//   xkg play --game G --controller human|rhea [--fps F] [--frontend auto|x11|terminal|headless]
//   xkg dump --game G --seed S [--actions 1,1,3] [--out FILE]
//   xkg decide --game G --seed S [--warmup N]
//
// Exit status: 0 on success, 2 on usage errors, 1 on runtime failures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "terminal_frontend.hpp"
#include "xkg/xkg.hpp"
#ifdef XKG_HAVE_X11
#include "x11_frontend.hpp"
#endif

namespace {

constexpr int kUsageExit = 2;

void add_rhea_options(CLI::App& cmd, xkg::RheaConfig& rhea) {
  cmd.add_option("--horizon", rhea.sequence_length, "RHEA sequence length (ticks)")->capture_default_str();
  cmd.add_option("--evals", rhea.n_evals, "RHEA rollouts per decision")->capture_default_str();
  cmd.add_option("--mutation", rhea.mutation_prob, "RHEA per-gene mutation probability")->capture_default_str();
  cmd.add_flag("!--no-shift", rhea.use_shift_buffer, "disable the RHEA shift buffer");
}

class HeadlessFrontend final : public xkg::Frontend {
 public:
  std::vector<xkg::KeyEvent> poll_events() override { return {}; }
  void present(const xkg::DrawList& frame, std::span<const xkg::RolloutRecord>) override { last_ = frame; }
  [[nodiscard]] bool closed() const override { return false; }
  [[nodiscard]] const xkg::DrawList& last() const { return last_; }

 private:
  xkg::DrawList last_;
};

// Draw list of a seeded state after an action script, for golden files and
// the browser frontend.
std::string dump_drawlist(const std::string& game, std::uint64_t seed, const std::vector<int>& script, int gravity) {
  auto play = [&](auto state) {
    for (int id : script) {
      if (id < 0 || id >= state.n_actions()) throw xkg::UsageError("action id out of range: " + std::to_string(id));
      if (state.is_terminal()) break;
      state.step(id);
    }
    return xkg::serialize_drawlist(state.render());
  };
  xkg::require_name("game", game, xkg::kGameNames);
  if (game == "asteroids") return play(xkg::asteroids::AsteroidsState({}, seed));
  xkg::tetris::TetrisConfig tc;
  tc.gravity_every = gravity;
  return play(xkg::tetris::TetrisState(tc, seed));
}

std::string decide_json(const std::string& game, std::uint64_t seed, int warmup, xkg::RheaConfig rhea, double alpha) {
  xkg::require_name("game", game, xkg::kGameNames);
  auto run = [&](auto state) {
    using S = decltype(state);
    xkg::RandomAgent warm(seed ^ xkg::kPolicySeedSalt);
    state = xkg::run_headless(std::move(state), warm, warmup).state;
    if (state.is_terminal()) throw std::runtime_error("game ended during warmup");
    xkg::RheaAgent<S> agent(rhea, seed);
    (void)agent.select_action(state);
    return xkg::serialize_rollouts(agent.last_records());
  };
  if (game == "asteroids") return run(xkg::asteroids::AsteroidsState({}, seed));
  if (game == "tetris-heuristic") rhea.score_mode = xkg::ScoreMode::heuristic(alpha);
  xkg::tetris::TetrisConfig tc;
  tc.gravity_every = 1;
  return run(xkg::tetris::TetrisState(tc, seed));
}

void write_bytes(const std::string& bytes, const std::string& path) {
  if (path.empty()) {
    std::cout << bytes << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

int run_play(const xkg::LoopConfig& cfg, const std::string& frontend_name) {
  std::unique_ptr<xkg::Frontend> frontend;
  std::string name = frontend_name;
  if (name == "auto") {
#ifdef XKG_HAVE_X11
    if (xkg::tools::X11Frontend::available()) name = "x11";
#endif
    if (name == "auto" && xkg::tools::TerminalFrontend::available()) name = "terminal";
    if (name == "auto") {
      std::cerr << "xkg: no window system ($DISPLAY unset) and no interactive terminal; "
                   "rerun with --frontend headless --frames N\n";
      return 1;
    }
    if (name == "terminal") std::cerr << "xkg: no X display available, using the terminal frontend\n";
  }
  if (name == "x11") {
#ifdef XKG_HAVE_X11
    xkg::SessionConfig probe;
    probe.game = cfg.game;
    const xkg::DrawList first = xkg::Session(probe).render();
    frontend = std::make_unique<xkg::tools::X11Frontend>(static_cast<int>(first.width), static_cast<int>(first.height),
                                                         cfg.game.c_str());
#else
    std::cerr << "xkg: built without X11 support\n";
    return 1;
#endif
  } else if (name == "terminal") {
    if (!xkg::tools::TerminalFrontend::available()) {
      std::cerr << "xkg: stdin/stdout is not a terminal\n";
      return 1;
    }
    frontend = std::make_unique<xkg::tools::TerminalFrontend>();
  } else {
    frontend = std::make_unique<HeadlessFrontend>();
  }
  const xkg::LoopStats stats = xkg::run_loop(cfg, *frontend);
  frontend.reset();
  std::cout << "frames " << stats.frames << ", ticks " << stats.ticks << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xkg: cross-platform game AI framework"};
  app.require_subcommand(1);

  xkg::BenchRequest bench_req;
  bool as_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "headless ticks-per-second benchmark");
  bench_cmd->add_option("--game", bench_req.game, "tetris | tetris-heuristic | asteroids")->capture_default_str();
  bench_cmd->add_option("--ticks", bench_req.max_ticks, "ticks to run")->capture_default_str();
  bench_cmd->add_option("--seed", bench_req.seed, "game seed")->capture_default_str();
  bench_cmd->add_option("--policy", bench_req.policy, "random | rhea")->capture_default_str();
  bench_cmd->add_option("--alpha", bench_req.alpha, "heuristic column-difference weight")->capture_default_str();
  bench_cmd->add_flag("--json", as_json, "emit the report as JSON");
  add_rhea_options(*bench_cmd, bench_req.rhea);

  xkg::LoopConfig loop;
  std::string frontend = "auto";
  auto* play_cmd = app.add_subcommand("play", "play a game with a human or RHEA controller");
  play_cmd->add_option("--game", loop.game, "tetris | tetris-heuristic | asteroids")->capture_default_str();
  play_cmd->add_option("--controller", loop.controller, "human | rhea")->capture_default_str();
  play_cmd->add_option("--fps", loop.fps, "frames per second")->capture_default_str();
  play_cmd->add_option("--seed", loop.seed, "game seed")->capture_default_str();
  play_cmd->add_option("--frames", loop.max_frames, "stop after N frames (-1: until closed)")->capture_default_str();
  play_cmd->add_option("--frontend", frontend, "auto | x11 | terminal | headless")
      ->check(CLI::IsMember({"auto", "x11", "terminal", "headless"}))
      ->capture_default_str();
  add_rhea_options(*play_cmd, loop.rhea);

  std::string dump_game = "tetris", out_path;
  std::uint64_t dump_seed = 1;
  std::vector<int> script;
  int gravity = 1;
  auto* dump_cmd = app.add_subcommand("dump", "print the draw-list JSON of a seeded state");
  dump_cmd->add_option("--game", dump_game, "tetris | asteroids")->capture_default_str();
  dump_cmd->add_option("--seed", dump_seed, "game seed")->capture_default_str();
  dump_cmd->add_option("--actions", script, "comma-separated action ids applied first")->delimiter(',');
  dump_cmd->add_option("--gravity", gravity, "tetris gravityEvery")->capture_default_str();
  dump_cmd->add_option("--out", out_path, "write exact bytes to FILE instead of stdout");

  std::string decide_game = "tetris";
  std::uint64_t decide_seed = 1;
  int warmup = 0;
  double decide_alpha = 1.0;
  xkg::RheaConfig decide_rhea;
  auto* decide_cmd = app.add_subcommand("decide", "print the rollout-record JSON of one RHEA decision");
  decide_cmd->add_option("--game", decide_game, "tetris | tetris-heuristic | asteroids")->capture_default_str();
  decide_cmd->add_option("--seed", decide_seed, "game and agent seed")->capture_default_str();
  decide_cmd->add_option("--warmup", warmup, "random ticks played before deciding")->capture_default_str();
  decide_cmd->add_option("--alpha", decide_alpha, "heuristic weight")->capture_default_str();
  add_rhea_options(*decide_cmd, decide_rhea);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (*bench_cmd) {
      const xkg::TicksReport rep = xkg::bench(bench_req);
      std::cout << (as_json ? xkg::report_json(rep) + "\n" : xkg::report_table(rep));
    } else if (*play_cmd) {
      return run_play(loop, frontend);
    } else if (*dump_cmd) {
      write_bytes(dump_drawlist(dump_game, dump_seed, script, gravity), out_path);
    } else if (*decide_cmd) {
      write_bytes(decide_json(decide_game, decide_seed, warmup, decide_rhea, decide_alpha), "");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "xkg: " << e.what() << '\n';
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "xkg: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
