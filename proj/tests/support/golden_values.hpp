#pragma once

// Regression values frozen from the first verified run. Regenerate only for
// an intentional rules change, and regenerate the golden JSON files with it.

#include <array>
#include <cstdint>
#include <string_view>

namespace xkg {

// run_headless(TetrisState(default config, seed 42), RandomAgent(99), 1000)
inline constexpr std::int64_t kGoldenTetrisTicks = 140;
inline constexpr std::string_view kGoldenTetrisHash = "0xf75cffa080e4cb8f";

// run_headless(AsteroidsState(default config, seed 42), RandomAgent(99), 1000)
inline constexpr std::int64_t kGoldenAsteroidsTicks = 1000;
inline constexpr std::string_view kGoldenAsteroidsHash = "0xd26a82697365d396";

// Action script behind tetris_seed7_script.json (gravityEvery 1, seed 7).
inline constexpr std::array<int, 24> kGoldenTetrisScript{1, 1, 1, 0, 3, 0, 0, 0, 0, 0, 0, 0,
                                                         0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 4};

// Action script behind asteroids_seed7_script.json (seed 7).
inline constexpr std::array<int, 30> kGoldenAsteroidsScript{4, 1, 1, 1, 2, 2, 4, 0, 0, 0, 0, 0, 3, 3, 4,
                                                            1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0};

}  // namespace xkg
