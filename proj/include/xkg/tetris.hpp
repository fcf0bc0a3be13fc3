#pragma once

// Tetris forward model.
//
// Rules: 7 tetrominoes spawned uniformly at random, clockwise rotation inside
// a 4x4 frame with no wall kicks (blocked moves are silently rejected), one
// point per cleared line. Row 0 is the top of the board.

#include <array>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xkg/game.hpp"
#include "xkg/graphics.hpp"
#include "xkg/hash.hpp"
#include "xkg/rng.hpp"

namespace xkg::tetris {

inline constexpr int kMaxWidth = 16;
inline constexpr int kMaxHeight = 32;
inline constexpr int kShapes = 7;
inline constexpr int kRotations = 4;
inline constexpr int kFrame = 4;

struct TetrisConfig {
  int width = 10;
  int height = 20;
  double heuristic_alpha = 1.0;
  int gravity_every = 1;

  void validate() const {
    if (width < 4 || width > kMaxWidth) throw std::invalid_argument("tetris width must be in [4, 16]");
    if (height < 4 || height > kMaxHeight) throw std::invalid_argument("tetris height must be in [4, 32]");
    if (!(heuristic_alpha >= 0.0)) throw std::invalid_argument("heuristicAlpha must be >= 0");
    if (gravity_every < 1) throw std::invalid_argument("gravityEvery must be >= 1");
  }
};

struct Cell {
  int col = 0, row = 0;
  friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

using PieceCells = std::array<Cell, 4>;

enum Shape : int { I, O, T, S, Z, J, L };

/// Turns a frame cell 90 degrees clockwise on screen (y down).
constexpr Cell rotate_cw(Cell c) { return {kFrame - 1 - c.row, c.col}; }

// Rotation 0 of each shape; the other rotations are derived with rotate_cw.
inline constexpr std::array<PieceCells, kShapes> kSpawnCells{{
    {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},  // I
    {{{1, 1}, {2, 1}, {1, 2}, {2, 2}}},  // O (centered, so rotation leaves it in place)
    {{{1, 0}, {0, 1}, {1, 1}, {2, 1}}},  // T
    {{{1, 0}, {2, 0}, {0, 1}, {1, 1}}},  // S
    {{{0, 0}, {1, 0}, {1, 1}, {2, 1}}},  // Z
    {{{0, 0}, {0, 1}, {1, 1}, {2, 1}}},  // J
    {{{2, 0}, {0, 1}, {1, 1}, {2, 1}}},  // L
}};

inline constexpr auto kTetrominoes = [] {
  std::array<std::array<PieceCells, kRotations>, kShapes> table{};
  for (int s = 0; s < kShapes; ++s) {
    table[s][0] = kSpawnCells[s];
    for (int r = 1; r < kRotations; ++r)
      for (int i = 0; i < 4; ++i) table[s][r][i] = rotate_cw(table[s][r - 1][i]);
  }
  return table;
}();

/// Board cells: 0 is empty, k + 1 is a block left by shape k.
class Grid {
 public:
  Grid() : Grid(10, 20) {}
  Grid(int width, int height) : width_(width), height_(height) {
    if (width < 1 || width > kMaxWidth || height < 1 || height > kMaxHeight)
      throw std::invalid_argument("grid dimensions out of range");
  }

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }

  [[nodiscard]] std::uint8_t at(int col, int row) const { return cells_[index(col, row)]; }
  [[nodiscard]] bool filled(int col, int row) const { return at(col, row) != 0; }
  void set(int col, int row, std::uint8_t v) { cells_[index(col, row)] = v; }

  [[nodiscard]] bool row_full(int row) const {
    for (int c = 0; c < width_; ++c)
      if (!filled(c, row)) return false;
    return true;
  }

  void clear() { cells_.fill(0); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  [[nodiscard]] std::size_t index(int col, int row) const {
    assert(col >= 0 && col < width_ && row >= 0 && row < height_);
    return static_cast<std::size_t>(row * width_ + col);
  }

  int width_;
  int height_;
  std::array<std::uint8_t, kMaxWidth * kMaxHeight> cells_{};
};

/// Removes every full row in place, shifting the rows above down. Returns the
/// number of rows removed.
inline int clear_full_rows(Grid& g) {
  int write = g.height() - 1;
  int cleared = 0;
  for (int read = g.height() - 1; read >= 0; --read) {
    if (g.row_full(read)) {
      ++cleared;
      continue;
    }
    if (write != read)
      for (int c = 0; c < g.width(); ++c) g.set(c, write, g.at(c, read));
    --write;
  }
  for (; write >= 0; --write)
    for (int c = 0; c < g.width(); ++c) g.set(c, write, 0);
  return cleared;
}

struct ClearResult {
  Grid grid;
  int cleared = 0;
};

[[nodiscard]] inline ClearResult clear_lines(Grid grid) {
  const int n = clear_full_rows(grid);
  return {grid, n};
}

namespace detail {

// Scans every column from the top; the caller owns the buffer.
inline void scan_heights(const Grid& g, std::span<int> out) {
  for (int c = 0; c < g.width(); ++c) {
    int h = 0;
    for (int r = 0; r < g.height(); ++r) {
      if (g.filled(c, r)) {
        h = g.height() - r;
        break;
      }
    }
    out[static_cast<std::size_t>(c)] = h;
  }
}

}  // namespace detail

/// Height of the topmost block in each column, measured from the floor.
[[nodiscard]] inline std::vector<int> column_heights(const Grid& g) {
  std::vector<int> h(static_cast<std::size_t>(g.width()));
  detail::scan_heights(g, h);
  return h;
}

struct Piece {
  int shape = 0;
  int rotation = 0;
  int col = 0;  // frame anchor
  int row = 0;

  [[nodiscard]] PieceCells cells() const {
    PieceCells out = kTetrominoes[static_cast<std::size_t>(shape)][static_cast<std::size_t>(rotation)];
    for (Cell& c : out) {
      c.col += col;
      c.row += row;
    }
    return out;
  }

  friend bool operator==(const Piece&, const Piece&) = default;
};

enum ActionId : int { kNone = 0, kLeft = 1, kRight = 2, kRotate = 3, kDown = 4 };

inline constexpr std::array<Action, 5> kActions{{
    {kNone, "none"},
    {kLeft, "left"},
    {kRight, "right"},
    {kRotate, "rotate"},
    {kDown, "down"},
}};

// Render geometry, in pixels.
inline constexpr double kCellSize = 20.0;
inline constexpr double kCellInset = 1.0;
inline constexpr double kMargin = 10.0;
inline constexpr double kHeader = 30.0;

inline constexpr std::array<Color, kShapes> kPalette{{
    {0, 240, 240, 255},  // I
    {240, 240, 0, 255},  // O
    {160, 0, 240, 255},  // T
    {0, 240, 0, 255},    // S
    {240, 0, 0, 255},    // Z
    {0, 0, 240, 255},    // J
    {240, 160, 0, 255},  // L
}};

class TetrisState {
 public:
  static constexpr std::string_view kName = "tetris";

  TetrisState() : TetrisState(TetrisConfig{}, 0) {}

  TetrisState(const TetrisConfig& config, std::uint64_t seed)
      : config_(config), grid_((config.validate(), config.width), config.height), rng_(seed) {
    spawn();
  }

  /// One tick: apply the action if it fits, then gravity on every
  /// gravity_every-th tick; a piece that cannot fall locks, full rows clear
  /// and the next piece spawns. Stepping a finished game is a contract
  /// violation (asserts in debug builds, ignored otherwise).
  void step(int action) {
    assert(!game_over_ && "step() on a finished game");
    if (game_over_) return;

    if (action != kNone) {
      Piece moved = piece_;
      switch (action) {
        case kLeft: --moved.col; break;
        case kRight: ++moved.col; break;
        case kRotate: moved.rotation = (moved.rotation + 1) % kRotations; break;
        case kDown: ++moved.row; break;
        default: break;
      }
      if (fits(moved)) piece_ = moved;
    }

    if (tick_ % config_.gravity_every == 0) {
      Piece fallen = piece_;
      ++fallen.row;
      if (fits(fallen))
        piece_ = fallen;
      else
        lock();
    }
    ++tick_;
  }

  void next(Action a) { step(a.id); }

  [[nodiscard]] double score() const { return score_; }
  [[nodiscard]] bool is_terminal() const { return game_over_; }
  [[nodiscard]] bool game_over() const { return game_over_; }
  [[nodiscard]] static constexpr int n_actions() { return static_cast<int>(kActions.size()); }
  [[nodiscard]] static std::span<const Action> actions() { return kActions; }
  [[nodiscard]] std::int64_t tick() const { return tick_; }
  [[nodiscard]] int lines_cleared() const { return lines_; }
  [[nodiscard]] const TetrisConfig& config() const { return config_; }
  [[nodiscard]] const SplitMix64& rng() const { return rng_; }

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] const Piece& piece() const { return piece_; }

  // Scenario setup for tests and scripted demos.
  Grid& mutable_grid() { return grid_; }
  void set_piece(const Piece& p) { piece_ = p; }

  [[nodiscard]] bool fits(const Piece& p) const {
    for (const Cell& c : p.cells()) {
      if (c.col < 0 || c.col >= grid_.width() || c.row < 0 || c.row >= grid_.height()) return false;
      if (grid_.filled(c.col, c.row)) return false;
    }
    return true;
  }

  /// Piece of the given shape at the spawn position (top-center, rotation 0).
  [[nodiscard]] Piece spawn_piece(int shape) const {
    int top = kFrame;
    for (const Cell& c : kSpawnCells[static_cast<std::size_t>(shape)]) top = std::min(top, c.row);
    return {shape, 0, (grid_.width() - kFrame) / 2, -top};
  }

  [[nodiscard]] std::uint64_t hash() const {
    Hasher h;
    h.add(config_.width).add(config_.height).add(config_.gravity_every).add(config_.heuristic_alpha);
    for (int r = 0; r < grid_.height(); ++r)
      for (int c = 0; c < grid_.width(); ++c) h.add(grid_.at(c, r));
    h.add(piece_.shape).add(piece_.rotation).add(piece_.col).add(piece_.row);
    h.add(lines_).add(score_).add(tick_).add(game_over_).add(rng_.state());
    return h.value();
  }

  static std::optional<int> action_for_key(Key k) {
    switch (k) {
      case Key::left: return kLeft;
      case Key::right: return kRight;
      case Key::up: return kRotate;
      case Key::down: return kDown;
      default: return std::nullopt;
    }
  }

  /// Filled cells in row-major order, then the active piece, then the board
  /// border and the score text.
  [[nodiscard]] DrawList render() const {
    DrawList list;
    list.width = grid_.width() * kCellSize + 2 * kMargin;
    list.height = grid_.height() * kCellSize + kHeader + 2 * kMargin;
    list.ops.reserve(static_cast<std::size_t>(grid_.width() * grid_.height()) + 6);
    const double ox = kMargin, oy = kHeader + kMargin;
    auto cell_rect = [&](int col, int row) {
      return Rect{{ox + (col + 0.5) * kCellSize, oy + (row + 0.5) * kCellSize},
                  kCellSize - 2 * kCellInset,
                  kCellSize - 2 * kCellInset};
    };
    for (int r = 0; r < grid_.height(); ++r)
      for (int c = 0; c < grid_.width(); ++c)
        if (const auto v = grid_.at(c, r)) list.add(cell_rect(c, r), Style::filled(kPalette[v - 1u]));
    for (const Cell& c : piece_.cells())
      if (c.row >= 0 && c.row < grid_.height() && c.col >= 0 && c.col < grid_.width())
        list.add(cell_rect(c.col, c.row), Style::filled(kPalette[static_cast<std::size_t>(piece_.shape)]));
    list.add(Rect{{ox + grid_.width() * kCellSize / 2, oy + grid_.height() * kCellSize / 2},
                  grid_.width() * kCellSize,
                  grid_.height() * kCellSize},
             Style::outlined(colors::gray, 2.0));
    std::string label = "Score: " + std::to_string(lines_);
    if (game_over_) label += " GAME OVER";
    list.add(Text{std::move(label), {list.width / 2, kMargin + kHeader / 2}, 16.0}, Style::filled(colors::white));
    return list;
  }

 private:
  void lock() {
    for (const Cell& c : piece_.cells()) grid_.set(c.col, c.row, static_cast<std::uint8_t>(piece_.shape + 1));
    const int n = clear_full_rows(grid_);
    lines_ += n;
    score_ += 1.0 * n;
    spawn();
  }

  void spawn() {
    piece_ = spawn_piece(rng_.uniform(kShapes));
    if (!fits(piece_)) game_over_ = true;
  }

  TetrisConfig config_;
  Grid grid_;
  Piece piece_;
  int lines_ = 0;
  double score_ = 0.0;
  std::int64_t tick_ = 0;
  bool game_over_ = false;
  SplitMix64 rng_;
};

/// Plain score minus alpha times the summed absolute height difference of
/// neighbouring columns. Heights are rescanned from the grid on every call.
[[nodiscard]] inline double heuristic_score(const TetrisState& s, double alpha) {
  std::array<int, kMaxWidth> h{};
  detail::scan_heights(s.grid(), h);
  int bumpiness = 0;
  for (int i = 0; i + 1 < s.grid().width(); ++i)
    bumpiness += std::abs(h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(i + 1)]);
  return s.score() - alpha * bumpiness;
}

static_assert(PlayableGame<TetrisState>);

}  // namespace xkg::tetris
