#pragma once

// ANSI terminal frontend: rasterizes each frame in software and prints it
// with 24-bit color half-block characters. Keys are read from a raw,
// non-blocking stdin.

#include <termios.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <optional>
#include <span>
#include <vector>

#include "xkg/loop.hpp"
#include "xkg/raster.hpp"

namespace xkg::tools {

class TerminalFrontend final : public Frontend {
 public:
  static bool available() { return isatty(STDIN_FILENO) && isatty(STDOUT_FILENO); }

  TerminalFrontend() {
    tcgetattr(STDIN_FILENO, &saved_);
    termios raw = saved_;
    raw.c_lflag &= static_cast<tcflag_t>(~(ICANON | ECHO));
    raw.c_cc[VMIN] = 0;
    raw.c_cc[VTIME] = 0;
    tcsetattr(STDIN_FILENO, TCSANOW, &raw);
    std::fputs("\x1b[?25l\x1b[2J", stdout);
  }

  ~TerminalFrontend() override {
    tcsetattr(STDIN_FILENO, TCSANOW, &saved_);
    std::fputs("\x1b[0m\x1b[?25h\n", stdout);
    std::fflush(stdout);
  }

  TerminalFrontend(const TerminalFrontend&) = delete;
  TerminalFrontend& operator=(const TerminalFrontend&) = delete;

  std::vector<KeyEvent> poll_events() override {
    std::vector<KeyEvent> out;
    unsigned char buf[64];
    const ssize_t n = read(STDIN_FILENO, buf, sizeof buf);
    // Terminals report no releases, so each keystroke is a press + release.
    auto tap = [&](Key k) {
      out.push_back({k, true});
      out.push_back({k, false});
    };
    for (ssize_t i = 0; i < n; ++i) {
      const unsigned char c = buf[i];
      if (c == 0x1b && i + 2 < n && buf[i + 1] == '[') {
        switch (buf[i + 2]) {
          case 'A': tap(Key::up); break;
          case 'B': tap(Key::down); break;
          case 'C': tap(Key::right); break;
          case 'D': tap(Key::left); break;
          default: tap(Key::other); break;
        }
        i += 2;
      } else if (c == 0x1b || c == 'q') {
        tap(Key::escape);
      } else if (c == ' ') {
        tap(Key::space);
      } else {
        tap(Key::other);
      }
    }
    return out;
  }

  void present(const DrawList& frame, std::span<const RolloutRecord> rollouts) override {
    const int w = static_cast<int>(std::ceil(frame.width));
    const int h = static_cast<int>(std::ceil(frame.height));
    if (!surface_ || surface_->width() != w || surface_->height() != h) surface_.emplace(w, h);
    surface_->clear(colors::black);
    raster_draw(*surface_, frame);

    const int stride = std::max({1, (w + kMaxColumns - 1) / kMaxColumns, (h + 2 * kMaxRows - 1) / (2 * kMaxRows)});
    std::string out = "\x1b[H";
    for (int y = 0; y + stride < h; y += 2 * stride) {
      for (int x = 0; x < w; x += stride) {
        const Color top = surface_->at(x, y), bottom = surface_->at(x, y + stride);
        char cell[64];
        std::snprintf(cell, sizeof cell, "\x1b[38;2;%d;%d;%dm\x1b[48;2;%d;%d;%dm\xe2\x96\x80", top.r, top.g, top.b,
                      bottom.r, bottom.g, bottom.b);
        out += cell;
      }
      out += "\x1b[0m\x1b[K\n";
    }
    // Text is too small to survive downsampling; echo it verbatim.
    for (const Drawable& d : frame.ops)
      if (const auto* t = std::get_if<Text>(&d.shape)) out += t->s + "\x1b[K\n";
    if (!rollouts.empty()) {
      double best = rollouts.front().reward;
      for (const RolloutRecord& r : rollouts) best = std::max(best, r.reward);
      char line[128];
      std::snprintf(line, sizeof line, "rhea: %zu rollouts, best reward %.2f\x1b[K\n", rollouts.size(), best);
      out += line;
    }
    out += "arrows/space to play, q to quit\x1b[K";
    std::fwrite(out.data(), 1, out.size(), stdout);
    std::fflush(stdout);
  }

  [[nodiscard]] bool closed() const override { return false; }

 private:
  static constexpr int kMaxColumns = 100;
  static constexpr int kMaxRows = 45;

  termios saved_{};
  std::optional<Surface> surface_;
};

}  // namespace xkg::tools
