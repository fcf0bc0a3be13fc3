#pragma once

// Software rasterizer for draw lists. Best-effort pixels: shapes are sampled
// at pixel centers, no anti-aliasing, colors written through unchanged.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "xkg/graphics.hpp"

namespace xkg {

class Surface {
 public:
  Surface(int width, int height, Color background = colors::black)
      : width_(width), height_(height), pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), background) {
    if (width < 1 || height < 1) throw std::invalid_argument("surface must be at least 1x1");
  }

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] Color at(int x, int y) const { return pixels_[index(x, y)]; }
  void set(int x, int y, Color c) { pixels_[index(x, y)] = c; }
  void clear(Color c) { std::fill(pixels_.begin(), pixels_.end(), c); }
  [[nodiscard]] const std::vector<Color>& pixels() const { return pixels_; }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  [[nodiscard]] std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<Color> pixels_;
};

namespace raster_detail {

struct PixelRange {
  int x0, y0, x1, y1;  // inclusive
  [[nodiscard]] bool empty() const { return x0 > x1 || y0 > y1; }
};

inline PixelRange clip(const Surface& s, double minx, double miny, double maxx, double maxy) {
  auto lo = [](double v) { return static_cast<int>(std::floor(v)); };
  auto hi = [](double v) { return static_cast<int>(std::ceil(v)); };
  return {std::max(0, lo(minx)), std::max(0, lo(miny)), std::min(s.width() - 1, hi(maxx)),
          std::min(s.height() - 1, hi(maxy))};
}

// Even-odd scanline fill, sampled at pixel centers.
inline void fill_polygon(Surface& s, const std::vector<Vec2>& pts, Color c) {
  if (pts.size() < 3) return;
  double miny = pts[0].y, maxy = pts[0].y;
  for (const Vec2& p : pts) {
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const PixelRange r = clip(s, 0, miny, s.width() - 1, maxy);
  std::vector<double> xs;
  for (int y = r.y0; y <= r.y1; ++y) {
    const double py = y + 0.5;
    xs.clear();
    for (std::size_t i = 0, j = pts.size() - 1; i < pts.size(); j = i++) {
      const Vec2 a = pts[j], b = pts[i];
      if ((a.y <= py) != (b.y <= py)) xs.push_back(a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      const int xa = std::max(0, static_cast<int>(std::ceil(xs[k] - 0.5)));
      const int xb = std::min(s.width() - 1, static_cast<int>(std::ceil(xs[k + 1] - 0.5)) - 1);
      for (int x = xa; x <= xb; ++x) s.set(x, y, c);
    }
  }
}

// Pixels whose center is within width/2 of segment ab (at least half a pixel).
inline void stroke_segment(Surface& s, Vec2 a, Vec2 b, double width, Color c) {
  const double hw = std::max(width / 2.0, 0.5);
  const PixelRange r = clip(s, std::min(a.x, b.x) - hw, std::min(a.y, b.y) - hw, std::max(a.x, b.x) + hw,
                            std::max(a.y, b.y) + hw);
  const Vec2 ab = b - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  for (int y = r.y0; y <= r.y1; ++y) {
    for (int x = r.x0; x <= r.x1; ++x) {
      const Vec2 p{x + 0.5, y + 0.5};
      double t = len2 > 0 ? ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      const Vec2 d = p - (a + ab * t);
      if (d.x * d.x + d.y * d.y <= hw * hw) s.set(x, y, c);
    }
  }
}

inline void stroke_path(Surface& s, const std::vector<Vec2>& pts, bool closed, double width, Color c) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) stroke_segment(s, pts[i], pts[i + 1], width, c);
  if (closed && pts.size() > 2) stroke_segment(s, pts.back(), pts.front(), width, c);
}

inline std::vector<Vec2> transformed(const Transform& t, std::vector<Vec2> pts) {
  for (Vec2& p : pts) p = transform_point(t, p);
  return pts;
}

inline std::vector<Vec2> ellipse_outline(const Ellipse& e, int segments = 64) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(segments));
  for (int i = 0; i < segments; ++i) {
    const double th = 2 * std::numbers::pi * i / segments;
    pts.push_back({e.center.x + e.w / 2 * std::cos(th), e.center.y + e.h / 2 * std::sin(th)});
  }
  return pts;
}

// 3x5 glyphs, one row per entry, bit 2 = leftmost column.
struct Glyph {
  char ch;
  std::array<std::uint8_t, 5> rows;
};

inline constexpr std::array<Glyph, 43> kFont{{
    {'0', {7, 5, 5, 5, 7}}, {'1', {2, 6, 2, 2, 7}}, {'2', {7, 1, 7, 4, 7}}, {'3', {7, 1, 7, 1, 7}},
    {'4', {5, 5, 7, 1, 1}}, {'5', {7, 4, 7, 1, 7}}, {'6', {7, 4, 7, 5, 7}}, {'7', {7, 1, 1, 1, 1}},
    {'8', {7, 5, 7, 5, 7}}, {'9', {7, 5, 7, 1, 7}}, {'A', {2, 5, 7, 5, 5}}, {'B', {6, 5, 6, 5, 6}},
    {'C', {7, 4, 4, 4, 7}}, {'D', {6, 5, 5, 5, 6}}, {'E', {7, 4, 6, 4, 7}}, {'F', {7, 4, 6, 4, 4}},
    {'G', {7, 4, 5, 5, 7}}, {'H', {5, 5, 7, 5, 5}}, {'I', {7, 2, 2, 2, 7}}, {'J', {1, 1, 1, 5, 7}},
    {'K', {5, 5, 6, 5, 5}}, {'L', {4, 4, 4, 4, 7}}, {'M', {5, 7, 7, 5, 5}}, {'N', {6, 5, 5, 5, 5}},
    {'O', {7, 5, 5, 5, 7}}, {'P', {7, 5, 7, 4, 4}}, {'Q', {7, 5, 5, 7, 1}}, {'R', {7, 5, 6, 5, 5}},
    {'S', {7, 4, 7, 1, 7}}, {'T', {7, 2, 2, 2, 2}}, {'U', {5, 5, 5, 5, 7}}, {'V', {5, 5, 5, 5, 2}},
    {'W', {5, 5, 7, 7, 5}}, {'X', {5, 5, 2, 5, 5}}, {'Y', {5, 5, 2, 2, 2}}, {'Z', {7, 1, 2, 4, 7}},
    {':', {0, 2, 0, 2, 0}}, {'-', {0, 0, 7, 0, 0}}, {'.', {0, 0, 0, 0, 2}}, {'+', {0, 2, 7, 2, 0}},
    {'!', {2, 2, 2, 0, 2}}, {'/', {1, 1, 2, 4, 4}}, {'?', {7, 1, 3, 0, 2}},
}};

inline const Glyph* find_glyph(char ch) {
  if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
  for (const Glyph& g : kFont)
    if (g.ch == ch) return &g;
  return nullptr;
}

// Glyph cells are drawn as small quads so the text honours the transform.
inline void draw_text(Surface& s, const Text& t, const Transform& tf, Color c) {
  const double advance = kTextAdvance * t.font_size;
  const double cell = t.font_size / 5.0;
  const double x0 = t.center.x - text_width(t) / 2.0;
  const double y0 = t.center.y - t.font_size / 2.0;
  std::size_t i = 0;
  for (char ch : t.s) {
    if ((static_cast<unsigned char>(ch) & 0xC0) == 0x80) continue;
    if (const Glyph* g = find_glyph(ch)) {
      const double gx = x0 + static_cast<double>(i) * advance + (advance - 3 * cell) / 2.0;
      for (int row = 0; row < 5; ++row)
        for (int col = 0; col < 3; ++col)
          if (g->rows[static_cast<std::size_t>(row)] & (4 >> col)) {
            const double cx = gx + col * cell, cy = y0 + row * cell;
            fill_polygon(s, transformed(tf, {{cx, cy}, {cx + cell, cy}, {cx + cell, cy + cell}, {cx, cy + cell}}), c);
          }
    }
    ++i;
  }
}

}  // namespace raster_detail

/// Paints each drawable in order: fill first, then stroke, both after the
/// drawable's transform. Pixels outside the surface are dropped; the surface
/// is not cleared.
inline void raster_draw(Surface& surface, const DrawList& list) {
  using namespace raster_detail;
  for (const Drawable& d : list.ops) {
    const Style& st = d.style;
    const Transform& tf = d.transform;
    std::visit(
        [&](const auto& shape) {
          using T = std::decay_t<decltype(shape)>;
          if constexpr (std::is_same_v<T, Rect> || std::is_same_v<T, Ellipse>) {
            std::vector<Vec2> outline;
            if constexpr (std::is_same_v<T, Rect>)
              outline = transformed(tf, detail::corners(shape.center, shape.w, shape.h));
            else
              outline = transformed(tf, ellipse_outline(shape));
            if (st.fill) fill_polygon(surface, outline, st.fill_color);
            if (st.stroke) stroke_path(surface, outline, true, st.line_width, st.stroke_color);
          } else if constexpr (std::is_same_v<T, Line>) {
            if (st.stroke)
              stroke_segment(surface, transform_point(tf, shape.a), transform_point(tf, shape.b), st.line_width,
                             st.stroke_color);
          } else if constexpr (std::is_same_v<T, Polygon>) {
            const auto pts = transformed(tf, shape.points);
            if (st.fill && shape.closed) fill_polygon(surface, pts, st.fill_color);
            if (st.stroke) stroke_path(surface, pts, shape.closed, st.line_width, st.stroke_color);
          } else {
            if (st.fill) draw_text(surface, shape, tf, st.fill_color);
            if (st.stroke && !st.fill) draw_text(surface, shape, tf, st.stroke_color);
          }
        },
        d.shape);
  }
}

}  // namespace xkg
