#pragma once

// Platform-independent retained-mode drawing model.
//
// Coordinates are screen pixels: origin top-left, x right, y down. Every game
// renders by producing a DrawList; backends (software raster, browser canvas)
// consume it and never see game code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace xkg {

/// Nominal 8-bit sRGB color. Backends pass the bytes through untouched.
struct Color {
  std::uint8_t r = 0, g = 0, b = 0, a = 255;

  friend bool operator==(const Color&, const Color&) = default;
};

namespace colors {
inline constexpr Color black{0, 0, 0, 255};
inline constexpr Color white{255, 255, 255, 255};
inline constexpr Color red{255, 0, 0, 255};
inline constexpr Color gray{128, 128, 128, 255};
}  // namespace colors

struct Vec2 {
  double x = 0.0, y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double k) { return {a.x * k, a.y * k}; }
};

/// Affine transform applied as: scale, then rotate, then translate.
///
///   p' = R(rotate) * (scale .* p) + translate
///
/// `rotate` is in radians, counterclockwise in the math convention, which
/// appears clockwise on screen because y points down.
struct Transform {
  Vec2 translate{0.0, 0.0};
  double rotate = 0.0;
  Vec2 scale{1.0, 1.0};

  [[nodiscard]] bool is_identity() const {
    return translate == Vec2{0.0, 0.0} && rotate == 0.0 && scale == Vec2{1.0, 1.0};
  }

  friend bool operator==(const Transform&, const Transform&) = default;
};

[[nodiscard]] inline Vec2 transform_point(const Transform& t, Vec2 p) {
  if (t.is_identity()) return p;
  const double sx = p.x * t.scale.x;
  const double sy = p.y * t.scale.y;
  const double c = std::cos(t.rotate);
  const double s = std::sin(t.rotate);
  return {sx * c - sy * s + t.translate.x, sx * s + sy * c + t.translate.y};
}

struct Style {
  bool fill = true;
  Color fill_color = colors::white;
  bool stroke = false;
  Color stroke_color = colors::white;
  double line_width = 1.0;

  friend bool operator==(const Style&, const Style&) = default;

  static Style filled(Color c) { return {true, c, false, c, 1.0}; }
  static Style outlined(Color c, double width = 1.0) { return {false, c, true, c, width}; }
};

struct Rect {
  Vec2 center;
  double w = 1.0, h = 1.0;
  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Ellipse {
  Vec2 center;
  double w = 1.0, h = 1.0;
  friend bool operator==(const Ellipse&, const Ellipse&) = default;
};

struct Line {
  Vec2 a, b;
  friend bool operator==(const Line&, const Line&) = default;
};

struct Polygon {
  std::vector<Vec2> points;
  bool closed = true;
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct Text {
  std::string s;
  Vec2 center;
  double font_size = 12.0;
  friend bool operator==(const Text&, const Text&) = default;
};

using Shape = std::variant<Rect, Ellipse, Line, Polygon, Text>;

struct Drawable {
  Shape shape;
  Style style;
  Transform transform;

  friend bool operator==(const Drawable&, const Drawable&) = default;
};

/// Ordered draw operations; later entries paint over earlier ones.
struct DrawList {
  double width = 640.0;
  double height = 480.0;
  std::vector<Drawable> ops;

  friend bool operator==(const DrawList&, const DrawList&) = default;

  DrawList& add(Shape shape, Style style, Transform transform = {}) {
    ops.push_back(Drawable{std::move(shape), style, transform});
    return *this;
  }
};

/// Axis-aligned box given by its min and max corners.
struct Box {
  Vec2 min, max;

  [[nodiscard]] double width() const { return max.x - min.x; }
  [[nodiscard]] double height() const { return max.y - min.y; }
  friend bool operator==(const Box&, const Box&) = default;
};

// Text has no font metrics in the core: each UTF-8 code point is taken to be
// kTextAdvance * fontSize wide and the line fontSize tall.
inline constexpr double kTextAdvance = 0.6;

[[nodiscard]] inline std::size_t utf8_length(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

[[nodiscard]] inline double text_width(const Text& t) {
  return kTextAdvance * t.font_size * static_cast<double>(utf8_length(t.s));
}

enum class BoxSpace { transformed, local };

namespace detail {

inline Box box_of_points(const std::vector<Vec2>& pts) {
  Box b{pts.front(), pts.front()};
  for (const Vec2& p : pts) {
    b.min.x = std::min(b.min.x, p.x);
    b.min.y = std::min(b.min.y, p.y);
    b.max.x = std::max(b.max.x, p.x);
    b.max.y = std::max(b.max.y, p.y);
  }
  return b;
}

inline std::vector<Vec2> corners(Vec2 c, double w, double h) {
  const double hw = w / 2.0, hh = h / 2.0;
  return {{c.x - hw, c.y - hh}, {c.x + hw, c.y - hh}, {c.x + hw, c.y + hh}, {c.x - hw, c.y + hh}};
}

}  // namespace detail

/// Smallest axis-aligned box containing the drawable's geometry (stroke width
/// is not included). Ellipses use the exact extent of the transformed ellipse;
/// text uses the approximate metrics above.
[[nodiscard]] inline Box bounding_box(const Drawable& d, BoxSpace space = BoxSpace::transformed) {
  const Transform t = space == BoxSpace::transformed ? d.transform : Transform{};
  auto apply = [&](std::vector<Vec2> pts) {
    for (Vec2& p : pts) p = transform_point(t, p);
    return detail::box_of_points(pts);
  };
  return std::visit(
      [&](const auto& s) -> Box {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rect>) {
          return apply(detail::corners(s.center, s.w, s.h));
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          // Linear part M = R * S applied to the semi-axes.
          const double a = s.w / 2.0 * t.scale.x, b = s.h / 2.0 * t.scale.y;
          const double c = std::cos(t.rotate), sn = std::sin(t.rotate);
          const double ex = std::hypot(a * c, b * sn);
          const double ey = std::hypot(a * sn, b * c);
          const Vec2 m = transform_point(t, s.center);
          return {{m.x - ex, m.y - ey}, {m.x + ex, m.y + ey}};
        } else if constexpr (std::is_same_v<T, Line>) {
          return apply({s.a, s.b});
        } else if constexpr (std::is_same_v<T, Polygon>) {
          return apply(s.points);
        } else {
          return apply(detail::corners(s.center, text_width(s), s.font_size));
        }
      },
      d.shape);
}

/// Throws std::invalid_argument if the drawable breaks a data-model invariant.
inline void validate(const Drawable& d) {
  auto finite = [](Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); };
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(std::isfinite(d.style.line_width) && d.style.line_width >= 0.0, "lineWidth must be finite and >= 0");
  require(finite(d.transform.translate) && finite(d.transform.scale) && std::isfinite(d.transform.rotate),
          "transform must be finite");
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rect> || std::is_same_v<T, Ellipse>) {
          require(finite(s.center) && std::isfinite(s.w) && std::isfinite(s.h), "geometry must be finite");
          require(s.w > 0.0 && s.h > 0.0, "w and h must be > 0");
        } else if constexpr (std::is_same_v<T, Line>) {
          require(finite(s.a) && finite(s.b), "geometry must be finite");
        } else if constexpr (std::is_same_v<T, Polygon>) {
          require(s.points.size() >= 2, "polygon needs at least 2 points");
          require(std::all_of(s.points.begin(), s.points.end(), finite), "geometry must be finite");
        } else {
          require(finite(s.center) && std::isfinite(s.font_size), "geometry must be finite");
          require(s.font_size > 0.0, "fontSize must be > 0");
        }
      },
      d.shape);
}

inline void validate(const DrawList& list) {
  if (!(std::isfinite(list.width) && std::isfinite(list.height) && list.width > 0.0 && list.height > 0.0))
    throw std::invalid_argument("draw list width and height must be > 0");
  for (const Drawable& d : list.ops) validate(d);
}

}  // namespace xkg
