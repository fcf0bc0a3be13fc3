#pragma once

// Draw-list wire format, schema version 1. See docs/wire-formats.md.
//
// Encoding is canonical: fixed key order, no whitespace, shortest round-trip
// reals, -0 written as 0. Equal draw lists always produce identical bytes.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "xkg/graphics.hpp"
#include "xkg/json_writer.hpp"

namespace xkg {

inline constexpr int kWireVersion = 1;

/// Malformed draw-list input. `path()` names the offending location, e.g.
/// `$.ops[2].style.fillColor[1]`.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

namespace detail {

inline void put_vec(std::string& out, Vec2 v) {
  out.push_back('[');
  json::append_number(out, v.x);
  out.push_back(',');
  json::append_number(out, v.y);
  out.push_back(']');
}

inline void put_color(std::string& out, Color c) {
  out.push_back('[');
  json::append_integer(out, c.r);
  out.push_back(',');
  json::append_integer(out, c.g);
  out.push_back(',');
  json::append_integer(out, c.b);
  out.push_back(',');
  json::append_integer(out, c.a);
  out.push_back(']');
}

inline void put_style(std::string& out, const Style& s) {
  out.push_back('{');
  json::append_key(out, "fill", true);
  json::append_bool(out, s.fill);
  json::append_key(out, "fillColor");
  put_color(out, s.fill_color);
  json::append_key(out, "stroke");
  json::append_bool(out, s.stroke);
  json::append_key(out, "strokeColor");
  put_color(out, s.stroke_color);
  json::append_key(out, "lineWidth");
  json::append_number(out, s.line_width);
  out.push_back('}');
}

inline void put_transform(std::string& out, const Transform& t) {
  out.push_back('{');
  json::append_key(out, "translate", true);
  put_vec(out, t.translate);
  json::append_key(out, "rotate");
  json::append_number(out, t.rotate);
  json::append_key(out, "scale");
  put_vec(out, t.scale);
  out.push_back('}');
}

inline void put_sized(std::string& out, std::string_view kind, Vec2 center, double w, double h) {
  json::append_key(out, "kind", true);
  json::append_string(out, kind);
  json::append_key(out, "center");
  put_vec(out, center);
  json::append_key(out, "w");
  json::append_number(out, w);
  json::append_key(out, "h");
  json::append_number(out, h);
}

inline void put_drawable(std::string& out, const Drawable& d) {
  out.push_back('{');
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rect>) {
          put_sized(out, "rect", s.center, s.w, s.h);
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          put_sized(out, "ellipse", s.center, s.w, s.h);
        } else if constexpr (std::is_same_v<T, Line>) {
          json::append_key(out, "kind", true);
          json::append_string(out, "line");
          json::append_key(out, "a");
          put_vec(out, s.a);
          json::append_key(out, "b");
          put_vec(out, s.b);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          json::append_key(out, "kind", true);
          json::append_string(out, "polygon");
          json::append_key(out, "points");
          out.push_back('[');
          for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i) out.push_back(',');
            put_vec(out, s.points[i]);
          }
          out.push_back(']');
          json::append_key(out, "closed");
          json::append_bool(out, s.closed);
        } else {
          json::append_key(out, "kind", true);
          json::append_string(out, "text");
          json::append_key(out, "text");
          json::append_string(out, s.s);
          json::append_key(out, "center");
          put_vec(out, s.center);
          json::append_key(out, "fontSize");
          json::append_number(out, s.font_size);
        }
      },
      d.shape);
  json::append_key(out, "style");
  put_style(out, d.style);
  json::append_key(out, "transform");
  put_transform(out, d.transform);
  out.push_back('}');
}

}  // namespace detail

[[nodiscard]] inline std::string serialize_drawlist(const DrawList& list) {
  std::string out;
  out.reserve(64 + list.ops.size() * 200);
  out.push_back('{');
  json::append_key(out, "v", true);
  json::append_integer(out, kWireVersion);
  json::append_key(out, "width");
  json::append_number(out, list.width);
  json::append_key(out, "height");
  json::append_number(out, list.height);
  json::append_key(out, "ops");
  out.push_back('[');
  for (std::size_t i = 0; i < list.ops.size(); ++i) {
    if (i) out.push_back(',');
    detail::put_drawable(out, list.ops[i]);
  }
  out += "]}";
  return out;
}

namespace detail {

using nlohmann::json;

class Reader {
 public:
  static const json& field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) throw DecodeError(path, "expected object");
    auto it = obj.find(key);
    if (it == obj.end()) throw DecodeError(path + "." + key, "missing field");
    return *it;
  }

  static void exact_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) throw DecodeError(path, "expected object");
    for (const auto& [k, _] : obj.items()) {
      if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end())
        throw DecodeError(path + "." + k, "unknown field");
    }
  }

  static double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw DecodeError(path, "expected number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw DecodeError(path, "number must be finite");
    return v;
  }

  static double positive(const json& j, const std::string& path) {
    const double v = number(j, path);
    if (!(v > 0.0)) throw DecodeError(path, "must be > 0");
    return v;
  }

  static bool boolean(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw DecodeError(path, "expected boolean");
    return j.get<bool>();
  }

  static Vec2 vec(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw DecodeError(path, "expected [x, y]");
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
  }

  static Color color(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 4) throw DecodeError(path, "expected [r, g, b, a]");
    std::uint8_t ch[4];
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      if (!j[i].is_number_integer()) throw DecodeError(p, "expected integer in [0, 255]");
      const auto v = j[i].get<std::int64_t>();
      if (v < 0 || v > 255) throw DecodeError(p, "expected integer in [0, 255]");
      ch[i] = static_cast<std::uint8_t>(v);
    }
    return {ch[0], ch[1], ch[2], ch[3]};
  }

  static Style style(const json& j, const std::string& path) {
    exact_keys(j, path, {"fill", "fillColor", "stroke", "strokeColor", "lineWidth"});
    Style s;
    s.fill = boolean(field(j, path, "fill"), path + ".fill");
    s.fill_color = color(field(j, path, "fillColor"), path + ".fillColor");
    s.stroke = boolean(field(j, path, "stroke"), path + ".stroke");
    s.stroke_color = color(field(j, path, "strokeColor"), path + ".strokeColor");
    s.line_width = number(field(j, path, "lineWidth"), path + ".lineWidth");
    if (s.line_width < 0.0) throw DecodeError(path + ".lineWidth", "must be >= 0");
    return s;
  }

  static Transform transform(const json& j, const std::string& path) {
    exact_keys(j, path, {"translate", "rotate", "scale"});
    Transform t;
    t.translate = vec(field(j, path, "translate"), path + ".translate");
    t.rotate = number(field(j, path, "rotate"), path + ".rotate");
    t.scale = vec(field(j, path, "scale"), path + ".scale");
    return t;
  }

  static Drawable drawable(const json& j, const std::string& path) {
    const json& kind_j = field(j, path, "kind");
    if (!kind_j.is_string()) throw DecodeError(path + ".kind", "expected string");
    const auto kind = kind_j.get<std::string>();
    Drawable d;
    auto f = [&](const char* key) -> const json& { return field(j, path, key); };
    auto p = [&](const char* key) { return path + "." + key; };
    if (kind == "rect" || kind == "ellipse") {
      exact_keys(j, path, {"kind", "center", "w", "h", "style", "transform"});
      const Vec2 c = vec(f("center"), p("center"));
      const double w = positive(f("w"), p("w"));
      const double h = positive(f("h"), p("h"));
      if (kind == "rect")
        d.shape = Rect{c, w, h};
      else
        d.shape = Ellipse{c, w, h};
    } else if (kind == "line") {
      exact_keys(j, path, {"kind", "a", "b", "style", "transform"});
      d.shape = Line{vec(f("a"), p("a")), vec(f("b"), p("b"))};
    } else if (kind == "polygon") {
      exact_keys(j, path, {"kind", "points", "closed", "style", "transform"});
      const json& pts = f("points");
      if (!pts.is_array()) throw DecodeError(p("points"), "expected array");
      if (pts.size() < 2) throw DecodeError(p("points"), "polygon needs at least 2 points");
      Polygon poly;
      poly.points.reserve(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i)
        poly.points.push_back(vec(pts[i], p("points") + "[" + std::to_string(i) + "]"));
      poly.closed = boolean(f("closed"), p("closed"));
      d.shape = std::move(poly);
    } else if (kind == "text") {
      exact_keys(j, path, {"kind", "text", "center", "fontSize", "style", "transform"});
      const json& s = f("text");
      if (!s.is_string()) throw DecodeError(p("text"), "expected string");
      d.shape = Text{s.get<std::string>(), vec(f("center"), p("center")), positive(f("fontSize"), p("fontSize"))};
    } else {
      throw DecodeError(path + ".kind", "unknown kind '" + kind + "'");
    }
    d.style = style(f("style"), p("style"));
    d.transform = transform(f("transform"), p("transform"));
    return d;
  }
};

}  // namespace detail

/// Parses draw-list bytes; throws DecodeError naming the offending path.
[[nodiscard]] inline DrawList deserialize_drawlist(std::string_view bytes) {
  using detail::Reader;
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw DecodeError("$", std::string("malformed JSON at byte ") + std::to_string(e.byte));
  }
  Reader::exact_keys(root, "$", {"v", "width", "height", "ops"});
  const auto& v = Reader::field(root, "$", "v");
  if (!v.is_number_integer() || v.get<std::int64_t>() != kWireVersion)
    throw DecodeError("$.v", "unsupported schema version");
  DrawList list;
  list.width = Reader::positive(Reader::field(root, "$", "width"), "$.width");
  list.height = Reader::positive(Reader::field(root, "$", "height"), "$.height");
  const auto& ops = Reader::field(root, "$", "ops");
  if (!ops.is_array()) throw DecodeError("$.ops", "expected array");
  list.ops.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i)
    list.ops.push_back(Reader::drawable(ops[i], "$.ops[" + std::to_string(i) + "]"));
  return list;
}

}  // namespace xkg
