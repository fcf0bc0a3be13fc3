#pragma once

// Asteroids forward model on a toroidal world with Euler integration.

#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>
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

namespace xkg::asteroids {

/// Every physics and rules constant lives here. Units are pixels and ticks.
struct AsteroidsConfig {
  double width = 480.0;
  double height = 320.0;
  double thrust = 0.1;       // px/tick^2 along the heading
  double turn_rate = 0.1;    // rad/tick
  double friction = 0.99;    // ship velocity factor per tick
  double missile_speed = 5.0;
  int missile_ttl = 60;
  int fire_cooldown = 10;
  int initial_asteroids = 4;
  int lives = 3;
  double ship_radius = 8.0;
  double tier_radius = 12.0;  // radius = tier_radius * tier
  int respawn_invulnerability = 60;
  double min_spawn_distance = 100.0;
  double asteroid_speed_min = 0.5;
  double asteroid_speed_max = 1.5;
  double split_angle_min = 0.3;
  double split_angle_max = 0.8;
  double split_speedup = 1.25;

  void validate() const {
    if (!(width > 0 && height > 0)) throw std::invalid_argument("world size must be > 0");
    if (lives < 1) throw std::invalid_argument("lives must be >= 1");
    if (missile_ttl < 1 || fire_cooldown < 0) throw std::invalid_argument("bad missile timing");
  }
};

struct Ship {
  Vec2 pos;
  Vec2 vel;
  double heading = -std::numbers::pi / 2;  // pointing up the screen
};

struct Asteroid {
  Vec2 pos;
  Vec2 vel;
  double radius = 0.0;
  int tier = 3;
};

struct Missile {
  Vec2 pos;
  Vec2 vel;
  int ttl = 0;
};

enum ActionId : int { kNone = 0, kThrust = 1, kRotateLeft = 2, kRotateRight = 3, kFire = 4 };

inline constexpr std::array<Action, 5> kActions{{
    {kNone, "none"},
    {kThrust, "thrust"},
    {kRotateLeft, "rotate-left"},
    {kRotateRight, "rotate-right"},
    {kFire, "fire"},
}};

/// Ship outline in local coordinates; nose along +x.
inline const std::vector<Vec2> kShipOutline{{10.0, 0.0}, {-6.0, -6.0}, {-6.0, 6.0}};

class AsteroidsState {
 public:
  static constexpr std::string_view kName = "asteroids";

  AsteroidsState() : AsteroidsState(AsteroidsConfig{}, 0) {}

  AsteroidsState(const AsteroidsConfig& config, std::uint64_t seed) : config_(config), rng_(seed) {
    config_.validate();
    lives_ = config_.lives;
    ship_.pos = center();
    spawn_wave();
  }

  /// One tick: timers, action, Euler integration with wrap, ship friction,
  /// missile hits (split + score), then ship collisions.
  void step(int action) {
    assert(!game_over_ && "step() on a finished game");
    if (game_over_) return;

    if (cooldown_ > 0) --cooldown_;
    if (invulnerable_ > 0) --invulnerable_;

    const Vec2 dir{std::cos(ship_.heading), std::sin(ship_.heading)};
    switch (action) {
      case kThrust: ship_.vel = ship_.vel + dir * config_.thrust; break;
      // Decreasing the math-convention angle turns counterclockwise on screen.
      case kRotateLeft: ship_.heading -= config_.turn_rate; break;
      case kRotateRight: ship_.heading += config_.turn_rate; break;
      case kFire:
        if (cooldown_ == 0) {
          missiles_.push_back({wrap(ship_.pos + dir * config_.ship_radius), dir * config_.missile_speed,
                               config_.missile_ttl});
          cooldown_ = config_.fire_cooldown;
        }
        break;
      default: break;
    }

    ship_.pos = wrap(ship_.pos + ship_.vel);
    ship_.vel = ship_.vel * config_.friction;
    for (Asteroid& a : asteroids_) a.pos = wrap(a.pos + a.vel);
    for (Missile& m : missiles_) {
      m.pos = wrap(m.pos + m.vel);
      --m.ttl;
    }
    std::erase_if(missiles_, [](const Missile& m) { return m.ttl <= 0; });

    resolve_missile_hits();
    resolve_ship_hits();
    if (asteroids_.empty() && !game_over_) spawn_wave();
    ++tick_;
  }

  void next(Action a) { step(a.id); }

  [[nodiscard]] double score() const { return score_; }
  [[nodiscard]] bool is_terminal() const { return game_over_; }
  [[nodiscard]] static constexpr int n_actions() { return static_cast<int>(kActions.size()); }
  [[nodiscard]] static std::span<const Action> actions() { return kActions; }
  [[nodiscard]] std::int64_t tick() const { return tick_; }
  [[nodiscard]] int lives() const { return lives_; }
  [[nodiscard]] int cooldown() const { return cooldown_; }
  [[nodiscard]] int invulnerable() const { return invulnerable_; }
  [[nodiscard]] const AsteroidsConfig& config() const { return config_; }

  [[nodiscard]] const Ship& ship() const { return ship_; }
  [[nodiscard]] const std::vector<Asteroid>& asteroids() const { return asteroids_; }
  [[nodiscard]] const std::vector<Missile>& missiles() const { return missiles_; }

  // Scenario setup for tests and scripted demos.
  Ship& mutable_ship() { return ship_; }
  std::vector<Asteroid>& mutable_asteroids() { return asteroids_; }
  std::vector<Missile>& mutable_missiles() { return missiles_; }
  void set_invulnerable(int ticks) { invulnerable_ = ticks; }

  [[nodiscard]] double radius_for_tier(int tier) const { return config_.tier_radius * tier; }

  [[nodiscard]] Vec2 wrap(Vec2 p) const { return {wrap1(p.x, config_.width), wrap1(p.y, config_.height)}; }

  /// Squared distance between two points using the nearest toroidal image.
  [[nodiscard]] double wrapped_distance2(Vec2 a, Vec2 b) const {
    double dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
    dx = std::min(dx, config_.width - dx);
    dy = std::min(dy, config_.height - dy);
    return dx * dx + dy * dy;
  }

  [[nodiscard]] std::uint64_t hash() const {
    Hasher h;
    h.add(config_.width).add(config_.height);
    h.add(ship_.pos.x).add(ship_.pos.y).add(ship_.vel.x).add(ship_.vel.y).add(ship_.heading);
    h.add(static_cast<std::uint64_t>(asteroids_.size()));
    for (const Asteroid& a : asteroids_) h.add(a.pos.x).add(a.pos.y).add(a.vel.x).add(a.vel.y).add(a.radius).add(a.tier);
    h.add(static_cast<std::uint64_t>(missiles_.size()));
    for (const Missile& m : missiles_) h.add(m.pos.x).add(m.pos.y).add(m.vel.x).add(m.vel.y).add(m.ttl);
    h.add(score_).add(lives_).add(cooldown_).add(invulnerable_).add(tick_).add(game_over_).add(rng_.state());
    return h.value();
  }

  static std::optional<int> action_for_key(Key k) {
    switch (k) {
      case Key::up: return kThrust;
      case Key::left: return kRotateLeft;
      case Key::right: return kRotateRight;
      case Key::space: return kFire;
      default: return std::nullopt;
    }
  }

  /// Asteroids, then missiles, then the ship, then the status text.
  [[nodiscard]] DrawList render() const {
    DrawList list;
    list.width = config_.width;
    list.height = config_.height;
    list.ops.reserve(asteroids_.size() + missiles_.size() + 2);
    for (const Asteroid& a : asteroids_)
      list.add(Ellipse{a.pos, 2 * a.radius, 2 * a.radius}, Style::outlined(colors::gray, 1.5));
    for (const Missile& m : missiles_) {
      const double speed = std::hypot(m.vel.x, m.vel.y);
      const Vec2 tail = speed > 0 ? m.pos - m.vel * (4.0 / speed) : m.pos;
      list.add(Line{tail, m.pos}, Style::outlined(colors::white, 1.0));
    }
    list.add(ship_polygon(), Style::outlined(invulnerable_ > 0 ? kShieldColor : colors::white, 1.5),
             ship_transform());
    std::string label = "Score: " + std::to_string(static_cast<long long>(score_)) + " Lives: " + std::to_string(lives_);
    if (game_over_) label += " GAME OVER";
    list.add(Text{std::move(label), {config_.width / 2, 12.0}, 12.0}, Style::filled(colors::white));
    return list;
  }

  [[nodiscard]] static Polygon ship_polygon() { return Polygon{kShipOutline, true}; }
  [[nodiscard]] Transform ship_transform() const { return Transform{ship_.pos, ship_.heading, {1.0, 1.0}}; }

 private:
  static constexpr Color kShieldColor{240, 240, 0, 255};

  static double wrap1(double v, double size) {
    if (v >= 0.0 && v < size) return v;
    v = std::fmod(v, size);
    if (v < 0.0) v += size;
    if (v >= size) v -= size;  // -tiny + size can round up to size
    return v;
  }

  [[nodiscard]] Vec2 center() const { return {config_.width / 2, config_.height / 2}; }

  void spawn_wave() {
    const double min_d2 = config_.min_spawn_distance * config_.min_spawn_distance;
    for (int i = 0; i < config_.initial_asteroids; ++i) {
      Vec2 p;
      // Bounded rejection sampling; fall back to the last draw.
      for (int attempt = 0; attempt < 64; ++attempt) {
        p = {rng_.uniform(0.0, config_.width), rng_.uniform(0.0, config_.height)};
        if (wrapped_distance2(p, ship_.pos) >= min_d2) break;
      }
      const double angle = rng_.uniform(0.0, 2 * std::numbers::pi);
      const double speed = rng_.uniform(config_.asteroid_speed_min, config_.asteroid_speed_max);
      asteroids_.push_back({p, {speed * std::cos(angle), speed * std::sin(angle)}, radius_for_tier(3), 3});
    }
  }

  void split(std::size_t index) {
    const Asteroid parent = asteroids_[index];
    asteroids_.erase(asteroids_.begin() + static_cast<std::ptrdiff_t>(index));
    score_ += 10.0 * (4 - parent.tier);
    if (parent.tier <= 1) return;

    Vec2 base = parent.vel;
    if (std::hypot(base.x, base.y) < config_.asteroid_speed_min) {
      const double angle = rng_.uniform(0.0, 2 * std::numbers::pi);
      base = {config_.asteroid_speed_min * std::cos(angle), config_.asteroid_speed_min * std::sin(angle)};
    }
    for (const double sign : {1.0, -1.0}) {
      const double turn = sign * rng_.uniform(config_.split_angle_min, config_.split_angle_max);
      const double c = std::cos(turn), s = std::sin(turn);
      const Vec2 v{(base.x * c - base.y * s) * config_.split_speedup, (base.x * s + base.y * c) * config_.split_speedup};
      asteroids_.push_back({parent.pos, v, radius_for_tier(parent.tier - 1), parent.tier - 1});
    }
  }

  void resolve_missile_hits() {
    for (std::size_t m = 0; m < missiles_.size();) {
      bool hit = false;
      for (std::size_t a = 0; a < asteroids_.size(); ++a) {
        const double r = asteroids_[a].radius;
        if (wrapped_distance2(missiles_[m].pos, asteroids_[a].pos) <= r * r) {
          split(a);
          hit = true;
          break;
        }
      }
      if (hit)
        missiles_.erase(missiles_.begin() + static_cast<std::ptrdiff_t>(m));
      else
        ++m;
    }
  }

  void resolve_ship_hits() {
    if (invulnerable_ > 0) return;
    for (const Asteroid& a : asteroids_) {
      const double r = a.radius + config_.ship_radius;
      if (wrapped_distance2(ship_.pos, a.pos) <= r * r) {
        if (--lives_ <= 0) {
          game_over_ = true;
        } else {
          ship_ = Ship{center(), {0.0, 0.0}, -std::numbers::pi / 2};
          invulnerable_ = config_.respawn_invulnerability;
        }
        return;
      }
    }
  }

  AsteroidsConfig config_;
  Ship ship_;
  std::vector<Asteroid> asteroids_;
  std::vector<Missile> missiles_;
  double score_ = 0.0;
  int lives_ = 3;
  int cooldown_ = 0;
  int invulnerable_ = 0;
  std::int64_t tick_ = 0;
  bool game_over_ = false;
  SplitMix64 rng_;
};

static_assert(PlayableGame<AsteroidsState>);

}  // namespace xkg::asteroids
