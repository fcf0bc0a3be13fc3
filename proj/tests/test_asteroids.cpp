#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/generators.hpp"
#include "support/golden.hpp"
#include "xkg/xkg.hpp"

namespace xkg::asteroids {
namespace {

// A state with no asteroids, zero velocities and no timers running.
AsteroidsState quiet_state() {
  AsteroidsState s({}, 1);
  s.mutable_asteroids().clear();
  s.mutable_asteroids().push_back({{40, 40}, {0, 0}, 12, 1});  // keeps the wave from respawning
  s.mutable_ship() = Ship{{240, 160}, {0, 0}, 0.0};
  s.set_invulnerable(0);
  return s;
}

TEST(AsteroidsNew, InitialState) {
  const AsteroidsState s({}, 3);
  EXPECT_EQ(s.asteroids().size(), 4u);
  for (const Asteroid& a : s.asteroids()) {
    EXPECT_EQ(a.tier, 3);
    EXPECT_EQ(a.radius, 36.0);
    EXPECT_GE(std::sqrt(s.wrapped_distance2(a.pos, s.ship().pos)), 100.0);
  }
  EXPECT_EQ(s.lives(), 3);
  EXPECT_EQ(s.score(), 0.0);
  EXPECT_TRUE(s.missiles().empty());
}

TEST(AsteroidsStep, NoneWithZeroVelocitiesOnlyAdvancesTick) {
  AsteroidsState s = quiet_state();
  AsteroidsState before = s;
  s.step(kNone);
  EXPECT_EQ(s.tick(), before.tick() + 1);
  EXPECT_EQ(s.ship().pos, before.ship().pos);
  EXPECT_EQ(s.ship().vel, before.ship().vel);
  EXPECT_EQ(s.ship().heading, before.ship().heading);
  EXPECT_EQ(s.asteroids()[0].pos, before.asteroids()[0].pos);
  EXPECT_EQ(s.score(), before.score());
  EXPECT_EQ(s.lives(), before.lives());
}

TEST(AsteroidsStep, WrapsAtLeftEdge) {
  AsteroidsState s = quiet_state();
  s.mutable_ship() = Ship{{0, 100}, {-1, 0}, 0.0};
  s.step(kNone);
  EXPECT_EQ(s.ship().pos.x, 479.0);
  EXPECT_EQ(s.ship().pos.y, 100.0);
}

TEST(AsteroidsStep, ThrustAndRotation) {
  AsteroidsState s = quiet_state();
  s.step(kThrust);
  EXPECT_NEAR(s.ship().vel.x, 0.1 * 0.99, 1e-15);
  EXPECT_NEAR(s.ship().pos.x, 240.1, 1e-12);
  s.step(kRotateRight);
  EXPECT_NEAR(s.ship().heading, 0.1, 1e-15);
  s.step(kRotateLeft);
  s.step(kRotateLeft);
  EXPECT_NEAR(s.ship().heading, -0.1, 1e-15);
}

TEST(AsteroidsStep, FrictionDecaysVelocityGeometrically) {
  AsteroidsState s = quiet_state();
  s.mutable_ship().vel = {2.0, -1.0};
  for (int k = 1; k <= 50; ++k) {
    s.step(k % 7 == 0 ? kFire : kNone);
    EXPECT_NEAR(s.ship().vel.x, 2.0 * std::pow(0.99, k), 1e-12);
    EXPECT_NEAR(s.ship().vel.y, -1.0 * std::pow(0.99, k), 1e-12);
  }
}

TEST(AsteroidsStep, FireCooldown) {
  AsteroidsState s = quiet_state();
  int fired = 0;
  for (int t = 0; t < 30; ++t) {
    const auto before = s.missiles().size();
    s.step(kFire);
    fired += s.missiles().size() > before;
  }
  EXPECT_EQ(fired, 3);  // ticks 0, 10, 20
}

TEST(AsteroidsStep, MissileSplitsTierThreeAsteroid) {
  AsteroidsState s = quiet_state();
  s.mutable_asteroids() = {{{390, 160}, {0, 0}, 36, 3}};
  s.step(kFire);
  bool split = false;
  for (int t = 0; t < s.config().missile_ttl && !split; ++t) {
    if (s.asteroids().size() == 2) split = true;
    else s.step(kNone);
  }
  ASSERT_TRUE(split || s.asteroids().size() == 2);
  EXPECT_EQ(s.score(), 10.0);
  for (const Asteroid& a : s.asteroids()) {
    EXPECT_EQ(a.tier, 2);
    EXPECT_EQ(a.radius, 24.0);
  }
  EXPECT_TRUE(s.missiles().empty());
}

TEST(AsteroidsStep, SplitCountsAndScores) {
  for (int tier = 1; tier <= 3; ++tier) {
    AsteroidsState s = quiet_state();
    s.mutable_asteroids() = {{{100, 100}, {0, 0}, 12.0 * tier, tier}, {{400, 300}, {0, 0}, 12, 1}};
    s.mutable_missiles() = {{{100, 99}, {0, 0.5}, 10}};
    s.step(kNone);
    EXPECT_EQ(s.asteroids().size(), tier == 1 ? 1u : 3u);
    EXPECT_EQ(s.score(), 10.0 * (4 - tier));
  }
}

TEST(AsteroidsStep, ShipCollisionCostsLifeAndRespawns) {
  AsteroidsState s = quiet_state();
  s.mutable_asteroids() = {{{245, 160}, {0, 0}, 12, 1}};
  s.step(kNone);
  EXPECT_EQ(s.lives(), 2);
  EXPECT_EQ(s.ship().pos, (Vec2{240, 160}));
  EXPECT_EQ(s.ship().vel, (Vec2{0, 0}));
  EXPECT_EQ(s.invulnerable(), s.config().respawn_invulnerability);
  // Invulnerable while overlapping the asteroid.
  for (int i = 0; i < 10; ++i) s.step(kNone);
  EXPECT_EQ(s.lives(), 2);
}

TEST(AsteroidsStep, GameOverAtZeroLives) {
  AsteroidsState s = quiet_state();
  s.mutable_asteroids() = {{{240, 160}, {0, 0}, 12, 1}};
  while (!s.is_terminal() && s.tick() < 1000) s.step(kNone);
  EXPECT_TRUE(s.is_terminal());
  EXPECT_EQ(s.lives(), 0);
}

TEST(AsteroidsStep, ClearedFieldSpawnsNewWave) {
  AsteroidsState s = quiet_state();
  s.mutable_asteroids() = {{{100, 100}, {0, 0}, 12, 1}};
  s.mutable_missiles() = {{{100, 99}, {0, 0.5}, 10}};
  s.step(kNone);
  EXPECT_EQ(s.asteroids().size(), 4u);
}

TEST(AsteroidsProperties, PositionsWrapAndTiersMapToRadius) {
  SplitMix64 rng(8);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    AsteroidsState s({}, seed);
    for (int t = 0; t < 600 && !s.is_terminal(); ++t) {
      s.step(rng.uniform(5));
      auto inside = [&](Vec2 p) { return p.x >= 0 && p.x < 480 && p.y >= 0 && p.y < 320; };
      ASSERT_TRUE(inside(s.ship().pos));
      for (const Asteroid& a : s.asteroids()) {
        ASSERT_TRUE(inside(a.pos));
        ASSERT_EQ(a.radius, 12.0 * a.tier);
        ASSERT_TRUE(a.tier >= 1 && a.tier <= 3);
      }
      for (const Missile& m : s.missiles()) ASSERT_TRUE(inside(m.pos));
    }
  }
}

TEST(AsteroidsRender, FreshStateOpCount) {
  const AsteroidsState s({}, 7);
  const DrawList list = s.render();
  EXPECT_EQ(list.ops.size(), s.asteroids().size() + 2);
  EXPECT_TRUE(std::holds_alternative<Polygon>(list.ops[list.ops.size() - 2].shape));
  EXPECT_TRUE(std::holds_alternative<Text>(list.ops.back().shape));
  EXPECT_NO_THROW(validate(list));
}

TEST(AsteroidsRender, EqualStatesSerializeIdentically) {
  EXPECT_EQ(serialize_drawlist(testing::random_asteroids(3, 200).render()),
            serialize_drawlist(testing::random_asteroids(3, 200).render()));
}

TEST(AsteroidsRender, HeadingPlusPiReflectsShipThroughCenter) {
  SplitMix64 rng(3);
  for (int i = 0; i < 100; ++i) {
    AsteroidsState s = quiet_state();
    s.mutable_ship() = Ship{{rng.uniform(0.0, 480.0), rng.uniform(0.0, 320.0)}, {0, 0}, rng.uniform(-7.0, 7.0)};
    AsteroidsState turned = s;
    turned.mutable_ship().heading += std::numbers::pi;
    const Vec2 c = s.ship().pos;
    for (const Vec2& p : kShipOutline) {
      const Vec2 a = transform_point(s.ship_transform(), p);
      const Vec2 b = transform_point(turned.ship_transform(), p);
      EXPECT_NEAR(b.x, 2 * c.x - a.x, 1e-9);
      EXPECT_NEAR(b.y, 2 * c.y - a.y, 1e-9);
    }
  }
}

TEST(AsteroidsRender, MatchesGoldenFiles) {
  EXPECT_EQ(serialize_drawlist(AsteroidsState({}, 7).render()), testing::read_golden("asteroids_seed7.json"));
  AsteroidsState s({}, 7);
  for (int a : kGoldenAsteroidsScript) s.step(a);
  EXPECT_EQ(serialize_drawlist(s.render()), testing::read_golden("asteroids_seed7_script.json"));
}

}  // namespace
}  // namespace xkg::asteroids
