#include <gtest/gtest.h>

#include <numbers>

#include "xkg/raster.hpp"
#include "xkg/tetris.hpp"

namespace xkg {
namespace {

constexpr Color kBlue{0, 0, 255, 255};

int count(const Surface& s, Color c) {
  int n = 0;
  for (Color p : s.pixels()) n += p == c;
  return n;
}

TEST(Raster, EmptyListLeavesSurface) {
  Surface s(32, 16, colors::gray);
  const Surface before = s;
  raster_draw(s, DrawList{32, 16, {}});
  EXPECT_EQ(s, before);
}

TEST(Raster, FilledRectCoversItsPixels) {
  Surface s(40, 40);
  DrawList list{40, 40, {}};
  list.add(Rect{{20, 20}, 10, 6}, Style::filled(colors::red));
  raster_draw(s, list);
  EXPECT_EQ(count(s, colors::red), 60);
  EXPECT_EQ(s.at(15, 17), colors::red);
  EXPECT_EQ(s.at(24, 22), colors::red);
  EXPECT_EQ(s.at(14, 17), colors::black);
  EXPECT_EQ(s.at(25, 20), colors::black);
}

TEST(Raster, LaterOpsPaintOver) {
  Surface s(20, 20);
  DrawList list{20, 20, {}};
  list.add(Rect{{10, 10}, 10, 10}, Style::filled(colors::red));
  list.add(Rect{{10, 10}, 4, 4}, Style::filled(kBlue));
  raster_draw(s, list);
  EXPECT_EQ(count(s, kBlue), 16);
  EXPECT_EQ(count(s, colors::red), 84);
}

TEST(Raster, TransformIsApplied) {
  Surface s(40, 40);
  DrawList list{40, 40, {}};
  // 2x8 bar rotated a quarter turn about the origin, then moved to (20, 20).
  list.add(Rect{{0, 0}, 2, 8}, Style::filled(colors::red), Transform{{20, 20}, std::numbers::pi / 2, {1, 1}});
  raster_draw(s, list);
  EXPECT_EQ(count(s, colors::red), 16);
  EXPECT_EQ(s.at(16, 19), colors::red);
  EXPECT_EQ(s.at(19, 16), colors::black);
}

TEST(Raster, OffSurfaceShapesAreClipped) {
  Surface s(10, 10);
  DrawList list{10, 10, {}};
  list.add(Rect{{0, 0}, 4, 4}, Style::filled(colors::red));
  list.add(Line{{-50, -50}, {-20, -20}}, Style::outlined(colors::red, 3));
  raster_draw(s, list);
  EXPECT_EQ(count(s, colors::red), 4);
}

TEST(Raster, StrokedLineIsDrawn) {
  Surface s(20, 20);
  DrawList list{20, 20, {}};
  list.add(Line{{2, 10}, {18, 10}}, Style::outlined(colors::white, 2));
  raster_draw(s, list);
  EXPECT_EQ(s.at(10, 9), colors::white);
  EXPECT_EQ(s.at(10, 10), colors::white);
  EXPECT_EQ(s.at(10, 5), colors::black);
}

TEST(Raster, TextLeavesInk) {
  Surface s(120, 40);
  DrawList list{120, 40, {}};
  list.add(Text{"Score: 12", {60, 20}, 16}, Style::filled(colors::white));
  raster_draw(s, list);
  EXPECT_GT(count(s, colors::white), 20);
}

TEST(Raster, TetrisFrameRendersFully) {
  const tetris::TetrisState state(tetris::TetrisConfig{}, 7);
  const DrawList list = state.render();
  Surface s(static_cast<int>(list.width), static_cast<int>(list.height));
  raster_draw(s, list);
  EXPECT_LT(count(s, colors::black), s.width() * s.height());
}

TEST(Raster, RejectsEmptySurface) { EXPECT_THROW(Surface(0, 4), std::invalid_argument); }

}  // namespace
}  // namespace xkg
