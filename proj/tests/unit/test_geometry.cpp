#include <gtest/gtest.h>

#include <cmath>

#include "coopsched/world/geometry.hpp"

using namespace coopsched::world;

TEST(Geometry, CornersAndContains) {
  const OrientedRect r{{1.0, 2.0}, kPi / 2, 4.0, 2.0};
  for (const Vec2& c : r.corners()) {
    EXPECT_NEAR(std::fabs(c.x - 1.0), 1.0, 1e-12);
    EXPECT_NEAR(std::fabs(c.y - 2.0), 2.0, 1e-12);
  }
  EXPECT_TRUE(contains(r, {1.5, 3.5}));
  EXPECT_FALSE(contains(r, {2.5, 2.0}));
}

TEST(Geometry, RayEntryAxisAligned) {
  const Rect r{5.0, -1.0, 7.0, 1.0};
  EXPECT_NEAR(*ray_entry(r, {0.0, 0.0}, {1.0, 0.0}), 5.0, 1e-12);
  EXPECT_FALSE(ray_entry(r, {0.0, 0.0}, {-1.0, 0.0}));
  EXPECT_FALSE(ray_entry(r, {6.0, 0.0}, {1.0, 0.0}));
  EXPECT_NEAR(*ray_entry(as_oriented(r), {0.0, 0.0}, {1.0, 0.0}), 5.0, 1e-12);
}

TEST(Geometry, RayEntryRotated) {
  const OrientedRect r{{10.0, 0.0}, kPi / 4, 2.0 * std::sqrt(2.0), 2.0 * std::sqrt(2.0)};
  // Diamond with a vertex at x = 8.
  EXPECT_NEAR(*ray_entry(r, {0.0, 0.0}, {1.0, 0.0}), 8.0, 1e-9);
}

TEST(Geometry, SegmentIntersection) {
  const Rect r{-1.0, -1.0, 1.0, 1.0};
  EXPECT_TRUE(segment_intersects(r, {-5.0, 0.0}, {5.0, 0.0}));
  EXPECT_FALSE(segment_intersects(r, {-5.0, 3.0}, {5.0, 3.0}));
  EXPECT_FALSE(segment_intersects(r, {-5.0, 0.0}, {-2.0, 0.0}));
  EXPECT_TRUE(segment_intersects(r, {0.0, 0.0}, {0.5, 0.5}));
}

TEST(Geometry, DistanceTo) {
  const OrientedRect r{{0.0, 0.0}, 0.0, 2.0, 2.0};
  EXPECT_NEAR(distance_to(r, {4.0, 0.0}), 3.0, 1e-12);
  EXPECT_NEAR(distance_to(r, {4.0, 5.0}), 5.0, 1e-12);
  EXPECT_EQ(distance_to(r, {0.2, 0.2}), 0.0);
}

TEST(Geometry, WrapAngle) {
  EXPECT_NEAR(wrap_angle(3.0 * kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(-kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(0.5), 0.5, 1e-15);
}
