#pragma once

#include <array>
#include <cmath>
#include <optional>

namespace coopsched::world {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Axis-aligned rectangle (buildings).
struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Rectangle footprint rotated by `heading`; `length` runs along the heading.
struct OrientedRect {
  Vec2 center;
  double heading = 0.0;
  double length = 0.0;
  double width = 0.0;

  std::array<Vec2, 4> corners() const;
  friend bool operator==(const OrientedRect&, const OrientedRect&) = default;
};

OrientedRect as_oriented(const Rect& r);

bool contains(const OrientedRect& r, Vec2 p);
bool contains(const Rect& r, Vec2 p);

/// Entry distance of the ray origin + t * dir (|dir| = 1) into the rectangle,
/// via the slab method in the rectangle frame. Returns nullopt on a miss and
/// when the origin lies inside.
std::optional<double> ray_entry(const OrientedRect& r, Vec2 origin, Vec2 dir);
std::optional<double> ray_entry(const Rect& r, Vec2 origin, Vec2 dir);

/// Whether the closed segment [a, b] touches the rectangle.
bool segment_intersects(const OrientedRect& r, Vec2 a, Vec2 b);
bool segment_intersects(const Rect& r, Vec2 a, Vec2 b);

/// Distance from p to the closest point of the rectangle (0 inside).
double distance_to(const OrientedRect& r, Vec2 p);

/// Angle wrapped to (-pi, pi].
double wrap_angle(double a);

}  // namespace coopsched::world
