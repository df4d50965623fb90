#include "coopsched/world/geometry.hpp"

#include <algorithm>
#include <limits>

namespace coopsched::world {

std::array<Vec2, 4> OrientedRect::corners() const {
  const Vec2 u = unit(heading);
  const Vec2 v{-u.y, u.x};
  const double hl = 0.5 * length;
  const double hw = 0.5 * width;
  return {center + hl * u + hw * v, center - hl * u + hw * v, center - hl * u - hw * v,
          center + hl * u - hw * v};
}

OrientedRect as_oriented(const Rect& r) {
  return OrientedRect{{0.5 * (r.x_min + r.x_max), 0.5 * (r.y_min + r.y_max)},
                      0.0,
                      r.x_max - r.x_min,
                      r.y_max - r.y_min};
}

namespace {

struct Local {
  Vec2 origin;
  Vec2 dir;
};

// Express a point and a direction in the rectangle's own frame.
Local to_local(const OrientedRect& r, Vec2 origin, Vec2 dir) {
  const double c = std::cos(r.heading);
  const double s = std::sin(r.heading);
  const Vec2 d = origin - r.center;
  return {{c * d.x + s * d.y, -s * d.x + c * d.y}, {c * dir.x + s * dir.y, -s * dir.x + c * dir.y}};
}

// Slab clip of origin + t * dir against [-hx, hx] x [-hy, hy].
bool slab(Vec2 o, Vec2 d, double hx, double hy, double& t_near, double& t_far) {
  t_near = -std::numeric_limits<double>::infinity();
  t_far = std::numeric_limits<double>::infinity();
  const double lo[2] = {-hx, -hy};
  const double hi[2] = {hx, hy};
  const double oo[2] = {o.x, o.y};
  const double dd[2] = {d.x, d.y};
  for (int k = 0; k < 2; ++k) {
    if (dd[k] == 0.0) {
      if (oo[k] < lo[k] || oo[k] > hi[k]) return false;
      continue;
    }
    double t0 = (lo[k] - oo[k]) / dd[k];
    double t1 = (hi[k] - oo[k]) / dd[k];
    if (t0 > t1) std::swap(t0, t1);
    t_near = std::max(t_near, t0);
    t_far = std::min(t_far, t1);
    if (t_near > t_far) return false;
  }
  return true;
}

}  // namespace

bool contains(const OrientedRect& r, Vec2 p) {
  const Local l = to_local(r, p, {1.0, 0.0});
  return std::fabs(l.origin.x) <= 0.5 * r.length && std::fabs(l.origin.y) <= 0.5 * r.width;
}

bool contains(const Rect& r, Vec2 p) {
  return p.x >= r.x_min && p.x <= r.x_max && p.y >= r.y_min && p.y <= r.y_max;
}

std::optional<double> ray_entry(const OrientedRect& r, Vec2 origin, Vec2 dir) {
  const Local l = to_local(r, origin, dir);
  double t_near = 0.0;
  double t_far = 0.0;
  if (!slab(l.origin, l.dir, 0.5 * r.length, 0.5 * r.width, t_near, t_far)) return std::nullopt;
  if (t_near < 0.0) return std::nullopt;
  return t_near;
}

std::optional<double> ray_entry(const Rect& r, Vec2 origin, Vec2 dir) {
  const Vec2 c{0.5 * (r.x_min + r.x_max), 0.5 * (r.y_min + r.y_max)};
  double t_near = 0.0;
  double t_far = 0.0;
  if (!slab(origin - c, dir, 0.5 * (r.x_max - r.x_min), 0.5 * (r.y_max - r.y_min), t_near, t_far)) {
    return std::nullopt;
  }
  if (t_near < 0.0) return std::nullopt;
  return t_near;
}

bool segment_intersects(const OrientedRect& r, Vec2 a, Vec2 b) {
  const Local l = to_local(r, a, b - a);
  double t_near = 0.0;
  double t_far = 0.0;
  if (!slab(l.origin, l.dir, 0.5 * r.length, 0.5 * r.width, t_near, t_far)) return false;
  return t_far >= 0.0 && t_near <= 1.0;
}

bool segment_intersects(const Rect& r, Vec2 a, Vec2 b) {
  return segment_intersects(as_oriented(r), a, b);
}

double distance_to(const OrientedRect& r, Vec2 p) {
  const Local l = to_local(r, p, {1.0, 0.0});
  const double dx = std::max(std::fabs(l.origin.x) - 0.5 * r.length, 0.0);
  const double dy = std::max(std::fabs(l.origin.y) - 0.5 * r.width, 0.0);
  return std::hypot(dx, dy);
}

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

}  // namespace coopsched::world
