// Slow, independent scan used to cross-check the fast path. Shapes are
// handled as polygons: ray/edge intersections and point/edge distances only.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "coopsched/world/lidar.hpp"

namespace coopsched::world {

namespace {

using Poly = std::array<Vec2, 4>;

Poly polygon(const Rect& r) {
  return {Vec2{r.x_max, r.y_max}, Vec2{r.x_min, r.y_max}, Vec2{r.x_min, r.y_min}, Vec2{r.x_max, r.y_min}};
}

bool inside(const Poly& p, Vec2 q) {
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec2 a = p[i];
    const Vec2 b = p[(i + 1) % 4];
    if (cross(b - a, q - a) < 0.0) return false;
  }
  return true;
}

std::optional<double> ray_hit(const Poly& p, Vec2 o, Vec2 d) {
  std::optional<double> best;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec2 a = p[i];
    const Vec2 e = p[(i + 1) % 4] - a;
    const double denom = cross(d, e);
    if (denom == 0.0) continue;
    const double t = cross(a - o, e) / denom;
    const double s = cross(a - o, d) / denom;
    if (t >= 0.0 && s >= 0.0 && s <= 1.0 && (!best || t < *best)) best = t;
  }
  return best;
}

double segment_distance(Vec2 q, Vec2 a, Vec2 b) {
  const Vec2 e = b - a;
  const double len2 = dot(e, e);
  const double s = len2 > 0.0 ? std::clamp(dot(q - a, e) / len2, 0.0, 1.0) : 0.0;
  return norm(q - (a + s * e));
}

double poly_distance(const Poly& p, Vec2 q) {
  if (inside(p, q)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 4; ++i) d = std::min(d, segment_distance(q, p[i], p[(i + 1) % 4]));
  return d;
}

}  // namespace

int raycast_points_reference(const LidarSpec& spec, const LidarScene& scene, const Sensor& sensor,
                             const ScanTarget& target) {
  const Vec2 o = sensor.position;
  const Poly tp = target.footprint.corners();
  if (inside(tp, o)) return 0;
  std::vector<Poly> occ;
  for (const Rect& b : scene.buildings) {
    const Poly p = polygon(b);
    if (!inside(p, o)) occ.push_back(p);
  }
  for (const Vehicle& v : scene.vehicles) {
    if (v.id == sensor.vehicle_id || v.id == target.vehicle_id) continue;
    const Poly p = v.footprint().corners();
    if (!inside(p, o)) occ.push_back(p);
  }
  const int n_rays = spec.azimuth_rays();
  int n_az = 0;
  for (int k = 0; k < n_rays; ++k) {
    const Vec2 dir = ray_direction(spec, sensor.heading, k);
    const auto t = ray_hit(tp, o, dir);
    if (!t || *t > spec.max_range_m) continue;
    bool blocked = false;
    for (const Poly& p : occ) {
      const auto to = ray_hit(p, o, dir);
      if (to && *to <= *t) blocked = true;
    }
    if (!blocked) ++n_az;
  }
  if (n_az == 0) return 0;
  return n_az * vertical_channels(spec, poly_distance(tp, o));
}

std::vector<int> scan_targets_reference(const LidarSpec& spec, const LidarScene& scene,
                                        const Sensor& sensor, std::span<const ScanTarget> targets) {
  std::vector<int> out;
  out.reserve(targets.size());
  for (const auto& t : targets) out.push_back(raycast_points_reference(spec, scene, sensor, t));
  return out;
}

}  // namespace coopsched::world
