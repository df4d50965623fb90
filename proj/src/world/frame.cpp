#include "coopsched/world/frame.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace coopsched::world {

const Vehicle* WorldFrame::find_vehicle(std::uint32_t id) const {
  for (const auto& v : vehicles) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const Vehicle& WorldFrame::ego() const {
  const Vehicle* v = find_vehicle(ego_id);
  if (v == nullptr) throw std::invalid_argument("frame has no ego vehicle");
  return *v;
}

void WorldFrame::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  std::set<std::uint32_t> car_ids;
  for (const auto& v : vehicles) {
    if (!car_ids.insert(v.id).second) {
      throw std::invalid_argument("duplicate vehicle id " + std::to_string(v.id));
    }
    if (!finite(v.center.x) || !finite(v.center.y) || !finite(v.heading)) {
      throw std::invalid_argument("vehicle " + std::to_string(v.id) + " has non-finite pose");
    }
    if (!(v.length > 0.0) || !(v.width > 0.0)) {
      throw std::invalid_argument("vehicle " + std::to_string(v.id) + " has a degenerate footprint");
    }
  }
  if (!car_ids.contains(ego_id)) throw std::invalid_argument("missing ego vehicle");
  std::set<std::uint32_t> ped_ids;
  for (const auto& p : pedestrians) {
    if (!ped_ids.insert(p.id).second) {
      throw std::invalid_argument("duplicate pedestrian id " + std::to_string(p.id));
    }
    if (!finite(p.position.x) || !finite(p.position.y) || !finite(p.heading)) {
      throw std::invalid_argument("pedestrian " + std::to_string(p.id) + " has non-finite pose");
    }
    if (!(p.length > 0.0) || !(p.width > 0.0)) {
      throw std::invalid_argument("pedestrian " + std::to_string(p.id) + " has a degenerate footprint");
    }
  }
}

}  // namespace coopsched::world
