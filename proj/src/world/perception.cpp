#include "coopsched/world/perception.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coopsched/world/detection.hpp"

namespace coopsched::world {

std::vector<CandidateView> candidates(const WorldFrame& frame, double radius_m, std::size_t v_max) {
  const Vehicle& ego = frame.ego();
  std::vector<CandidateView> out;
  for (const auto& v : frame.vehicles) {
    if (!v.is_cov || v.id == ego.id) continue;
    const double d = norm(v.center - ego.center);
    if (d <= radius_m) out.push_back({cov(v.id), d, frame.slot});
  }
  std::sort(out.begin(), out.end(), [](const CandidateView& a, const CandidateView& b) {
    return a.distance_m != b.distance_m ? a.distance_m < b.distance_m : raw(a.id) < raw(b.id);
  });
  if (out.size() > v_max) out.resize(v_max);
  return out;
}

v2x::LinkGeometry link_geometry(const WorldFrame& frame, const std::vector<Rect>& buildings,
                                std::uint32_t from_id, std::uint32_t to_id, double fc_ghz) {
  const Vehicle* a = frame.find_vehicle(from_id);
  const Vehicle* b = frame.find_vehicle(to_id);
  if (a == nullptr || b == nullptr) throw std::invalid_argument("link endpoint not in frame");
  v2x::LinkGeometry g;
  g.distance_m = std::max(1.0, norm(b->center - a->center));
  g.fc_ghz = fc_ghz;
  for (const auto& v : frame.vehicles) {
    if (v.id == from_id || v.id == to_id) continue;
    if (segment_intersects(v.footprint(), a->center, b->center)) ++g.blockers;
  }
  g.building_blocked = std::any_of(buildings.begin(), buildings.end(), [&](const Rect& r) {
    return segment_intersects(r, a->center, b->center);
  });
  return g;
}

WorldEvaluator::WorldEvaluator(const std::vector<Rect>& buildings, WorldSettings settings,
                               std::uint64_t seed)
    : buildings_(buildings), settings_(settings), seed_(seed) {
  settings_.lidar.validate();
  if (!(settings_.eta_dwell_s > 0.0)) throw std::invalid_argument("eta dwell time must be positive");
}

std::int64_t WorldEvaluator::difficulty(EntityKind kind, std::uint32_t id) {
  const auto key = std::make_pair(static_cast<int>(kind), id);
  auto it = difficulty_.find(key);
  if (it == difficulty_.end()) {
    Rng rng = make_rng(seed_, "difficulty", static_cast<std::uint64_t>(kind), id);
    it = difficulty_.emplace(key, sample_difficulty(rng)).first;
  }
  return it->second;
}

v2x::ResourceRatioChain& WorldEvaluator::chain(std::uint32_t cov_id) {
  auto it = chains_.find(cov_id);
  if (it == chains_.end()) {
    const double p = v2x::ResourceRatioChain::switch_probability(settings_.lidar.delta_t_s, settings_.eta_dwell_s);
    it = chains_.try_emplace(cov_id, derive_seed(seed_, "eta", cov_id), p, settings_.eta_ratios).first;
  }
  return it->second;
}

double WorldEvaluator::eta(std::uint32_t cov_id) const {
  const auto it = chains_.find(cov_id);
  if (it == chains_.end()) throw std::out_of_range("no resource chain for this CoV yet");
  return it->second.eta();
}

SlotEvaluation WorldEvaluator::evaluate(const WorldFrame& frame) {
  const Vehicle& ego = frame.ego();
  std::vector<ScanTarget> targets;
  std::vector<double> weights;
  std::vector<std::int64_t> difficulties;
  for (const auto& v : frame.vehicles) {
    if (v.id == ego.id) continue;
    const double w = importance_weight(norm(v.center - ego.center));
    if (w <= 0.0) continue;
    targets.push_back({v.footprint(), v.id});
    weights.push_back(w);
    difficulties.push_back(difficulty(EntityKind::kCar, v.id));
  }
  for (const auto& p : frame.pedestrians) {
    const double w = importance_weight(norm(p.position - ego.center));
    if (w <= 0.0) continue;
    targets.push_back({p.footprint(), kNoVehicle});
    weights.push_back(w);
    difficulties.push_back(difficulty(EntityKind::kPedestrian, p.id));
  }

  const LidarScene scene{buildings_, frame.vehicles};
  auto scan = [&](const Vehicle& v) {
    const Sensor s{v.center, v.heading, v.id};
    const auto counts = reference_ ? scan_targets_reference(settings_.lidar, scene, s, targets)
                                   : scan_targets(settings_.lidar, scene, s, targets);
    return std::vector<std::int64_t>(counts.begin(), counts.end());
  };

  SlotEvaluation out;
  out.slot = frame.slot;
  out.candidates = candidates(frame, settings_.candidate_radius_m, settings_.v_max);
  const auto ego_points = scan(ego);
  const std::vector<std::int64_t> none(targets.size(), 0);
  out.recall_standalone = evaluate_perception(weights, difficulties, ego_points, none).recall_standalone;

  const double frame_bits = settings_.lidar.full_frame_bits();
  for (const auto& c : out.candidates) {
    const Vehicle& v = *frame.find_vehicle(raw(c.id));
    const auto raw_points = scan(v);
    const auto geom = link_geometry(frame, buildings_, ego.id, v.id, settings_.fc_ghz);
    Rng rng = make_rng(seed_, "channel", v.id, static_cast<std::uint64_t>(frame.slot));
    const double pl = v2x::pathloss_db(v2x::classify_link(geom), geom, settings_.radio, rng);
    const double rate = v2x::shannon_rate_bps(chain(v.id).eta(), pl, settings_.radio);
    const double rho = v2x::downsample_ratio(rate, settings_.lidar.delta_t_s, frame_bits);
    std::vector<std::int64_t> cov_points(raw_points.size());
    for (std::size_t j = 0; j < raw_points.size(); ++j) {
      cov_points[j] = std::llround(rho * static_cast<double>(raw_points[j]));
    }
    const auto outcome = evaluate_perception(weights, difficulties, ego_points, cov_points);
    out.gains.push_back(outcome.gain);
    out.recall_cp.push_back(outcome.recall_cp);
  }

  for (const auto& v : frame.vehicles) {
    if (v.is_cov) chain(v.id).step();
  }
  return out;
}

}  // namespace coopsched::world
