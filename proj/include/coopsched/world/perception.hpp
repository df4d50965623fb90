#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "coopsched/core/types.hpp"
#include "coopsched/v2x/channel.hpp"
#include "coopsched/world/frame.hpp"
#include "coopsched/world/lidar.hpp"

namespace coopsched::world {

/// CoV-flagged vehicles other than the ego within `radius_m` (centre
/// distance), nearest first, truncated to `v_max`. Ties by id.
std::vector<CandidateView> candidates(const WorldFrame& frame, double radius_m = 100.0,
                                      std::size_t v_max = std::numeric_limits<std::size_t>::max());

/// Vehicle footprints (other than the endpoints) crossing the segment and
/// whether any building does.
v2x::LinkGeometry link_geometry(const WorldFrame& frame, const std::vector<Rect>& buildings,
                                std::uint32_t from_id, std::uint32_t to_id, double fc_ghz = 5.9);

struct WorldSettings {
  LidarSpec lidar;
  v2x::RadioParams radio;
  double fc_ghz = 5.9;
  double candidate_radius_m = 100.0;
  std::size_t v_max = std::numeric_limits<std::size_t>::max();
  double eta_dwell_s = 10.0;
  std::array<double, 3> eta_ratios = v2x::ResourceRatioChain::kDefaultRatios;
};

/// Everything the ledger needs about one slot: the candidate set and, per
/// candidate, the gain and CP recall it would deliver if scheduled.
struct SlotEvaluation {
  Slot slot = 0;
  std::vector<CandidateView> candidates;
  std::vector<double> gains;
  std::vector<double> recall_cp;
  double recall_standalone = 1.0;
};

/// Evaluates a trace slot by slot. Frames must be fed in slot order because
/// the resource-ratio chains advance once per frame. Randomness is split by
/// stream: difficulties per object, channel draws per (CoV, slot), one
/// resource chain per CoV.
class WorldEvaluator {
 public:
  WorldEvaluator(const std::vector<Rect>& buildings, WorldSettings settings, std::uint64_t seed);

  SlotEvaluation evaluate(const WorldFrame& frame);

  std::int64_t difficulty(EntityKind kind, std::uint32_t id);
  double eta(std::uint32_t cov_id) const;

  /// Uses the brute-force scanner; for cross-checking only.
  void use_reference_scanner(bool on) { reference_ = on; }

 private:
  v2x::ResourceRatioChain& chain(std::uint32_t cov_id);

  const std::vector<Rect>& buildings_;
  WorldSettings settings_;
  std::uint64_t seed_;
  bool reference_ = false;
  std::map<std::pair<int, std::uint32_t>, std::int64_t> difficulty_;
  std::map<std::uint32_t, v2x::ResourceRatioChain> chains_;
};

}  // namespace coopsched::world
