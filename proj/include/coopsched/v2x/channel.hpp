#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "coopsched/core/rng.hpp"

namespace coopsched::v2x {

enum class LinkClass { kLos, kNlosV, kNlos };

std::string_view to_string(LinkClass c);

struct LinkGeometry {
  double distance_m = 1.0;
  double fc_ghz = 5.9;
  /// Vehicle footprints crossing the 2D transmitter-receiver segment.
  int blockers = 0;
  bool building_blocked = false;
};

/// V2V sidelink radio parameters (urban). Defaults are the usual sidelink
/// link-budget values.
struct RadioParams {
  double tx_power_dbm = 23.0;
  double noise_psd_dbm_hz = -174.0;
  double noise_figure_db = 9.0;
  double bandwidth_hz = 30e6;
  double shadow_std_los_db = 3.0;   // LOS and NLOSv
  double shadow_std_nlos_db = 4.0;
  double blockage_mean_db = 5.0;
  double blockage_std_db = 4.0;
};

/// NLOS if a building cuts the segment, else NLOSv if any vehicle does.
LinkClass classify_link(const LinkGeometry& geometry);

/// Deterministic part of the pathloss in dB (no shadowing, no blockage).
///   LOS / NLOSv: 38.77 + 16.7 log10 d + 18.2 log10 fc
///   NLOS:        36.85 + 30.0 log10 d + 18.9 log10 fc
/// with d in metres and fc in GHz. Throws std::domain_error for d <= 0.
double median_pathloss_db(LinkClass link_class, double distance_m, double fc_ghz);

/// One per-vehicle blockage draw: max(0, Normal(mean, std)) dB.
double draw_blockage_loss_db(const RadioParams& radio, Rng& rng);

/// Pathloss including a shadowing draw and, for NLOSv, one blockage draw per
/// blocking vehicle.
double pathloss_db(LinkClass link_class, const LinkGeometry& geometry, const RadioParams& radio,
                   Rng& rng);

/// Shannon rate over the allocated share eta of the band. Noise is integrated
/// over the allocated bandwidth eta * W.
double shannon_rate_bps(double eta, double pathloss_db, const RadioParams& radio);

/// Uniform down-sampling ratio that fits a frame into one slot:
/// min(1, rate * dt / frame_bits).
double downsample_ratio(double rate_bps, double delta_t_s, double frame_bits);

/// Three-state Markov chain of the available resource ratio. With
/// probability `switch_prob` per slot it jumps to one of the other two states,
/// chosen uniformly.
class ResourceRatioChain {
 public:
  static constexpr std::array<double, 3> kDefaultRatios{1.2e6 / 30e6, 6e6 / 30e6, 1.0};

  ResourceRatioChain(std::uint64_t seed, double switch_prob,
                     std::array<double, 3> ratios = kDefaultRatios);
  ResourceRatioChain(std::uint64_t seed, double switch_prob, std::size_t initial_state,
                     std::array<double, 3> ratios = kDefaultRatios);

  /// Per-slot switch probability for a mean dwell time: dt / dwell.
  static double switch_probability(double delta_t_s, double mean_dwell_s);

  double eta() const noexcept { return ratios_[state_]; }
  std::size_t state() const noexcept { return state_; }
  double switch_prob() const noexcept { return switch_prob_; }
  void step();

 private:
  Rng rng_;
  double switch_prob_;
  std::array<double, 3> ratios_;
  std::size_t state_;
};

}  // namespace coopsched::v2x
