#include "coopsched/v2x/channel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace coopsched::v2x {

std::string_view to_string(LinkClass c) {
  switch (c) {
    case LinkClass::kLos:
      return "LOS";
    case LinkClass::kNlosV:
      return "NLOSv";
    case LinkClass::kNlos:
      return "NLOS";
  }
  return "?";
}

LinkClass classify_link(const LinkGeometry& geometry) {
  if (geometry.building_blocked) return LinkClass::kNlos;
  if (geometry.blockers >= 1) return LinkClass::kNlosV;
  return LinkClass::kLos;
}

double median_pathloss_db(LinkClass link_class, double distance_m, double fc_ghz) {
  if (!(distance_m > 0.0)) throw std::domain_error("pathloss: distance must be positive");
  if (!(fc_ghz > 0.0)) throw std::domain_error("pathloss: carrier frequency must be positive");
  if (link_class == LinkClass::kNlos) {
    return 36.85 + 30.0 * std::log10(distance_m) + 18.9 * std::log10(fc_ghz);
  }
  return 38.77 + 16.7 * std::log10(distance_m) + 18.2 * std::log10(fc_ghz);
}

double draw_blockage_loss_db(const RadioParams& radio, Rng& rng) {
  if (!(radio.blockage_std_db > 0.0)) return std::max(0.0, radio.blockage_mean_db);
  std::normal_distribution<double> loss(radio.blockage_mean_db, radio.blockage_std_db);
  return std::max(0.0, loss(rng));
}

double pathloss_db(LinkClass link_class, const LinkGeometry& geometry, const RadioParams& radio,
                   Rng& rng) {
  double pl = median_pathloss_db(link_class, geometry.distance_m, geometry.fc_ghz);
  const double shadow_std =
      link_class == LinkClass::kNlos ? radio.shadow_std_nlos_db : radio.shadow_std_los_db;
  if (shadow_std > 0.0) {
    std::normal_distribution<double> shadowing(0.0, shadow_std);
    pl += shadowing(rng);
  }
  if (link_class == LinkClass::kNlosV) {
    for (int b = 0; b < geometry.blockers; ++b) pl += draw_blockage_loss_db(radio, rng);
  }
  return pl;
}

double shannon_rate_bps(double eta, double pathloss_db, const RadioParams& radio) {
  if (!(eta > 0.0) || eta > 1.0) throw std::invalid_argument("rate: eta must lie in (0, 1]");
  const double bandwidth = eta * radio.bandwidth_hz;
  const double noise_dbm = radio.noise_psd_dbm_hz + 10.0 * std::log10(bandwidth) + radio.noise_figure_db;
  const double snr_db = radio.tx_power_dbm - pathloss_db - noise_dbm;
  return bandwidth * std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

double downsample_ratio(double rate_bps, double delta_t_s, double frame_bits) {
  if (!(frame_bits > 0.0) || !(delta_t_s > 0.0)) {
    throw std::invalid_argument("downsample: frame size and slot length must be positive");
  }
  return std::clamp(rate_bps * delta_t_s / frame_bits, 0.0, 1.0);
}

ResourceRatioChain::ResourceRatioChain(std::uint64_t seed, double switch_prob,
                                       std::array<double, 3> ratios)
    : rng_(seed), switch_prob_(switch_prob), ratios_(ratios), state_(0) {
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  state_ = pick(rng_);
}

ResourceRatioChain::ResourceRatioChain(std::uint64_t seed, double switch_prob,
                                       std::size_t initial_state, std::array<double, 3> ratios)
    : rng_(seed), switch_prob_(switch_prob), ratios_(ratios), state_(initial_state % 3) {}

double ResourceRatioChain::switch_probability(double delta_t_s, double mean_dwell_s) {
  if (!(mean_dwell_s > 0.0)) throw std::invalid_argument("resource chain: dwell must be positive");
  return std::clamp(delta_t_s / mean_dwell_s, 0.0, 1.0);
}

void ResourceRatioChain::step() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng_) < switch_prob_) {
    std::uniform_int_distribution<std::size_t> other(1, 2);
    state_ = (state_ + other(rng_)) % 3;
  }
}

}  // namespace coopsched::v2x
