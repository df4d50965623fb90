#include "coopsched/rmab/reflected_walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace coopsched::rmab {

double reflect(double x) {
  double m = std::fmod(x, 2.0);
  if (m < 0.0) m += 2.0;
  // fmod of a tiny negative number can round up to exactly 2
  if (m >= 2.0) m = 0.0;
  return m < 1.0 ? m : 2.0 - m;
}

GainProcess::GainProcess(double initial, double sigma, std::uint64_t seed)
    : value_(reflect(initial)), sigma_(sigma), rng_(seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gain process: sigma must be finite and non-negative");
  }
}

double GainProcess::step() {
  if (sigma_ == 0.0) return value_;
  std::normal_distribution<double> increment(0.0, sigma_);
  return step_with_increment(increment(rng_));
}

double GainProcess::step_with_increment(double increment) {
  value_ = reflect(value_ + increment);
  return value_;
}

namespace {
void require_unit_sigma(double sigma) {
  if (!(sigma > 0.0) || !(sigma < 1.0)) throw std::domain_error("sigma must lie in (0, 1)");
}
}  // namespace

double well_behaved_constant(double sigma) {
  require_unit_sigma(sigma);
  return 3.0 * std::sqrt(std::log(1.0 / sigma));
}

double theoretical_beta(double sigma) {
  require_unit_sigma(sigma);
  return 15.0 * sigma * std::log(1.0 / sigma);
}

double normalize_gain(double g, double g_max) {
  if (!(g_max > 0.0)) throw std::invalid_argument("g_max must be positive");
  return std::min(g / g_max, 1.0);
}

AnalysisConstants AnalysisConstants::for_sigma(double sigma, double g_max) {
  return AnalysisConstants{sigma, well_behaved_constant(sigma), theoretical_beta(sigma), g_max};
}

}  // namespace coopsched::rmab
