#pragma once

#include <cstdint>

#include "coopsched/core/rng.hpp"

namespace coopsched::rmab {

/// Reflection of the real line onto [0, 1]: fold x mod 2 back at 1.
double reflect(double x);

/// Normalised perception gain of one arm, a Gaussian random walk with
/// reflecting boundaries at 0 and 1. Each process owns its random stream.
class GainProcess {
 public:
  GainProcess(double initial, double sigma, std::uint64_t seed);

  double value() const noexcept { return value_; }
  double sigma() const noexcept { return sigma_; }

  /// Draws an increment from Normal(0, sigma^2) and reflects.
  double step();
  /// Applies a given increment (no draw).
  double step_with_increment(double increment);

 private:
  double value_;
  double sigma_;
  Rng rng_;
};

/// Well-behavedness constant: 3 * sqrt(ln(1/sigma)). Requires 0 < sigma < 1.
double well_behaved_constant(double sigma);

/// Confidence scale for which the fixed-pair regret bound holds:
/// 15 * sigma * ln(1/sigma). Throws std::domain_error unless 0 < sigma < 1.
double theoretical_beta(double sigma);

/// min(g / g_max, 1).
double normalize_gain(double g, double g_max);

struct AnalysisConstants {
  double sigma;
  double c_f;
  double beta_theory;
  double g_max = 1.0;

  static AnalysisConstants for_sigma(double sigma, double g_max = 1.0);
};

}  // namespace coopsched::rmab
