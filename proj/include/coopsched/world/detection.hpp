#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coopsched/core/rng.hpp"

namespace coopsched::world {

/// Exponent of the miss-probability power law P(miss | n points) = n^-a.
inline constexpr double kDifficultyExponent = 0.6265;

/// Minimum point count N = ceil(u^(-1/a)) for u in (0, 1], so that
/// P(N > n) = n^-a. Capped at 2^53 for tiny u.
std::int64_t difficulty_from_uniform(double u);
std::int64_t sample_difficulty(Rng& rng);

/// min(1, n^-a); 1 for n < 1.
double miss_probability(double points);

inline bool detect(std::int64_t points, std::int64_t difficulty) { return points >= difficulty; }

/// 1 up to 10 m, 2 - log10(d) up to 100 m, 0 beyond.
double importance_weight(double distance_m);

struct PerceptionOutcome {
  std::vector<bool> detected_standalone;
  std::vector<bool> detected_cp;
  double cost_standalone = 0.0;  // c_0
  double cost_cp = 0.0;          // c_i
  double gain = 0.0;             // c_0 - c_i
  double recall_standalone = 1.0;
  double recall_cp = 1.0;
};

/// Costs, gain and recall over a set of objects. Objects with zero weight are
/// outside the scope and count toward neither cost nor recall; with no
/// objects in scope both recalls are 1.
PerceptionOutcome evaluate_perception(std::span<const double> weights,
                                      std::span<const std::int64_t> difficulties,
                                      std::span<const std::int64_t> ego_points,
                                      std::span<const std::int64_t> cov_points);

}  // namespace coopsched::world
