#include "coopsched/world/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopsched::world {

namespace {
constexpr double kDifficultyCap = 9007199254740992.0;  // 2^53
}

std::int64_t difficulty_from_uniform(double u) {
  if (!(u > 0.0 && u <= 1.0)) throw std::domain_error("difficulty uniform must lie in (0, 1]");
  const double n = std::ceil(std::pow(u, -1.0 / kDifficultyExponent));
  return static_cast<std::int64_t>(std::min(n, kDifficultyCap));
}

std::int64_t sample_difficulty(Rng& rng) { return difficulty_from_uniform(uniform_open0(rng)); }

double miss_probability(double points) {
  if (points < 1.0) return 1.0;
  return std::min(1.0, std::pow(points, -kDifficultyExponent));
}

double importance_weight(double distance_m) {
  if (distance_m < 0.0) throw std::domain_error("distance must be non-negative");
  if (distance_m <= 10.0) return 1.0;
  if (distance_m >= 100.0) return 0.0;
  return 2.0 - std::log10(distance_m);
}

PerceptionOutcome evaluate_perception(std::span<const double> weights,
                                      std::span<const std::int64_t> difficulties,
                                      std::span<const std::int64_t> ego_points,
                                      std::span<const std::int64_t> cov_points) {
  const std::size_t n = weights.size();
  if (difficulties.size() != n || ego_points.size() != n || cov_points.size() != n) {
    throw std::invalid_argument("perception inputs differ in length");
  }
  PerceptionOutcome out;
  out.detected_standalone.resize(n);
  out.detected_cp.resize(n);
  std::size_t in_scope = 0;
  std::size_t hit_sa = 0;
  std::size_t hit_cp = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const bool sa = detect(ego_points[j], difficulties[j]);
    const bool cp = detect(ego_points[j] + cov_points[j], difficulties[j]);
    out.detected_standalone[j] = sa;
    out.detected_cp[j] = cp;
    const double w = weights[j];
    if (!(w > 0.0)) continue;
    ++in_scope;
    hit_sa += sa ? 1 : 0;
    hit_cp += cp ? 1 : 0;
    if (!sa) {
      out.cost_standalone += w;
      if (!cp) out.cost_cp += w;
      else out.gain += w;
    }
  }
  if (in_scope > 0) {
    out.recall_standalone = static_cast<double>(hit_sa) / static_cast<double>(in_scope);
    out.recall_cp = static_cast<double>(hit_cp) / static_cast<double>(in_scope);
  }
  return out;
}

}  // namespace coopsched::world
