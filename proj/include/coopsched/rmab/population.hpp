#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "coopsched/core/rng.hpp"
#include "coopsched/core/types.hpp"
#include "coopsched/rmab/reflected_walk.hpp"

namespace coopsched::rmab {

struct PopulationParams {
  double sigma = 0.02;
  /// Probability of one arrival per slot is min(1, arrival_rate).
  double arrival_rate = 0.0;
  /// Mean of the geometric lifetime in slots; infinity disables departures.
  double mean_lifetime = std::numeric_limits<double>::infinity();
  std::size_t v_max = 2;
  std::size_t initial_arms = 2;
};

struct PopulationEvents {
  std::vector<CovId> arrivals;
  std::vector<CovId> departures;
  std::size_t rejected_arrivals = 0;
};

/// Dynamic set of restless arms. Arm ids start at 1 and are never reused;
/// fresh arms start from the stationary law Uniform[0, 1].
class ArmPopulation {
 public:
  ArmPopulation(const PopulationParams& params, std::uint64_t seed);

  const std::map<CovId, GainProcess>& arms() const noexcept { return arms_; }
  const PopulationParams& params() const noexcept { return params_; }

  /// One slot of evolution: every arm steps its gain, each arm departs with
  /// probability 1/mean_lifetime, then at most one arrival is attempted.
  PopulationEvents step();

  /// Test hook: insert an arm with a given gain (still respects v_max).
  bool add_arm(double gain);

 private:
  PopulationParams params_;
  std::uint64_t seed_;
  Rng rng_;
  std::uint32_t next_id_ = 1;
  std::map<CovId, GainProcess> arms_;
};

}  // namespace coopsched::rmab
