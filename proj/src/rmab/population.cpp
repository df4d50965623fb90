#include "coopsched/rmab/population.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace coopsched::rmab {

ArmPopulation::ArmPopulation(const PopulationParams& params, std::uint64_t seed)
    : params_(params), seed_(seed), rng_(make_rng(seed, "population")) {
  if (params.v_max < 1) throw std::invalid_argument("population: v_max must be >= 1");
  if (!(params.arrival_rate >= 0.0)) throw std::invalid_argument("population: arrival_rate < 0");
  if (!(params.mean_lifetime > 0.0)) throw std::invalid_argument("population: mean_lifetime <= 0");
  if (params.initial_arms > params.v_max) {
    throw std::invalid_argument("population: initial_arms exceeds v_max");
  }
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (std::size_t i = 0; i < params.initial_arms; ++i) add_arm(uniform(rng_));
}

bool ArmPopulation::add_arm(double gain) {
  if (arms_.size() >= params_.v_max) return false;
  const CovId id = cov(next_id_++);
  arms_.emplace(id, GainProcess(gain, params_.sigma, derive_seed(seed_, "arm", raw(id))));
  return true;
}

PopulationEvents ArmPopulation::step() {
  PopulationEvents events;
  for (auto& [id, process] : arms_) process.step();

  if (std::isfinite(params_.mean_lifetime)) {
    std::bernoulli_distribution departs(std::min(1.0, 1.0 / params_.mean_lifetime));
    for (auto it = arms_.begin(); it != arms_.end();) {
      if (departs(rng_)) {
        events.departures.push_back(it->first);
        it = arms_.erase(it);
      } else {
        ++it;
      }
    }
  }

  if (params_.arrival_rate > 0.0) {
    std::bernoulli_distribution arrives(std::min(1.0, params_.arrival_rate));
    if (arrives(rng_)) {
      std::uniform_real_distribution<double> uniform(0.0, 1.0);
      const double initial = uniform(rng_);
      const CovId next = cov(next_id_);
      if (add_arm(initial)) {
        events.arrivals.push_back(next);
      } else {
        ++events.rejected_arrivals;
      }
    }
  }
  return events;
}

}  // namespace coopsched::rmab
