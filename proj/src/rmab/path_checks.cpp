#include "coopsched/rmab/path_checks.hpp"

#include <array>
#include <random>
#include <vector>

#include "coopsched/core/rng.hpp"
#include "coopsched/policy/mass.hpp"
#include "coopsched/rmab/population.hpp"
#include "coopsched/rmab/reflected_walk.hpp"
#include "coopsched/rmab/well_behaved.hpp"

namespace coopsched::rmab {

WellBehavedFrequency well_behaved_violation_frequency(double sigma, std::size_t windows,
                                                      std::uint64_t seed, std::size_t arms) {
  const double c_f = well_behaved_constant(sigma);
  const std::int64_t half = window_half_width(sigma);
  const auto length = static_cast<std::size_t>(2 * half + 1);

  const auto n = static_cast<std::int64_t>(windows);
  std::size_t violations = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : violations)
  for (std::int64_t w = 0; w < n; ++w) {
    std::vector<std::vector<double>> paths(arms, std::vector<double>(length));
    for (std::size_t a = 0; a < arms; ++a) {
      Rng init = make_rng(seed, "well-behaved-init", static_cast<std::uint64_t>(w), a);
      std::uniform_real_distribution<double> uniform(0.0, 1.0);
      GainProcess process(uniform(init), sigma,
                          derive_seed(seed, "well-behaved-walk", static_cast<std::uint64_t>(w), a));
      auto& path = paths[a];
      path[0] = process.value();
      for (std::size_t t = 1; t < length; ++t) path[t] = process.step();
    }
    if (!well_behaved(paths, c_f, sigma)) ++violations;
  }
  return WellBehavedFrequency{windows, violations};
}

SchedulingDeadlineReport check_scheduling_deadlines(double sigma, double beta, Slot slots,
                                                    std::uint64_t seed) {
  PopulationParams params;
  params.sigma = sigma;
  params.initial_arms = 2;
  params.v_max = 2;
  ArmPopulation population(params, seed);

  const auto total = static_cast<std::size_t>(slots);
  std::array<std::vector<double>, 2> paths;
  std::array<CovId, 2> ids{};
  {
    std::size_t k = 0;
    for (const auto& [id, process] : population.arms()) ids[k++] = id;
  }
  for (auto& p : paths) p.reserve(total);

  policy::MassPolicy mass(beta);
  std::vector<CovId> scheduled(total);
  // -1 when the leader is undefined (an arm not yet seen)
  std::vector<int> leader(total, -1);

  for (std::size_t k = 0; k < total; ++k) {
    const Slot t = static_cast<Slot>(k) + 1;
    std::array<CandidateView, 2> candidates{};
    for (std::size_t a = 0; a < 2; ++a) {
      const double g = population.arms().at(ids[a]).value();
      paths[a].push_back(g);
      candidates[a] = CandidateView{ids[a], 0.0, t};
    }
    const auto e0 = mass.entry(ids[0]);
    const auto e1 = mass.entry(ids[1]);
    if (e0 && e1) leader[k] = e1->gain > e0->gain ? 1 : 0;

    const CovId a_t = mass.select(candidates, t);
    scheduled[k] = a_t;
    const std::size_t arm = a_t == ids[0] ? 0 : 1;
    mass.observe(a_t, paths[arm][k], t);
    population.step();
  }

  const double c_f = well_behaved_constant(sigma);
  const std::int64_t half = window_half_width(sigma);
  const ViolationIndex idx0(paths[0], c_f, sigma);
  const ViolationIndex idx1(paths[1], c_f, sigma);

  SchedulingDeadlineReport report;
  for (std::size_t k = 0; k + 1 < total; ++k) {
    if (leader[k] < 0) continue;
    ++report.slots_checked;
    const auto center = static_cast<std::int64_t>(k);
    const bool good = idx0.well_behaved_on(center - half, center + half) &&
                      idx1.well_behaved_on(center - half, center + half);
    if (good) ++report.well_behaved_slots;

    const CovId optimal = paths[1][k] > paths[0][k] ? ids[1] : ids[0];
    const CovId lead = ids[static_cast<std::size_t>(leader[k])];
    const bool optimal_on_time = scheduled[k] == optimal || scheduled[k + 1] == optimal;
    const bool leader_on_time = scheduled[k] == lead || scheduled[k + 1] == lead;
    if (!optimal_on_time) ++(good ? report.optimal_late_well_behaved : report.optimal_late_other);
    if (!leader_on_time) ++(good ? report.leader_late_well_behaved : report.leader_late_other);
  }
  return report;
}

}  // namespace coopsched::rmab
