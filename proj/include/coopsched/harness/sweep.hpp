#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coopsched/harness/config.hpp"
#include "coopsched/harness/runner.hpp"
#include "coopsched/harness/tape.hpp"

namespace coopsched::harness {

struct ParamPoint {
  std::string policy;
  policy::PolicyParams params;
};

/// Expands the sweep grid of every listed policy. Closest and oracle have a
/// single point; other policies vary only the parameters they use.
std::vector<ParamPoint> sweep_points(const ExperimentConfig& cfg);

struct SweepRow {
  ParamPoint point;
  std::vector<double> regret;  // per seed, average regret
  std::vector<double> gain;    // per seed, mean gain
  std::vector<double> recall;  // per seed, mean CP recall (empty without recall)
  double mean_regret = 0.0;
  double std_regret = 0.0;
  double mean_gain = 0.0;
  double std_gain = 0.0;
  double mean_recall = 0.0;
  bool best = false;
};

struct SweepResult {
  std::vector<std::uint64_t> seeds;
  std::vector<SweepRow> rows;
  /// Row index of the lowest mean regret per policy.
  std::map<std::string, std::size_t> best;
};

/// Runs every point on every tape. The parallel path farms (point, seed)
/// jobs to OpenMP threads; results are merged by index, so both paths give
/// identical output.
SweepResult run_sweep(const std::vector<Tape>& tapes, const std::vector<std::uint64_t>& seeds,
                      const std::vector<ParamPoint>& points, bool parallel = true);

SweepResult sweep(const ExperimentConfig& cfg);

}  // namespace coopsched::harness
