#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coopsched/core/types.hpp"
#include "coopsched/harness/config.hpp"
#include "coopsched/harness/tape.hpp"
#include "coopsched/policy/policy.hpp"

namespace coopsched::harness {

/// Per-slot record. Empty-candidate slots have no scheduled CoV, zero gains
/// and zero regret. Recall fields are absent in the synthetic environment.
struct SlotMetrics {
  Slot slot = 0;
  std::size_t candidate_count = 0;
  std::optional<CovId> scheduled_cov;
  double observed_gain = 0.0;
  double optimal_gain = 0.0;
  double regret_increment = 0.0;
  std::optional<double> recall_standalone;
  std::optional<double> recall_cp;

  friend bool operator==(const SlotMetrics&, const SlotMetrics&) = default;
};

struct RunSummary {
  std::string policy;
  policy::PolicyParams params;
  std::uint64_t seed = 0;
  Slot slots = 0;
  double cumulative_regret = 0.0;
  double average_regret = 0.0;
  double mean_gain = 0.0;
  double mean_optimal_gain = 0.0;
  std::optional<double> mean_recall_standalone;
  std::optional<double> mean_recall_cp;

  friend bool operator==(const RunSummary& a, const RunSummary& b) {
    return a.policy == b.policy && a.params.beta == b.params.beta && a.params.epoch_len == b.params.epoch_len &&
           a.params.window_len == b.params.window_len && a.seed == b.seed && a.slots == b.slots &&
           a.cumulative_regret == b.cumulative_regret && a.average_regret == b.average_regret &&
           a.mean_gain == b.mean_gain && a.mean_optimal_gain == b.mean_optimal_gain &&
           a.mean_recall_standalone == b.mean_recall_standalone && a.mean_recall_cp == b.mean_recall_cp;
  }
};

struct RunResult {
  RunSummary summary;
  std::vector<SlotMetrics> slots;
};

/// Replays the tape: select, reveal only the scheduled gain, observe. The
/// oracle gains go to the regret ledger alone.
RunResult run_policy(const Tape& tape, policy::SchedulingPolicy& policy, std::uint64_t seed);

/// Schedules the per-slot argmax of the true gains.
RunResult run_oracle(const Tape& tape, std::uint64_t seed);

/// "oracle" or any name accepted by make_policy.
RunResult run_on_tape(const Tape& tape, std::string_view policy_name, const policy::PolicyParams& params,
                      std::uint64_t seed);

RunResult run_experiment(const ExperimentConfig& cfg, std::uint64_t seed);

}  // namespace coopsched::harness
