#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coopsched/harness/config.hpp"
#include "coopsched/harness/runner.hpp"
#include "coopsched/harness/sweep.hpp"

namespace coopsched::harness {

inline constexpr const char* kSlotCsvHeader =
    "slot,candidate_count,scheduled_cov,observed_gain,optimal_gain,regret_increment,recall_standalone,recall_cp";
inline constexpr const char* kSweepCsvHeader =
    "policy,beta,epoch_len,window_len,mean_regret,std_regret,mean_gain,std_gain,mean_recall,is_best";

/// Empty fields mark an absent scheduled CoV or recall.
void write_slot_csv(std::ostream& out, std::span<const SlotMetrics> slots);
std::vector<SlotMetrics> read_slot_csv(std::istream& in);

inline constexpr const char* kGainCsvHeader = "slot,cov_id,gain";

/// Full gain matrix of a tape, one row per (slot, candidate).
void write_gain_matrix_csv(std::ostream& out, const Tape& tape);

/// Parameters a policy does not use are left empty.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

struct Summary {
  std::string code_version;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::uint64_t> seeds;
  std::vector<RunSummary> runs;
  double mean_average_regret = 0.0;
  double mean_gain = 0.0;
  std::optional<double> mean_recall_cp;

  friend bool operator==(const Summary&, const Summary&) = default;
};

Summary make_summary(const ExperimentConfig& cfg, std::span<const RunResult> runs);

std::string summary_to_json(const Summary& s);
Summary summary_from_json(const std::string& text);
Summary read_summary(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames it into place, so a failure
/// never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// `slots_seed<N>.csv` per run plus `summary.json`. Throws on empty results
/// before touching the file system.
void write_run_outputs(const std::filesystem::path& dir, const ExperimentConfig& cfg,
                       std::span<const RunResult> runs);

/// `sweep.csv` plus `sweep_summary.json` with the best point per policy.
void write_sweep_outputs(const std::filesystem::path& dir, const ExperimentConfig& cfg, const SweepResult& result);

/// Plain-text table of a summary, one line per run plus the aggregate.
std::string render_summary(const Summary& s);

}  // namespace coopsched::harness
