#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coopsched/core/types.hpp"
#include "coopsched/policy/policy.hpp"
#include "coopsched/rmab/population.hpp"
#include "coopsched/world/mobility.hpp"
#include "coopsched/world/perception.hpp"

namespace coopsched::harness {

enum class EnvKind { kSynthetic, kWorld, kTrace };

std::string_view to_string(EnvKind env);

/// Closed interval of log10 values sampled at `points` evenly spaced points.
struct LogRange {
  double lo = 0.0;
  double hi = 0.0;
  int points = 5;

  std::vector<double> values() const;
};

struct SweepGrid {
  std::vector<std::string> policies{"mass", "closest", "etc", "sw-ucb", "earliest-activated"};
  LogRange mass_beta{-0.9, 0.6, 5};
  LogRange sw_ucb_beta{-1.0, 1.0, 5};
  std::vector<int> sw_ucb_windows{5, 10, 20, 30, 40};
  LogRange earliest_beta{-1.0, 0.5, 5};
  std::vector<int> etc_epochs{2, 5, 10, 30, 101};
};

struct ExperimentConfig {
  EnvKind env = EnvKind::kSynthetic;
  std::filesystem::path trace_path;
  std::filesystem::path buildings_path;

  std::string policy = "mass";
  policy::PolicyParams params;

  Slot slots = 10000;
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path out_dir = "out";

  rmab::PopulationParams population;
  double g_max = 1.0;

  world::ManhattanParams mobility;
  world::WorldSettings world;
  std::array<double, 3> resource_bandwidths_hz{1.2e6, 6e6, 30e6};

  SweepGrid sweep;

  /// World settings with resource ratios derived from the bandwidths.
  world::WorldSettings world_settings() const;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Applies one `key = value`. Unknown keys and malformed values throw
/// std::invalid_argument naming the key.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Flat text format: one `key = value` per line, `#` starts a comment.
/// Errors carry the line number and the key.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Every key with its current value, in documentation order. Feeding the
/// output back through apply_setting reproduces the config.
std::vector<std::pair<std::string, std::string>> dump_config(const ExperimentConfig& cfg);

/// Parses "7" or "3..9" (inclusive).
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

}  // namespace coopsched::harness
