#pragma once

#include <cstdint>
#include <vector>

#include "coopsched/core/types.hpp"
#include "coopsched/harness/config.hpp"
#include "coopsched/rmab/population.hpp"
#include "coopsched/world/frame.hpp"
#include "coopsched/world/perception.hpp"

namespace coopsched::harness {

/// One slot of environment state as seen by the ledger: the candidate set
/// plus the gain (and CP recall) each candidate would deliver.
struct TapeSlot {
  Slot slot = 0;
  std::vector<CandidateView> candidates;
  std::vector<double> gains;
  std::vector<double> recall_cp;
  double recall_standalone = 1.0;
};

/// Policy-independent record of one environment run. Every policy replayed
/// on the same tape faces the same candidates and the same gains.
struct Tape {
  bool has_recall = false;
  std::vector<TapeSlot> slots;
};

/// Synthetic RMAB: candidates are the active arms (distance 0), gains their
/// normalised walk values after each step.
Tape synthetic_tape(const rmab::PopulationParams& params, double g_max, Slot slots, std::uint64_t seed);

Tape world_tape(const world::Trace& trace, const world::WorldSettings& settings, std::uint64_t seed,
                bool reference_scanner = false);

/// Builds the environment named by the config for one seed. For env=world
/// the mobility seed is the run seed.
Tape make_tape(const ExperimentConfig& cfg, std::uint64_t seed);

/// One tape per seed, built in parallel.
std::vector<Tape> make_tapes(const ExperimentConfig& cfg, const std::vector<std::uint64_t>& seeds);

}  // namespace coopsched::harness
