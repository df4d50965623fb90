#pragma once

#include <cstddef>
#include <cstdint>

#include "coopsched/core/types.hpp"

namespace coopsched::rmab {

struct WellBehavedFrequency {
  std::size_t windows = 0;
  std::size_t violations = 0;
  double frequency() const noexcept {
    return windows == 0 ? 0.0 : static_cast<double>(violations) / static_cast<double>(windows);
  }
};

/// Monte-Carlo estimate of P(instance not well-behaved near t).
///
/// Each window is an independent instance of `arms` stationary reflected walks
/// over 2/sigma^2 + 1 slots, tested with c_f = 3 sqrt(ln 1/sigma). Windows run
/// in parallel; the result does not depend on the thread count.
WellBehavedFrequency well_behaved_violation_frequency(double sigma, std::size_t windows,
                                                      std::uint64_t seed, std::size_t arms = 2);

struct SchedulingDeadlineReport {
  std::size_t slots_checked = 0;
  std::size_t well_behaved_slots = 0;
  /// Well-behaved slots where the slot-t optimal arm was not scheduled at t or t+1.
  std::size_t optimal_late_well_behaved = 0;
  /// Same for the slot-t leader.
  std::size_t leader_late_well_behaved = 0;
  std::size_t optimal_late_other = 0;
  std::size_t leader_late_other = 0;
};

/// Runs MASS with the given beta on two fixed arms for `slots` slots and checks
/// that the optimal arm and the leader of each slot t are scheduled no later
/// than t + 1. Only slots where both arms have been seen are checked.
SchedulingDeadlineReport check_scheduling_deadlines(double sigma, double beta, Slot slots,
                                                    std::uint64_t seed);

}  // namespace coopsched::rmab
