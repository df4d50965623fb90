#pragma once

#include <span>
#include <utility>
#include <vector>

#include "coopsched/core/types.hpp"

namespace coopsched::rmab {

/// Gains of every candidate present in one slot.
struct SlotGains {
  std::vector<std::pair<CovId, double>> gains;
};

struct OfflineOptimum {
  std::vector<CovId> arms;
  std::vector<double> gains;
};

/// Per-slot argmax of the true gains, ties to the lowest id. Throws
/// std::invalid_argument when a slot has no candidates.
OfflineOptimum offline_optimal(std::span<const SlotGains> slots);

/// Running regret against the offline optimum.
class RegretLedger {
 public:
  /// Adds G*(t) - G_a(t). A negative increment means the optimum was computed
  /// wrongly and raises std::logic_error.
  double add(double optimal_gain, double achieved_gain);

  double cumulative() const noexcept { return cumulative_; }
  /// R(T) / T, and 0 for an empty ledger.
  double average() const noexcept;
  std::size_t slots() const noexcept { return increments_.size(); }
  const std::vector<double>& increments() const noexcept { return increments_; }
  const std::vector<double>& optimal() const noexcept { return optimal_; }
  const std::vector<double>& achieved() const noexcept { return achieved_; }

 private:
  double cumulative_ = 0.0;
  std::vector<double> increments_;
  std::vector<double> optimal_;
  std::vector<double> achieved_;
};

}  // namespace coopsched::rmab
