#pragma once

#include <map>
#include <optional>

#include "coopsched/policy/policy.hpp"

namespace coopsched::policy {

struct LastSeen {
  double gain = 0.0;
  Slot slot = 0;
};

/// Mobility-aware sensor scheduling.
///
/// Keeps only the last-seen gain and last-seen slot of each CoV. A CoV that
/// has never been scheduled is explored first (lowest id when several are
/// new). Otherwise the CoV maximising
///
///     last_seen_gain + beta * sqrt(t - last_seen_slot)
///
/// is scheduled, ties to the lowest id. The padding grows with idle time, so
/// stale CoVs are revisited even when their last gain was poor.
///
/// A CoV that leaves the candidate set and later returns keeps its entry.
class MassPolicy final : public SchedulingPolicy {
 public:
  explicit MassPolicy(double beta);

  std::string_view name() const override { return "mass"; }
  CovId select(CandidateSet candidates, Slot t) override;
  void observe(CovId scheduled, double gain, Slot t) override;
  std::unique_ptr<SchedulingPolicy> clone() const override;

  double beta() const noexcept { return beta_; }
  double upper_confidence_bound(CovId id, Slot t) const;
  std::optional<LastSeen> entry(CovId id) const;
  const std::map<CovId, LastSeen>& entries() const noexcept { return last_seen_; }

 private:
  double beta_;
  std::map<CovId, LastSeen> last_seen_;
};

}  // namespace coopsched::policy
