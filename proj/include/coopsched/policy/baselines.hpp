#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>

#include "coopsched/policy/mass.hpp"
#include "coopsched/policy/policy.hpp"

namespace coopsched::policy {

/// Distance-based baseline. Ignores all feedback.
class ClosestCovPolicy final : public SchedulingPolicy {
 public:
  std::string_view name() const override { return "closest"; }
  CovId select(CandidateSet candidates, Slot t) override;
  void observe(CovId, double, Slot) override {}
  std::unique_ptr<SchedulingPolicy> clone() const override;
};

/// Periodic explore-then-commit.
///
/// Epochs of `epoch_len` slots are aligned to the absolute slot index (slot 1
/// opens epoch 0). At each epoch start the current candidates are queued in id
/// order and explored once each; for the rest of the epoch the CoV with the
/// best gain observed in this epoch is committed to. A CoV never scheduled
/// before is explored immediately whenever it shows up.
class PeriodicEtcPolicy final : public SchedulingPolicy {
 public:
  enum class Phase { kExplore, kCommit };

  explicit PeriodicEtcPolicy(int epoch_len);

  std::string_view name() const override { return "etc"; }
  CovId select(CandidateSet candidates, Slot t) override;
  void observe(CovId scheduled, double gain, Slot t) override;
  std::unique_ptr<SchedulingPolicy> clone() const override;

  Phase phase() const noexcept { return phase_; }
  int epoch_len() const noexcept { return epoch_len_; }
  std::optional<std::pair<CovId, double>> best_empirical(CandidateSet candidates) const;

 private:
  int epoch_len_;
  Slot current_epoch_ = -1;
  Phase phase_ = Phase::kExplore;
  std::deque<CovId> explore_queue_;
  std::map<CovId, double> epoch_gains_;
  std::set<CovId> scheduled_ever_;
};

/// Sliding-window UCB over the last `window_len` slots.
///
/// Index of CoV i at slot t:
///   mean_i + beta * sqrt(log(min(t, L)) / N_i)
/// where mean_i and N_i are computed over observations in slots (t - L, t].
/// A candidate with N_i = 0 is played first (lowest id).
class SwUcbPolicy final : public SchedulingPolicy {
 public:
  struct Observation {
    Slot slot;
    CovId id;
    double gain;
  };

  SwUcbPolicy(int window_len, double beta);

  std::string_view name() const override { return "sw-ucb"; }
  CovId select(CandidateSet candidates, Slot t) override;
  void observe(CovId scheduled, double gain, Slot t) override;
  std::unique_ptr<SchedulingPolicy> clone() const override;

  const std::deque<Observation>& history() const noexcept { return history_; }

 private:
  void evict(Slot t);

  int window_len_;
  double beta_;
  std::deque<Observation> history_;
};

/// Earliest-activated scheduling for restless bandits.
///
/// The leader is the candidate with the largest last-seen gain. Any other
/// candidate whose UCB exceeds the leader's last-seen gain is activated (queued
/// once, in activation order) until it gets scheduled. Odd slots serve the
/// earliest activated candidate present; even slots exploit the leader.
class EarliestActivatedPolicy final : public SchedulingPolicy {
 public:
  struct Activation {
    CovId id;
    Slot slot;
  };

  explicit EarliestActivatedPolicy(double beta);

  std::string_view name() const override { return "earliest-activated"; }
  CovId select(CandidateSet candidates, Slot t) override;
  void observe(CovId scheduled, double gain, Slot t) override;
  std::unique_ptr<SchedulingPolicy> clone() const override;

  const std::deque<Activation>& activation_queue() const noexcept { return queue_; }
  std::optional<LastSeen> entry(CovId id) const;

  // Test hook: place an activation directly.
  void activate(CovId id, Slot t);

 private:
  void dequeue(CovId id);

  double beta_;
  std::map<CovId, LastSeen> last_seen_;
  std::deque<Activation> queue_;
};

}  // namespace coopsched::policy
