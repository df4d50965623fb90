#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "coopsched/core/types.hpp"

namespace coopsched::policy {

/// Online scheduler choosing one candidate CoV per slot.
///
/// A policy only ever sees the candidate views handed to `select` and the
/// gain of the CoV it scheduled, delivered through `observe`. Policies are
/// plain values: no shared state, safe to move across threads.
class SchedulingPolicy {
 public:
  virtual ~SchedulingPolicy() = default;

  virtual std::string_view name() const = 0;

  /// Returns a member of `candidates`. Throws std::invalid_argument on an
  /// empty set.
  virtual CovId select(CandidateSet candidates, Slot t) = 0;

  /// Feedback for the CoV returned by the preceding `select` at slot `t`.
  virtual void observe(CovId scheduled, double gain, Slot t) = 0;

  virtual std::unique_ptr<SchedulingPolicy> clone() const = 0;
};

struct PolicyParams {
  double beta = 0.6;
  int epoch_len = 10;
  int window_len = 20;
};

/// Names accepted by `make_policy`.
inline constexpr std::string_view kPolicyNames[] = {"mass", "closest", "etc", "sw-ucb",
                                                    "earliest-activated"};

/// Throws std::invalid_argument for an unknown name or out-of-domain params.
std::unique_ptr<SchedulingPolicy> make_policy(std::string_view name, const PolicyParams& params);

/// Closest CoV: smallest distance, ties to the lowest id.
CovId closest_select(CandidateSet candidates);

namespace detail {
void require_nonempty(CandidateSet candidates);
bool contains(CandidateSet candidates, CovId id);
}  // namespace detail

}  // namespace coopsched::policy
