#include "coopsched/policy/policy.hpp"

#include <algorithm>
#include <stdexcept>

#include "coopsched/policy/baselines.hpp"
#include "coopsched/policy/mass.hpp"

namespace coopsched::policy {

namespace detail {

void require_nonempty(CandidateSet candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
}

bool contains(CandidateSet candidates, CovId id) {
  return std::any_of(candidates.begin(), candidates.end(),
                     [id](const CandidateView& c) { return c.id == id; });
}

}  // namespace detail

CovId closest_select(CandidateSet candidates) {
  detail::require_nonempty(candidates);
  const CandidateView* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.distance_m < best->distance_m || (c.distance_m == best->distance_m && c.id < best->id)) {
      best = &c;
    }
  }
  return best->id;
}

std::unique_ptr<SchedulingPolicy> make_policy(std::string_view name, const PolicyParams& params) {
  if (name == "mass") return std::make_unique<MassPolicy>(params.beta);
  if (name == "closest") return std::make_unique<ClosestCovPolicy>();
  if (name == "etc") return std::make_unique<PeriodicEtcPolicy>(params.epoch_len);
  if (name == "sw-ucb") return std::make_unique<SwUcbPolicy>(params.window_len, params.beta);
  if (name == "earliest-activated") return std::make_unique<EarliestActivatedPolicy>(params.beta);
  throw std::invalid_argument("unknown policy: " + std::string(name));
}

}  // namespace coopsched::policy
