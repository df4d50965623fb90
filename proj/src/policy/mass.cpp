#include "coopsched/policy/mass.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coopsched::policy {

MassPolicy::MassPolicy(double beta) : beta_(beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("mass: beta must be positive and finite");
  }
}

double MassPolicy::upper_confidence_bound(CovId id, Slot t) const {
  auto it = last_seen_.find(id);
  if (it == last_seen_.end()) return std::numeric_limits<double>::infinity();
  const auto idle = static_cast<double>(t - it->second.slot);
  return it->second.gain + beta_ * std::sqrt(std::max(0.0, idle));
}

CovId MassPolicy::select(CandidateSet candidates, Slot t) {
  detail::require_nonempty(candidates);

  std::optional<CovId> fresh;
  for (const auto& c : candidates) {
    if (!last_seen_.contains(c.id) && (!fresh || c.id < *fresh)) fresh = c.id;
  }
  if (fresh) return *fresh;

  CovId best = candidates.front().id;
  double best_ucb = -std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    const double ucb = upper_confidence_bound(c.id, t);
    if (ucb > best_ucb || (ucb == best_ucb && c.id < best)) {
      best = c.id;
      best_ucb = ucb;
    }
  }
  return best;
}

void MassPolicy::observe(CovId scheduled, double gain, Slot t) {
  last_seen_[scheduled] = LastSeen{gain, t};
}

std::unique_ptr<SchedulingPolicy> MassPolicy::clone() const {
  return std::make_unique<MassPolicy>(*this);
}

std::optional<LastSeen> MassPolicy::entry(CovId id) const {
  auto it = last_seen_.find(id);
  if (it == last_seen_.end()) return std::nullopt;
  return it->second;
}

}  // namespace coopsched::policy
