#include "coopsched/policy/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace coopsched::policy {

// ---------------------------------------------------------------- closest

CovId ClosestCovPolicy::select(CandidateSet candidates, Slot) {
  return closest_select(candidates);
}

std::unique_ptr<SchedulingPolicy> ClosestCovPolicy::clone() const {
  return std::make_unique<ClosestCovPolicy>(*this);
}

// ---------------------------------------------------------------- periodic ETC

PeriodicEtcPolicy::PeriodicEtcPolicy(int epoch_len) : epoch_len_(epoch_len) {
  if (epoch_len < 2) throw std::invalid_argument("etc: epoch_len must be >= 2");
}

std::optional<std::pair<CovId, double>> PeriodicEtcPolicy::best_empirical(
    CandidateSet candidates) const {
  std::optional<std::pair<CovId, double>> best;
  for (const auto& c : candidates) {
    auto it = epoch_gains_.find(c.id);
    if (it == epoch_gains_.end()) continue;
    if (!best || it->second > best->second ||
        (it->second == best->second && c.id < best->first)) {
      best = std::pair{c.id, it->second};
    }
  }
  return best;
}

CovId PeriodicEtcPolicy::select(CandidateSet candidates, Slot t) {
  detail::require_nonempty(candidates);
  if (t < 1) throw std::invalid_argument("etc: slots start at 1");

  const Slot epoch = (t - 1) / epoch_len_;
  if (epoch != current_epoch_) {
    current_epoch_ = epoch;
    epoch_gains_.clear();
    explore_queue_.clear();
    std::vector<CovId> ids;
    ids.reserve(candidates.size());
    for (const auto& c : candidates) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    explore_queue_.assign(ids.begin(), ids.end());
    phase_ = Phase::kExplore;
  }

  std::optional<CovId> fresh;
  for (const auto& c : candidates) {
    if (!scheduled_ever_.contains(c.id) && (!fresh || c.id < *fresh)) fresh = c.id;
  }
  if (fresh) {
    std::erase(explore_queue_, *fresh);
    return *fresh;
  }

  while (!explore_queue_.empty()) {
    const CovId head = explore_queue_.front();
    explore_queue_.pop_front();
    if (detail::contains(candidates, head)) return head;
  }
  phase_ = Phase::kCommit;

  if (auto best = best_empirical(candidates)) return best->first;
  CovId lowest = candidates.front().id;
  for (const auto& c : candidates) lowest = std::min(lowest, c.id);
  return lowest;
}

void PeriodicEtcPolicy::observe(CovId scheduled, double gain, Slot) {
  // Commit-phase feedback does not move the committed choice.
  if (phase_ == Phase::kExplore || !epoch_gains_.contains(scheduled)) epoch_gains_[scheduled] = gain;
  scheduled_ever_.insert(scheduled);
}

std::unique_ptr<SchedulingPolicy> PeriodicEtcPolicy::clone() const {
  return std::make_unique<PeriodicEtcPolicy>(*this);
}

// ---------------------------------------------------------------- SW-UCB

SwUcbPolicy::SwUcbPolicy(int window_len, double beta) : window_len_(window_len), beta_(beta) {
  if (window_len < 1) throw std::invalid_argument("sw-ucb: window_len must be >= 1");
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("sw-ucb: beta must be non-negative and finite");
  }
}

void SwUcbPolicy::evict(Slot t) {
  while (!history_.empty() && history_.front().slot <= t - window_len_) history_.pop_front();
}

CovId SwUcbPolicy::select(CandidateSet candidates, Slot t) {
  detail::require_nonempty(candidates);
  evict(t);

  struct Tally {
    double sum = 0.0;
    int count = 0;
  };
  std::map<CovId, Tally> tallies;
  for (const auto& obs : history_) {
    auto& tally = tallies[obs.id];
    tally.sum += obs.gain;
    ++tally.count;
  }

  std::optional<CovId> unseen;
  for (const auto& c : candidates) {
    auto it = tallies.find(c.id);
    if ((it == tallies.end() || it->second.count == 0) && (!unseen || c.id < *unseen)) {
      unseen = c.id;
    }
  }
  if (unseen) return *unseen;

  const double log_horizon =
      std::log(static_cast<double>(std::min<Slot>(std::max<Slot>(t, 1), window_len_)));
  CovId best = candidates.front().id;
  double best_index = -std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    const auto& tally = tallies.at(c.id);
    const double n = tally.count;
    const double index = tally.sum / n + beta_ * std::sqrt(log_horizon / n);
    if (index > best_index || (index == best_index && c.id < best)) {
      best = c.id;
      best_index = index;
    }
  }
  return best;
}

void SwUcbPolicy::observe(CovId scheduled, double gain, Slot t) {
  history_.push_back(Observation{t, scheduled, gain});
  evict(t);
}

std::unique_ptr<SchedulingPolicy> SwUcbPolicy::clone() const {
  return std::make_unique<SwUcbPolicy>(*this);
}

// ---------------------------------------------------------------- earliest activated

EarliestActivatedPolicy::EarliestActivatedPolicy(double beta) : beta_(beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("earliest-activated: beta must be positive and finite");
  }
}

std::optional<LastSeen> EarliestActivatedPolicy::entry(CovId id) const {
  auto it = last_seen_.find(id);
  if (it == last_seen_.end()) return std::nullopt;
  return it->second;
}

void EarliestActivatedPolicy::activate(CovId id, Slot t) {
  const bool queued = std::any_of(queue_.begin(), queue_.end(),
                                  [id](const Activation& a) { return a.id == id; });
  if (!queued) queue_.push_back(Activation{id, t});
}

void EarliestActivatedPolicy::dequeue(CovId id) {
  std::erase_if(queue_, [id](const Activation& a) { return a.id == id; });
}

CovId EarliestActivatedPolicy::select(CandidateSet candidates, Slot t) {
  detail::require_nonempty(candidates);

  std::optional<CovId> fresh;
  for (const auto& c : candidates) {
    if (!last_seen_.contains(c.id) && (!fresh || c.id < *fresh)) fresh = c.id;
  }
  if (fresh) {
    dequeue(*fresh);
    return *fresh;
  }

  std::vector<CovId> ids;
  ids.reserve(candidates.size());
  for (const auto& c : candidates) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());

  CovId leader = ids.front();
  double leader_gain = last_seen_.at(leader).gain;
  for (CovId id : ids) {
    const double g = last_seen_.at(id).gain;
    if (g > leader_gain) {
      leader = id;
      leader_gain = g;
    }
  }

  for (CovId id : ids) {
    if (id == leader) continue;
    const auto& seen = last_seen_.at(id);
    const double ucb = seen.gain + beta_ * std::sqrt(static_cast<double>(std::max<Slot>(0, t - seen.slot)));
    if (ucb > leader_gain) activate(id, t);
  }

  CovId chosen = leader;
  if (t % 2 != 0) {
    for (const auto& a : queue_) {
      if (detail::contains(candidates, a.id)) {
        chosen = a.id;
        break;
      }
    }
  }
  dequeue(chosen);
  return chosen;
}

void EarliestActivatedPolicy::observe(CovId scheduled, double gain, Slot t) {
  last_seen_[scheduled] = LastSeen{gain, t};
}

std::unique_ptr<SchedulingPolicy> EarliestActivatedPolicy::clone() const {
  return std::make_unique<EarliestActivatedPolicy>(*this);
}

}  // namespace coopsched::policy
