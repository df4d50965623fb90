#include "coopsched/harness/runner.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "coopsched/rmab/regret.hpp"

namespace coopsched::harness {

namespace {

std::size_t index_of(const TapeSlot& s, CovId id) {
  for (std::size_t i = 0; i < s.candidates.size(); ++i) {
    if (s.candidates[i].id == id) return i;
  }
  throw std::logic_error("policy returned a CoV outside the candidate set");
}

// Argmax of the true gains, ties to the lowest id.
std::size_t best_index(const TapeSlot& s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.gains.size(); ++i) {
    if (s.gains[i] > s.gains[best] ||
        (s.gains[i] == s.gains[best] && raw(s.candidates[i].id) < raw(s.candidates[best].id))) {
      best = i;
    }
  }
  return best;
}

RunResult replay(const Tape& tape, std::string policy_name, const policy::PolicyParams& params,
                 std::uint64_t seed, const std::function<std::size_t(const TapeSlot&)>& choose,
                 const std::function<void(CovId, double, Slot)>& feedback) {
  RunResult r;
  r.slots.reserve(tape.slots.size());
  rmab::RegretLedger ledger;
  double gain_sum = 0.0;
  double sa_sum = 0.0;
  double cp_sum = 0.0;
  for (const auto& s : tape.slots) {
    SlotMetrics m;
    m.slot = s.slot;
    m.candidate_count = s.candidates.size();
    double recall_cp = s.recall_standalone;
    if (!s.candidates.empty()) {
      const std::size_t k = choose(s);
      m.scheduled_cov = s.candidates[k].id;
      m.observed_gain = s.gains[k];
      m.optimal_gain = s.gains[best_index(s)];
      recall_cp = tape.has_recall ? s.recall_cp[k] : recall_cp;
      feedback(s.candidates[k].id, m.observed_gain, s.slot);
    }
    m.regret_increment = ledger.add(m.optimal_gain, m.observed_gain);
    gain_sum += m.observed_gain;
    if (tape.has_recall) {
      m.recall_standalone = s.recall_standalone;
      m.recall_cp = recall_cp;
      sa_sum += s.recall_standalone;
      cp_sum += recall_cp;
    }
    r.slots.push_back(m);
  }
  const double n = static_cast<double>(tape.slots.size());
  auto& sum = r.summary;
  sum.policy = std::move(policy_name);
  sum.params = params;
  sum.seed = seed;
  sum.slots = static_cast<Slot>(tape.slots.size());
  sum.cumulative_regret = ledger.cumulative();
  sum.average_regret = ledger.average();
  sum.mean_gain = n > 0 ? gain_sum / n : 0.0;
  double opt_sum = 0.0;
  for (double g : ledger.optimal()) opt_sum += g;
  sum.mean_optimal_gain = n > 0 ? opt_sum / n : 0.0;
  if (tape.has_recall && n > 0) {
    sum.mean_recall_standalone = sa_sum / n;
    sum.mean_recall_cp = cp_sum / n;
  }
  return r;
}

}  // namespace

RunResult run_policy(const Tape& tape, policy::SchedulingPolicy& policy, std::uint64_t seed) {
  return replay(
      tape, std::string(policy.name()), {}, seed,
      [&](const TapeSlot& s) { return index_of(s, policy.select(s.candidates, s.slot)); },
      [&](CovId id, double g, Slot t) { policy.observe(id, g, t); });
}

RunResult run_oracle(const Tape& tape, std::uint64_t seed) {
  return replay(tape, "oracle", {}, seed, best_index, [](CovId, double, Slot) {});
}

RunResult run_on_tape(const Tape& tape, std::string_view policy_name, const policy::PolicyParams& params,
                      std::uint64_t seed) {
  if (policy_name == "oracle") {
    auto r = run_oracle(tape, seed);
    r.summary.params = params;
    return r;
  }
  auto p = policy::make_policy(policy_name, params);
  auto r = run_policy(tape, *p, seed);
  r.summary.policy = std::string(policy_name);
  r.summary.params = params;
  return r;
}

RunResult run_experiment(const ExperimentConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const Tape tape = make_tape(cfg, seed);
  return run_on_tape(tape, cfg.policy, cfg.params, seed);
}

}  // namespace coopsched::harness
