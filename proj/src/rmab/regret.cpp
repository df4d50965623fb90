#include "coopsched/rmab/regret.hpp"

#include <stdexcept>
#include <string>

namespace coopsched::rmab {

OfflineOptimum offline_optimal(std::span<const SlotGains> slots) {
  OfflineOptimum out;
  out.arms.reserve(slots.size());
  out.gains.reserve(slots.size());
  for (std::size_t t = 0; t < slots.size(); ++t) {
    const auto& gains = slots[t].gains;
    if (gains.empty()) {
      throw std::invalid_argument("offline_optimal: slot " + std::to_string(t) + " has no candidates");
    }
    auto best = gains.front();
    for (const auto& [id, g] : gains) {
      if (g > best.second || (g == best.second && id < best.first)) best = {id, g};
    }
    out.arms.push_back(best.first);
    out.gains.push_back(best.second);
  }
  return out;
}

double RegretLedger::add(double optimal_gain, double achieved_gain) {
  const double increment = optimal_gain - achieved_gain;
  if (increment < 0.0) {
    throw std::logic_error("regret ledger: achieved gain " + std::to_string(achieved_gain) +
                           " exceeds the offline optimum " + std::to_string(optimal_gain));
  }
  increments_.push_back(increment);
  optimal_.push_back(optimal_gain);
  achieved_.push_back(achieved_gain);
  cumulative_ += increment;
  return increment;
}

double RegretLedger::average() const noexcept {
  return increments_.empty() ? 0.0 : cumulative_ / static_cast<double>(increments_.size());
}

}  // namespace coopsched::rmab
