#include "coopsched/rmab/well_behaved.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace coopsched::rmab {

namespace {

// Sparse table for O(1) range min/max.
class RangeMinMax {
 public:
  explicit RangeMinMax(std::span<const double> values) {
    const std::size_t n = values.size();
    mins_.emplace_back(values.begin(), values.end());
    maxs_.emplace_back(values.begin(), values.end());
    for (std::size_t width = 2; width <= n; width *= 2) {
      const auto& pmin = mins_.back();
      const auto& pmax = maxs_.back();
      const std::size_t half = width / 2;
      std::vector<double> lo(n - width + 1), hi(n - width + 1);
      for (std::size_t i = 0; i + width <= n; ++i) {
        lo[i] = std::min(pmin[i], pmin[i + half]);
        hi[i] = std::max(pmax[i], pmax[i + half]);
      }
      mins_.push_back(std::move(lo));
      maxs_.push_back(std::move(hi));
    }
  }

  // Inclusive [first, last].
  std::pair<double, double> query(std::size_t first, std::size_t last) const {
    const std::size_t len = last - first + 1;
    const auto level = static_cast<std::size_t>(std::bit_width(len) - 1);
    const std::size_t width = std::size_t{1} << level;
    return {std::min(mins_[level][first], mins_[level][last + 1 - width]),
            std::max(maxs_[level][first], maxs_[level][last + 1 - width])};
  }

 private:
  std::vector<std::vector<double>> mins_;
  std::vector<std::vector<double>> maxs_;
};

// Lags at or beyond this cannot violate: |f(t') - f(t'')| never exceeds the
// path's range.
std::int64_t max_relevant_lag(std::span<const double> path, double c_f, double sigma) {
  const auto n = static_cast<std::int64_t>(path.size());
  if (n < 2) return 0;
  const auto [lo, hi] = std::minmax_element(path.begin(), path.end());
  const double range = *hi - *lo;
  std::int64_t lag = 0;
  while (lag + 1 <= n - 1 && well_behaved_bound(c_f, sigma, lag + 1) < range) ++lag;
  return lag;
}

// Smallest violating lag for pairs starting at i, or 0.
std::int64_t first_violation_lag(std::span<const double> path, const RangeMinMax& table,
                                 std::int64_t i, std::int64_t max_lag, double c_f, double sigma) {
  const auto n = static_cast<std::int64_t>(path.size());
  const double base = path[static_cast<std::size_t>(i)];
  for (std::int64_t lo = 1; lo <= max_lag; lo *= 2) {
    const std::int64_t hi = std::min({2 * lo - 1, max_lag, n - 1 - i});
    if (lo > hi) break;
    const auto [mn, mx] = table.query(static_cast<std::size_t>(i + lo), static_cast<std::size_t>(i + hi));
    // the bound grows with lag, so the block's smallest bound covers all of it
    if (std::max(mx - base, base - mn) <= well_behaved_bound(c_f, sigma, lo)) continue;
    for (std::int64_t lag = lo; lag <= hi; ++lag) {
      if (std::fabs(path[static_cast<std::size_t>(i + lag)] - base) > well_behaved_bound(c_f, sigma, lag)) {
        return lag;
      }
    }
  }
  return 0;
}

}  // namespace

bool path_well_behaved(std::span<const double> path, double c_f, double sigma) {
  const auto n = static_cast<std::int64_t>(path.size());
  const std::int64_t max_lag = max_relevant_lag(path, c_f, sigma);
  if (max_lag == 0) return true;
  const RangeMinMax table(path);
  for (std::int64_t i = 0; i + 1 < n; ++i) {
    if (first_violation_lag(path, table, i, max_lag, c_f, sigma) != 0) return false;
  }
  return true;
}

bool path_well_behaved_reference(std::span<const double> path, double c_f, double sigma) {
  const auto n = static_cast<std::int64_t>(path.size());
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const double diff = std::fabs(path[static_cast<std::size_t>(j)] - path[static_cast<std::size_t>(i)]);
      if (diff > well_behaved_bound(c_f, sigma, j - i)) return false;
    }
  }
  return true;
}

bool well_behaved(std::span<const std::vector<double>> paths, double c_f, double sigma) {
  return std::all_of(paths.begin(), paths.end(),
                     [&](const auto& p) { return path_well_behaved(p, c_f, sigma); });
}

bool well_behaved_reference(std::span<const std::vector<double>> paths, double c_f, double sigma) {
  return std::all_of(paths.begin(), paths.end(),
                     [&](const auto& p) { return path_well_behaved_reference(p, c_f, sigma); });
}

std::int64_t window_half_width(double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
  return std::llround(1.0 / (sigma * sigma));
}

ViolationIndex::ViolationIndex(std::span<const double> path, double c_f, double sigma) {
  const auto n = static_cast<std::int64_t>(path.size());
  constexpr auto kNone = std::numeric_limits<std::int64_t>::max();
  suffix_min_partner_.assign(path.size(), kNone);
  const std::int64_t max_lag = max_relevant_lag(path, c_f, sigma);
  if (max_lag == 0) return;
  const RangeMinMax table(path);
  std::int64_t running = kNone;
  for (std::int64_t i = n - 1; i >= 0; --i) {
    const std::int64_t lag = first_violation_lag(path, table, i, max_lag, c_f, sigma);
    if (lag != 0) running = std::min(running, i + lag);
    suffix_min_partner_[static_cast<std::size_t>(i)] = running;
  }
}

bool ViolationIndex::well_behaved_on(std::int64_t first, std::int64_t last) const {
  const auto n = static_cast<std::int64_t>(suffix_min_partner_.size());
  first = std::max<std::int64_t>(first, 0);
  last = std::min(last, n - 1);
  if (first >= last) return true;
  return suffix_min_partner_[static_cast<std::size_t>(first)] > last;
}

}  // namespace coopsched::rmab
