#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace coopsched::rmab {

// A path f is well-behaved on a window when
//   |f(t') - f(t'')| <= c_f * sqrt(|t' - t''|) * sigma
// for every pair of slots t', t'' inside it. An instance is well-behaved near
// t when every arm's path is well-behaved on [t - 1/sigma^2, t + 1/sigma^2]
// clipped to the trip.

/// Right-hand side of the predicate at a given lag.
inline double well_behaved_bound(double c_f, double sigma, std::int64_t lag);

/// Block-pruned check of one path. Exact: agrees with the all-pairs reference.
bool path_well_behaved(std::span<const double> path, double c_f, double sigma);

/// All-pairs O(n^2) check, kept as the reference for the pruned kernel.
bool path_well_behaved_reference(std::span<const double> path, double c_f, double sigma);

/// True iff every path is well-behaved.
bool well_behaved(std::span<const std::vector<double>> paths, double c_f, double sigma);
bool well_behaved_reference(std::span<const std::vector<double>> paths, double c_f, double sigma);

/// Half-width of the well-behavedness window, round(1 / sigma^2).
std::int64_t window_half_width(double sigma);

/// Answers "is [a, b] violation-free?" in O(1) for sub-windows of one long
/// path, after an O(n * max_lag) build.
class ViolationIndex {
 public:
  ViolationIndex(std::span<const double> path, double c_f, double sigma);

  /// Inclusive index range; clipped to the path.
  bool well_behaved_on(std::int64_t first, std::int64_t last) const;
  std::size_t size() const noexcept { return suffix_min_partner_.size(); }

 private:
  // Smallest partner index j > i with a violating pair (i', j), i' >= i.
  std::vector<std::int64_t> suffix_min_partner_;
};

inline double well_behaved_bound(double c_f, double sigma, std::int64_t lag) {
  return c_f * std::sqrt(static_cast<double>(lag)) * sigma;
}

}  // namespace coopsched::rmab
