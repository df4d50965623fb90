#pragma once

#include <span>

namespace coopsched::harness {

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1); 0 for fewer than two values.
double stddev(std::span<const double> xs);

struct PairedTest {
  double mean_diff = 0.0;
  double t_stat = 0.0;
  double df = 0.0;
  /// One-sided p-value for H1: mean(a - b) < 0.
  double p_value = 1.0;
};

/// Paired Student t-test on a[i] - b[i]. Throws std::invalid_argument for
/// mismatched lengths or fewer than two pairs.
PairedTest paired_t_test_less(std::span<const double> a, std::span<const double> b);

}  // namespace coopsched::harness
