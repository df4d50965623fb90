#include "coopsched/harness/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace coopsched::harness {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

PairedTest paired_t_test_less(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("paired test needs equal-length samples");
  if (a.size() < 2) throw std::invalid_argument("paired test needs at least two pairs");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  PairedTest r;
  r.mean_diff = mean(d);
  r.df = static_cast<double>(d.size() - 1);
  const double se = stddev(d) / std::sqrt(static_cast<double>(d.size()));
  if (se == 0.0) {
    r.t_stat = r.mean_diff < 0.0 ? -INFINITY : (r.mean_diff > 0.0 ? INFINITY : 0.0);
    r.p_value = r.mean_diff < 0.0 ? 0.0 : 1.0;
    return r;
  }
  r.t_stat = r.mean_diff / se;
  const boost::math::students_t dist(r.df);
  r.p_value = boost::math::cdf(dist, r.t_stat);
  return r;
}

}  // namespace coopsched::harness
