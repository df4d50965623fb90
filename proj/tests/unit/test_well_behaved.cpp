#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "coopsched/rmab/path_checks.hpp"
#include "coopsched/rmab/reflected_walk.hpp"
#include "coopsched/rmab/well_behaved.hpp"

using namespace coopsched;
using namespace coopsched::rmab;

namespace {
std::vector<double> walk(double sigma, std::size_t n, std::uint64_t seed) {
  GainProcess g(0.5, sigma, seed);
  std::vector<double> out{g.value()};
  while (out.size() < n) out.push_back(g.step());
  return out;
}
}  // namespace

TEST(WellBehaved, ConstantPathPasses) {
  const std::vector<double> path(500, 0.42);
  EXPECT_TRUE(path_well_behaved(path, 1.0, 0.05));
  EXPECT_TRUE(path_well_behaved_reference(path, 1.0, 0.05));
}

TEST(WellBehaved, UnitJumpFails) {
  std::vector<double> path(100, 0.0);
  for (std::size_t i = 50; i < path.size(); ++i) path[i] = 1.0;
  const double sigma = 0.05;
  const double c_f = well_behaved_constant(sigma);
  ASSERT_LT(c_f * sigma, 1.0);
  EXPECT_FALSE(path_well_behaved(path, c_f, sigma));
  EXPECT_FALSE(path_well_behaved_reference(path, c_f, sigma));
}

TEST(WellBehaved, PrunedKernelMatchesReference) {
  Rng rng(4);
  std::uniform_real_distribution<double> cf(0.5, 6.0);
  int disagreements = 0;
  int violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const double sigma = trial % 2 ? 0.05 : 0.1;
    const auto path = walk(sigma * 0.5, 50 + static_cast<std::size_t>(trial * 3), 1000 + trial);
    const double c = cf(rng);
    const bool ref = path_well_behaved_reference(path, c, sigma);
    violations += ref ? 0 : 1;
    if (path_well_behaved(path, c, sigma) != ref) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
  EXPECT_GT(violations, 10);
  EXPECT_LT(violations, 290);
}

TEST(WellBehaved, MultiArm) {
  const std::vector<std::vector<double>> ok{std::vector<double>(30, 0.1), std::vector<double>(30, 0.9)};
  EXPECT_TRUE(well_behaved(ok, 1.0, 0.1));
  auto bad = ok;
  bad[1][15] = 0.0;
  EXPECT_FALSE(well_behaved(bad, 1.0, 0.1));
  EXPECT_FALSE(well_behaved_reference(bad, 1.0, 0.1));
}

TEST(WellBehaved, WindowHalfWidth) {
  EXPECT_EQ(window_half_width(0.05), 400);
  EXPECT_EQ(window_half_width(0.1), 100);
}

TEST(ViolationIndex, MatchesDirectWindowChecks) {
  const double sigma = 0.1;
  const double c_f = 1.2;
  const auto path = walk(sigma, 600, 77);
  const ViolationIndex idx(path, c_f, sigma);
  Rng rng(2);
  std::uniform_int_distribution<std::int64_t> pos(0, 599);
  for (int q = 0; q < 400; ++q) {
    std::int64_t a = pos(rng);
    std::int64_t b = pos(rng);
    if (a > b) std::swap(a, b);
    const std::span<const double> seg(path.data() + a, static_cast<std::size_t>(b - a + 1));
    ASSERT_EQ(idx.well_behaved_on(a, b), path_well_behaved_reference(seg, c_f, sigma)) << a << ".." << b;
  }
}

TEST(PathChecks, ViolationFrequencyIsThreadIndependentAndSmall) {
  const auto a = well_behaved_violation_frequency(0.1, 400, 5);
  const auto b = well_behaved_violation_frequency(0.1, 400, 5);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.windows, 400u);
  EXPECT_LT(a.frequency(), 0.1);
}

TEST(PathChecks, DeadlineReportCountsSlots) {
  const double sigma = 0.05;
  const auto r = check_scheduling_deadlines(sigma, 5.0 * well_behaved_constant(sigma) * sigma, 2000, 3);
  EXPECT_GT(r.slots_checked, 1900u);
  EXPECT_LE(r.well_behaved_slots, r.slots_checked);
  EXPECT_EQ(r.optimal_late_well_behaved, 0u);
  EXPECT_EQ(r.leader_late_well_behaved, 0u);
}
