#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "coopsched/policy/mass.hpp"

using namespace coopsched;
using policy::MassPolicy;

namespace {
std::vector<CandidateView> ids(std::initializer_list<std::uint32_t> xs, Slot t) {
  std::vector<CandidateView> out;
  for (auto x : xs) out.push_back({cov(x), 10.0, t});
  return out;
}
}  // namespace

TEST(Mass, SelectsLargestUpperConfidenceBound) {
  MassPolicy p(0.6);
  p.observe(cov(1), 0.3, 5);
  p.observe(cov(2), 0.6, 9);
  const auto c = ids({1, 2}, 10);
  EXPECT_NEAR(p.upper_confidence_bound(cov(1), 10), 0.3 + 0.6 * std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(p.upper_confidence_bound(cov(1), 10), 1.642, 1e-3);
  EXPECT_NEAR(p.upper_confidence_bound(cov(2), 10), 1.2, 1e-12);
  EXPECT_EQ(p.select(c, 10), cov(1));
}

TEST(Mass, NeverScheduledCandidateFirst) {
  MassPolicy p(0.6);
  p.observe(cov(1), 0.9, 1);
  p.observe(cov(2), 0.9, 2);
  EXPECT_EQ(p.select(ids({1, 2, 3}, 3), 3), cov(3));
}

TEST(Mass, SeveralNewCandidatesLowestIdFirst) {
  MassPolicy p(0.6);
  EXPECT_EQ(p.select(ids({7, 4, 9}, 1), 1), cov(4));
  p.observe(cov(4), 0.1, 1);
  EXPECT_EQ(p.select(ids({7, 4, 9}, 2), 2), cov(7));
}

TEST(Mass, TiesGoToLowestId) {
  MassPolicy p(0.5);
  p.observe(cov(5), 0.4, 3);
  p.observe(cov(2), 0.4, 3);
  EXPECT_EQ(p.select(ids({5, 2}, 7), 7), cov(2));
}

TEST(Mass, ObserveUpdatesOnlyScheduledEntry) {
  MassPolicy p(0.6);
  p.observe(cov(1), 0.3, 5);
  p.observe(cov(2), 0.8, 10);
  EXPECT_EQ(p.entry(cov(2))->gain, 0.8);
  EXPECT_EQ(p.entry(cov(2))->slot, 10);
  EXPECT_EQ(p.entry(cov(1))->gain, 0.3);
  EXPECT_EQ(p.entry(cov(1))->slot, 5);
}

TEST(Mass, ZeroGainIsStored) {
  MassPolicy p(0.6);
  p.observe(cov(3), 0.0, 4);
  ASSERT_TRUE(p.entry(cov(3)));
  EXPECT_EQ(p.entry(cov(3))->gain, 0.0);
}

TEST(Mass, ReturningCovKeepsItsEntry) {
  MassPolicy p(1.0);
  p.observe(cov(1), 0.2, 1);
  p.observe(cov(2), 0.5, 2);
  EXPECT_EQ(p.select(ids({2}, 49), 49), cov(2));
  p.observe(cov(2), 0.5, 49);
  // CoV 1 returns after a long absence; its stale entry makes it attractive.
  EXPECT_EQ(p.entry(cov(1))->slot, 1);
  EXPECT_EQ(p.select(ids({1, 2}, 50), 50), cov(1));
}

TEST(Mass, EmptyCandidateSetThrows) {
  MassPolicy p(0.6);
  EXPECT_THROW(p.select({}, 1), std::invalid_argument);
}

TEST(Mass, RejectsNonPositiveBeta) {
  EXPECT_THROW(MassPolicy(0.0), std::invalid_argument);
  EXPECT_THROW(MassPolicy(-1.0), std::invalid_argument);
}

TEST(Mass, CloneIsIndependent) {
  MassPolicy p(0.6);
  p.observe(cov(1), 0.3, 1);
  auto q = p.clone();
  q->observe(cov(1), 0.9, 2);
  EXPECT_EQ(p.entry(cov(1))->gain, 0.3);
}
