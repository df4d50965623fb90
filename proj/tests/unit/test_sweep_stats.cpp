#include <gtest/gtest.h>

#include <cmath>

#include "coopsched/harness/stats.hpp"
#include "coopsched/harness/sweep.hpp"

using namespace coopsched;
using namespace coopsched::harness;

TEST(Stats, MeanAndStd) {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  EXPECT_DOUBLE_EQ(mean(x), 2.5);
  EXPECT_NEAR(stddev(x), std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_EQ(stddev(std::vector<double>{3.0}), 0.0);
}

TEST(Stats, PairedTestMatchesClosedForm) {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{2, 2, 4, 5, 7};
  const auto r = paired_t_test_less(a, b);
  EXPECT_DOUBLE_EQ(r.mean_diff, -1.0);
  EXPECT_NEAR(r.t_stat, -std::sqrt(10.0), 1e-12);
  EXPECT_EQ(r.df, 4.0);
  // Student t CDF with 4 degrees of freedom in closed form.
  const double t = r.t_stat;
  const double u = t / std::sqrt(1.0 + t * t / 4.0);
  const double cdf = 0.5 + 0.375 * u * (1.0 - t * t / (12.0 * (1.0 + t * t / 4.0)));
  EXPECT_NEAR(r.p_value, cdf, 1e-12);
  EXPECT_NEAR(r.p_value, 0.0170547, 1e-6);
}

TEST(Stats, PairedTestDegenerate) {
  const std::vector<double> a{1, 2, 3};
  const std::vector<double> shift{2, 3, 4};
  EXPECT_EQ(paired_t_test_less(a, shift).p_value, 0.0);
  EXPECT_EQ(paired_t_test_less(a, a).p_value, 1.0);
  EXPECT_THROW(paired_t_test_less(a, std::vector<double>{1, 2}), std::invalid_argument);
  EXPECT_THROW(paired_t_test_less(std::vector<double>{1}, std::vector<double>{2}), std::invalid_argument);
}

namespace {

ExperimentConfig small_cfg() {
  ExperimentConfig cfg;
  cfg.slots = 800;
  cfg.seeds = {1, 2, 3};
  cfg.population.sigma = 0.05;
  cfg.population.arrival_rate = 0.05;
  cfg.population.mean_lifetime = 60.0;
  cfg.population.v_max = 4;
  cfg.sweep.mass_beta.points = 2;
  cfg.sweep.sw_ucb_beta.points = 2;
  cfg.sweep.sw_ucb_windows = {10, 20};
  cfg.sweep.earliest_beta.points = 2;
  cfg.sweep.etc_epochs = {2, 10};
  return cfg;
}

}  // namespace

TEST(Sweep, PointsPerPolicy) {
  const auto pts = sweep_points(small_cfg());
  std::map<std::string, int> n;
  for (const auto& p : pts) ++n[p.policy];
  EXPECT_EQ(n["mass"], 2);
  EXPECT_EQ(n["closest"], 1);
  EXPECT_EQ(n["sw-ucb"], 4);
  EXPECT_EQ(n["earliest-activated"], 2);
  EXPECT_EQ(n["etc"], 2);
}

TEST(Sweep, ParallelEqualsSerial) {
  const auto cfg = small_cfg();
  const auto tapes = make_tapes(cfg, cfg.seeds);
  const auto pts = sweep_points(cfg);
  const auto par = run_sweep(tapes, cfg.seeds, pts, true);
  const auto ser = run_sweep(tapes, cfg.seeds, pts, false);
  ASSERT_EQ(par.rows.size(), ser.rows.size());
  for (std::size_t i = 0; i < par.rows.size(); ++i) {
    EXPECT_EQ(par.rows[i].regret, ser.rows[i].regret);
    EXPECT_EQ(par.rows[i].gain, ser.rows[i].gain);
    EXPECT_EQ(par.rows[i].best, ser.rows[i].best);
  }
  EXPECT_EQ(par.best, ser.best);
}

TEST(Sweep, SinglePointEqualsSingleRun) {
  auto cfg = small_cfg();
  cfg.seeds = {4};
  cfg.sweep.policies = {"mass"};
  cfg.sweep.mass_beta = {std::log10(0.6), std::log10(0.6), 1};
  const auto res = sweep(cfg);
  ASSERT_EQ(res.rows.size(), 1u);
  cfg.params.beta = res.rows[0].point.params.beta;
  const auto run = run_experiment(cfg, 4);
  EXPECT_EQ(res.rows[0].regret[0], run.summary.average_regret);
  EXPECT_TRUE(res.rows[0].best);
}

TEST(Sweep, BestIsLowestMeanRegret) {
  const auto res = sweep(small_cfg());
  for (const auto& [policy, idx] : res.best) {
    for (const auto& row : res.rows) {
      if (row.point.policy == policy) {
        EXPECT_LE(res.rows[idx].mean_regret, row.mean_regret);
      }
    }
    EXPECT_TRUE(res.rows[idx].best);
  }
}
