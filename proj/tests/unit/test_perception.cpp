#include <gtest/gtest.h>

#include "coopsched/world/mobility.hpp"
#include "coopsched/world/perception.hpp"

using namespace coopsched;
using namespace coopsched::world;

namespace {

WorldFrame line_frame(std::vector<double> xs) {
  WorldFrame f;
  f.slot = 1;
  f.ego_id = 1;
  f.vehicles.push_back({1, {0.0, 0.0}, 0.0, 4.5, 1.8, true});
  std::uint32_t id = 2;
  for (double x : xs) f.vehicles.push_back({id++, {x, 0.0}, 0.0, 4.5, 1.8, true});
  return f;
}

}  // namespace

TEST(Candidates, RadiusBoundary) {
  const auto c = candidates(line_frame({99.0, 101.0}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(raw(c[0].id), 2u);
  EXPECT_DOUBLE_EQ(c[0].distance_m, 99.0);
  EXPECT_EQ(c[0].slot, 1);
}

TEST(Candidates, NearestFirstCappedAndNonCovSkipped) {
  WorldFrame f = line_frame({50.0, 20.0, 80.0, 20.0});
  f.vehicles[3].is_cov = false;  // id 4 at 80 m
  const auto all = candidates(f);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(raw(all[0].id), 3u);
  EXPECT_EQ(raw(all[1].id), 5u);
  EXPECT_EQ(raw(all[2].id), 2u);
  EXPECT_EQ(candidates(f, 100.0, 2).size(), 2u);
  EXPECT_TRUE(candidates(line_frame({})).empty());
}

TEST(LinkGeometry, BlockersAndBuildings) {
  const WorldFrame f = line_frame({30.0, 15.0});
  const auto g = link_geometry(f, {}, 1, 2);
  EXPECT_EQ(g.blockers, 1);
  EXPECT_FALSE(g.building_blocked);
  EXPECT_DOUBLE_EQ(g.distance_m, 30.0);
  const std::vector<Rect> wall{{5.0, -10.0, 6.0, 10.0}};
  EXPECT_TRUE(link_geometry(f, wall, 1, 3).building_blocked);
  EXPECT_THROW(link_geometry(f, {}, 1, 99), std::invalid_argument);
}

namespace {

Trace small_trace(Slot slots) {
  ManhattanParams p;
  p.n_cars = 80;
  p.cov_ratio = 0.5;
  p.slots = slots;
  p.warmup_s = 10.0;
  p.ped_arrival_rate = 2.0;
  return generate_manhattan_trace(p);
}

}  // namespace

TEST(WorldEvaluator, InvariantsOverTrace) {
  const Trace t = small_trace(60);
  WorldEvaluator ev(t.buildings, WorldSettings{}, 3);
  std::size_t with_candidates = 0;
  for (const auto& f : t.frames) {
    const auto e = ev.evaluate(f);
    ASSERT_EQ(e.slot, f.slot);
    ASSERT_EQ(e.gains.size(), e.candidates.size());
    ASSERT_EQ(e.recall_cp.size(), e.candidates.size());
    with_candidates += e.candidates.empty() ? 0 : 1;
    for (std::size_t i = 0; i < e.gains.size(); ++i) {
      ASSERT_GE(e.gains[i], 0.0);
      ASSERT_GE(e.recall_cp[i], e.recall_standalone);
      ASSERT_LE(e.recall_cp[i], 1.0);
    }
  }
  EXPECT_GT(with_candidates, 0u);
}

TEST(WorldEvaluator, ReferenceScannerAgrees) {
  const Trace t = small_trace(8);
  WorldEvaluator fast(t.buildings, WorldSettings{}, 4);
  WorldEvaluator slow(t.buildings, WorldSettings{}, 4);
  slow.use_reference_scanner(true);
  for (const auto& f : t.frames) {
    const auto a = fast.evaluate(f);
    const auto b = slow.evaluate(f);
    ASSERT_EQ(a.gains, b.gains);
    ASSERT_EQ(a.recall_cp, b.recall_cp);
    ASSERT_EQ(a.recall_standalone, b.recall_standalone);
  }
}

TEST(WorldEvaluator, DifficultyFixedPerObject) {
  const Trace t = small_trace(1);
  WorldEvaluator a(t.buildings, WorldSettings{}, 9);
  WorldEvaluator b(t.buildings, WorldSettings{}, 9);
  const auto d = a.difficulty(EntityKind::kCar, 12);
  EXPECT_EQ(a.difficulty(EntityKind::kCar, 12), d);
  EXPECT_EQ(b.difficulty(EntityKind::kCar, 12), d);
  EXPECT_GE(d, 1);
}

TEST(WorldEvaluator, EtaTakesConfiguredRatios) {
  const Trace t = small_trace(30);
  WorldEvaluator ev(t.buildings, WorldSettings{}, 2);
  for (const auto& f : t.frames) ev.evaluate(f);
  const auto& ratios = v2x::ResourceRatioChain::kDefaultRatios;
  for (const auto& v : t.frames.back().vehicles) {
    if (!v.is_cov) continue;
    const double e = ev.eta(v.id);
    EXPECT_TRUE(e == ratios[0] || e == ratios[1] || e == ratios[2]);
  }
  EXPECT_THROW(ev.eta(100000), std::out_of_range);
}

TEST(WorldEvaluator, UnblockedCloseCovRecoversMissedObject) {
  // Ego sees nothing behind the wall; the CoV beyond it sees the pedestrian.
  WorldFrame f;
  f.slot = 1;
  f.ego_id = 1;
  f.vehicles.push_back({1, {0.0, 0.0}, 0.0, 4.5, 1.8, true});
  f.vehicles.push_back({2, {0.0, 20.0}, 0.0, 4.5, 1.8, true});
  f.pedestrians.push_back({1, {10.0, 20.0}, 0.0, 0.6, 0.6});
  const std::vector<Rect> wall{{6.0, 5.0, 8.0, 15.0}};
  WorldSettings s;
  s.radio.shadow_std_los_db = 0.0;
  s.radio.shadow_std_nlos_db = 0.0;
  WorldEvaluator ev(wall, s, 1);
  const auto e = ev.evaluate(f);
  ASSERT_EQ(e.candidates.size(), 1u);
  EXPECT_LE(e.recall_standalone, 0.5);  // the pedestrian is hidden from the ego
  if (ev.difficulty(EntityKind::kPedestrian, 1) <= 50) {
    EXPECT_GT(e.recall_cp[0], e.recall_standalone);
    EXPECT_GT(e.gains[0], 0.0);
  }
}
