// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
// Usage: coopsched_acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coopsched/core/rng.hpp"
#include "coopsched/harness/config.hpp"
#include "coopsched/harness/report.hpp"
#include "coopsched/harness/runner.hpp"
#include "coopsched/harness/stats.hpp"
#include "coopsched/harness/sweep.hpp"
#include "coopsched/harness/tape.hpp"
#include "coopsched/rmab/path_checks.hpp"
#include "coopsched/rmab/reflected_walk.hpp"
#include "coopsched/v2x/channel.hpp"
#include "coopsched/world/detection.hpp"
#include "coopsched/world/lidar.hpp"

using namespace coopsched;

namespace {

// Pinned tolerances.
constexpr double kKsMax = 0.01;
constexpr double kKsRuntimeS = 5.0;
constexpr double kScalingFactor = 3.0;
constexpr double kViolationMaxFreq = 0.05;
constexpr double kAlpha = 0.05;
constexpr double kGainMargin = 0.10;
constexpr double kSlopeTol = 0.05;
constexpr double kPathlossTolDb = 0.01;
constexpr double kRateRelTol = 0.01;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<std::uint64_t> seed_range(std::uint64_t n) {
  std::vector<std::uint64_t> s(n);
  for (std::uint64_t i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

Outcome stationarity() {
  const auto start = std::chrono::steady_clock::now();
  Rng init = make_rng(1, "acceptance-ks");
  rmab::GainProcess g(std::uniform_real_distribution<double>(0.0, 1.0)(init), 0.05, 1);
  std::vector<double> xs(1'000'000);
  for (auto& x : xs) x = g.step();
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    d = std::max({d, (i + 1) / n - xs[i], xs[i] - i / n});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {d < kKsMax && secs < kKsRuntimeS, "KS=" + fmt("%.5f", d) + " runtime=" + fmt("%.2fs", secs)};
}

harness::Tape two_arm_tape(double sigma, Slot slots, std::uint64_t seed) {
  rmab::PopulationParams p;
  p.sigma = sigma;
  p.v_max = 2;
  p.initial_arms = 2;
  return harness::synthetic_tape(p, 1.0, slots, seed);
}

Outcome regret_scaling() {
  const std::vector<double> sigmas{0.01, 0.02, 0.04};
  const auto seeds = seed_range(20);
  std::vector<double> rbar, ratio;
  for (double sigma : sigmas) {
    std::vector<double> per_seed(seeds.size());
    const long n = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      const auto tape = two_arm_tape(sigma, 100'000, seeds[static_cast<std::size_t>(i)]);
      policy::PolicyParams params;
      params.beta = rmab::theoretical_beta(sigma);
      per_seed[static_cast<std::size_t>(i)] =
          harness::run_on_tape(tape, "mass", params, seeds[static_cast<std::size_t>(i)]).summary.average_regret;
    }
    const double r = harness::mean(per_seed);
    const double l = std::log(1.0 / sigma);
    rbar.push_back(r);
    ratio.push_back(r / (sigma * sigma * l * l * l));
  }
  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  const bool monotone = rbar[0] < rbar[1] && rbar[1] < rbar[2];
  std::string d;
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    d += "sigma=" + fmt("%.2f", sigmas[i]) + " R=" + fmt("%.3e", rbar[i]) + " ratio=" + fmt("%.3f", ratio[i]) + "; ";
  }
  d += "spread=" + fmt("%.2f", *hi / *lo);
  return {monotone && *hi / *lo <= kScalingFactor, d};
}

Outcome violation_frequency() {
  const std::vector<double> sigmas{0.1, 0.05, 0.02};
  std::vector<double> freq;
  std::string d;
  for (double sigma : sigmas) {
    freq.push_back(rmab::well_behaved_violation_frequency(sigma, 10'000, 7).frequency());
    d += "sigma=" + fmt("%.2f", sigma) + " freq=" + fmt("%.4f", freq.back()) + "; ";
  }
  const bool decreasing = freq[0] > freq[1] && freq[1] > freq[2];
  return {decreasing && freq[1] < kViolationMaxFreq, d};
}

Outcome scheduling_deadlines() {
  const double sigma = 0.05;
  const double c_f = rmab::well_behaved_constant(sigma);
  std::size_t checked = 0, late = 0, late_scaled = 0, other = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = rmab::check_scheduling_deadlines(sigma, 5.0 * c_f, 10'000, seed);
    checked += r.well_behaved_slots;
    late += r.optimal_late_well_behaved + r.leader_late_well_behaved;
    other += r.optimal_late_other + r.leader_late_other;
    const auto s = rmab::check_scheduling_deadlines(sigma, 5.0 * c_f * sigma, 10'000, seed);
    late_scaled += s.optimal_late_well_behaved + s.leader_late_well_behaved;
  }
  return {checked > 0 && late == 0,
          "beta=5c_f well-behaved slots=" + std::to_string(checked) + " late=" + std::to_string(late) +
              " late_elsewhere=" + std::to_string(other) +
              " (beta=5c_f*sigma late=" + std::to_string(late_scaled) + ")"};
}

struct Tuned {
  std::map<std::string, const harness::SweepRow*> best;
};

Tuned tuned(const harness::SweepResult& r) {
  Tuned t;
  for (const auto& [policy, idx] : r.best) t.best[policy] = &r.rows[idx];
  return t;
}

std::string ordering_check(const harness::SweepResult& r, bool& ok) {
  const auto t = tuned(r);
  const auto* mass = t.best.at("mass");
  std::string d = "mass=" + fmt("%.4f", mass->mean_regret);
  for (const char* other : {"sw-ucb", "etc", "earliest-activated", "closest"}) {
    const auto* o = t.best.at(other);
    const auto test = harness::paired_t_test_less(mass->regret, o->regret);
    const bool pass = mass->mean_regret < o->mean_regret && test.p_value < kAlpha;
    ok = ok && pass;
    d += " " + std::string(other) + "=" + fmt("%.4f", o->mean_regret) + "(p=" + fmt("%.2g", test.p_value) + ")";
  }
  return d;
}

harness::ExperimentConfig ordering_config(harness::EnvKind env) {
  harness::ExperimentConfig cfg;
  cfg.env = env;
  cfg.slots = 5000;
  cfg.seeds = seed_range(20);
  if (env == harness::EnvKind::kSynthetic) {
    // Increment-to-spread ratio of the world env's per-CoV gains (about 0.33)
    // maps to sigma = 0.1 for stationary Uniform[0, 1] arms.
    cfg.population.sigma = 0.1;
    cfg.population.arrival_rate = 0.02;
    cfg.population.mean_lifetime = 250.0;
    cfg.population.v_max = 5;
    cfg.population.initial_arms = 3;
  } else {
    cfg.mobility.n_cars = 50;
    cfg.mobility.cov_ratio = 0.3;
  }
  return cfg;
}

Outcome policy_ordering() {
  bool ok = true;
  const auto synth = harness::sweep(ordering_config(harness::EnvKind::kSynthetic));
  const std::string ds = ordering_check(synth, ok);
  const auto world = harness::sweep(ordering_config(harness::EnvKind::kWorld));
  const std::string dw = ordering_check(world, ok);
  const auto t = tuned(world);
  const double margin = t.best.at("mass")->mean_gain / t.best.at("closest")->mean_gain - 1.0;
  ok = ok && margin >= kGainMargin;
  return {ok, "synthetic: " + ds + " | world: " + dw + " | world gain margin over closest=" + fmt("%.1f%%", 100.0 * margin)};
}

Outcome cov_ratio_trend() {
  const std::vector<double> ratios{0.1, 0.2, 0.3};
  std::vector<double> means, vars;
  for (double ratio : ratios) {
    harness::ExperimentConfig cfg = ordering_config(harness::EnvKind::kWorld);
    cfg.mobility.cov_ratio = ratio;
    const auto tapes = harness::make_tapes(cfg, cfg.seeds);
    std::vector<double> gains(cfg.seeds.size());
    for (std::size_t i = 0; i < tapes.size(); ++i) {
      gains[i] = harness::run_on_tape(tapes[i], "mass", cfg.params, cfg.seeds[i]).summary.mean_gain;
    }
    means.push_back(harness::mean(gains));
    const double s = harness::stddev(gains);
    vars.push_back(s * s);
  }
  const double pooled = std::sqrt(harness::mean(vars));
  bool ok = true;
  std::string d;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    d += "ratio=" + fmt("%.1f", ratios[i]) + " gain=" + fmt("%.4f", means[i]) + "; ";
    if (i > 0) ok = ok && means[i] >= means[i - 1] - pooled;
  }
  return {ok, d + "pooled std=" + fmt("%.4f", pooled)};
}

Outcome detection_law() {
  Rng rng = make_rng(1, "acceptance-difficulty");
  std::vector<std::int64_t> d(100'000);
  for (auto& x : d) x = world::sample_difficulty(rng);
  std::vector<double> lx, ly;
  for (double n = 1.0; n <= 1e4; n *= std::sqrt(10.0)) {
    const auto points = static_cast<std::int64_t>(std::llround(n));
    double miss = 0.0;
    for (auto x : d) miss += world::detect(points, x) ? 0.0 : 1.0;
    miss /= static_cast<double>(d.size());
    if (miss <= 0.0) continue;
    lx.push_back(std::log(static_cast<double>(points)));
    ly.push_back(std::log(miss));
  }
  const double mx = harness::mean(lx), my = harness::mean(ly);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = sxy / sxx;
  return {std::fabs(slope + world::kDifficultyExponent) <= kSlopeTol, "slope=" + fmt("%.4f", slope)};
}

Outcome channel_anchors() {
  const double los = v2x::median_pathloss_db(v2x::LinkClass::kLos, 100.0, 5.9);
  const double nlos = v2x::median_pathloss_db(v2x::LinkClass::kNlos, 100.0, 5.9);
  const double rate = v2x::shannon_rate_bps(1.0, los, v2x::RadioParams{});
  const bool ok = std::fabs(los - 86.20) <= kPathlossTolDb && std::fabs(nlos - 111.42) <= kPathlossTolDb &&
                  std::fabs(rate / 2.695e8 - 1.0) <= kRateRelTol;
  return {ok, "LOS=" + fmt("%.3f", los) + " NLOS=" + fmt("%.3f", nlos) + " rate=" + fmt("%.4e", rate)};
}

std::string slot_csv(const harness::ExperimentConfig& cfg, std::uint64_t seed) {
  std::ostringstream out;
  harness::write_slot_csv(out, harness::run_experiment(cfg, seed).slots);
  return out.str();
}

int raycast_mismatches(int scenes) {
  const world::LidarSpec spec;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> pos(-70.0, 70.0);
  std::uniform_real_distribution<double> ang(-world::kPi, world::kPi);
  std::uniform_real_distribution<double> size(2.0, 15.0);
  int bad = 0;
  for (int s = 0; s < scenes; ++s) {
    std::vector<world::Rect> buildings;
    for (int b = 0; b < 4; ++b) {
      const double x = pos(rng), y = pos(rng);
      const world::Rect r{x, y, x + size(rng), y + size(rng)};
      if (!world::contains(r, world::Vec2{0.0, 0.0})) buildings.push_back(r);
    }
    std::vector<world::Vehicle> cars;
    std::vector<world::ScanTarget> targets;
    for (std::uint32_t id = 1; id <= 15; ++id) {
      cars.push_back({id, {pos(rng), pos(rng)}, ang(rng), 4.5, 1.8, false});
      targets.push_back({cars.back().footprint(), id});
    }
    for (int p = 0; p < 5; ++p) targets.push_back({{{pos(rng), pos(rng)}, ang(rng), 0.6, 0.6}, world::kNoVehicle});
    const world::Sensor sensor{{0.0, 0.0}, ang(rng), 0};
    const world::LidarScene scene{buildings, cars};
    if (world::scan_targets(spec, scene, sensor, targets) !=
        world::scan_targets_reference(spec, scene, sensor, targets)) {
      ++bad;
    }
  }
  return bad;
}

Outcome oracle_determinism() {
  bool ok = true;
  std::string d;
  auto synth = ordering_config(harness::EnvKind::kSynthetic);
  auto world_cfg = ordering_config(harness::EnvKind::kWorld);
  world_cfg.slots = 1000;
  double oracle_regret = 0.0;
  std::size_t negative = 0;
  for (const auto* cfg : {&synth, &world_cfg}) {
    const auto tape = harness::make_tape(*cfg, 3);
    oracle_regret = std::max(oracle_regret, harness::run_oracle(tape, 3).summary.average_regret);
    for (std::string_view name : policy::kPolicyNames) {
      for (const auto& m : harness::run_on_tape(tape, name, {}, 3).slots) negative += m.regret_increment < 0.0;
    }
  }
  ok = ok && oracle_regret == 0.0 && negative == 0;
  const bool identical = slot_csv(synth, 5) == slot_csv(synth, 5) && slot_csv(world_cfg, 5) == slot_csv(world_cfg, 5);
  const int mismatches = raycast_mismatches(100);
  ok = ok && identical && mismatches == 0;
  d = "oracle R=" + fmt("%g", oracle_regret) + " negative increments=" + std::to_string(negative) +
      " identical CSV=" + (identical ? "yes" : "no") + " raycast mismatches=" + std::to_string(mismatches) + "/100";
  return {ok, d};
}

Outcome downsampling() {
  const world::LidarSpec spec;
  const double bits = spec.full_frame_bits();
  const double rho = v2x::downsample_ratio(1.6635e6 / spec.delta_t_s, spec.delta_t_s, bits);
  return {std::fabs(bits - 3.327e6) < 1e-6 && std::fabs(rho - 0.5) < 1e-12,
          "frame=" + fmt("%.6e", bits) + " rho=" + fmt("%.6f", rho)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"stationarity", stationarity},
      {"regret-scaling", regret_scaling},
      {"well-behaved-frequency", violation_frequency},
      {"scheduling-deadlines", scheduling_deadlines},
      {"policy-ordering", policy_ordering},
      {"cov-ratio-trend", cov_ratio_trend},
      {"detection-law", detection_law},
      {"channel-anchors", channel_anchors},
      {"oracle-determinism", oracle_determinism},
      {"downsampling", downsampling},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.contains(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
