#include "coopsched/harness/sweep.hpp"

#include <exception>
#include <stdexcept>

#include "coopsched/harness/stats.hpp"

namespace coopsched::harness {

std::vector<ParamPoint> sweep_points(const ExperimentConfig& cfg) {
  std::vector<ParamPoint> out;
  const policy::PolicyParams base = cfg.params;
  for (const auto& name : cfg.sweep.policies) {
    if (name == "mass") {
      for (double b : cfg.sweep.mass_beta.values()) out.push_back({name, {b, base.epoch_len, base.window_len}});
    } else if (name == "sw-ucb") {
      for (int w : cfg.sweep.sw_ucb_windows) {
        for (double b : cfg.sweep.sw_ucb_beta.values()) out.push_back({name, {b, base.epoch_len, w}});
      }
    } else if (name == "earliest-activated") {
      for (double b : cfg.sweep.earliest_beta.values()) out.push_back({name, {b, base.epoch_len, base.window_len}});
    } else if (name == "etc") {
      for (int e : cfg.sweep.etc_epochs) out.push_back({name, {base.beta, e, base.window_len}});
    } else if (name == "closest" || name == "oracle") {
      out.push_back({name, base});
    } else {
      throw std::invalid_argument("unknown policy '" + name + "' in sweep_policies");
    }
  }
  return out;
}

SweepResult run_sweep(const std::vector<Tape>& tapes, const std::vector<std::uint64_t>& seeds,
                      const std::vector<ParamPoint>& points, bool parallel) {
  if (tapes.size() != seeds.size()) throw std::invalid_argument("one tape per seed expected");
  if (points.empty() || seeds.empty()) throw std::invalid_argument("sweep grid is empty");
  const std::size_t n_seeds = seeds.size();
  const auto n_jobs = static_cast<long>(points.size() * n_seeds);
  std::vector<RunSummary> results(static_cast<std::size_t>(n_jobs));
  std::exception_ptr error;
  auto job = [&](long j) {
    const auto p = static_cast<std::size_t>(j) / n_seeds;
    const auto s = static_cast<std::size_t>(j) % n_seeds;
    results[static_cast<std::size_t>(j)] = run_on_tape(tapes[s], points[p].policy, points[p].params, seeds[s]).summary;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long j = 0; j < n_jobs; ++j) {
      try {
        job(j);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (long j = 0; j < n_jobs; ++j) job(j);
  }

  SweepResult out;
  out.seeds = seeds;
  for (std::size_t p = 0; p < points.size(); ++p) {
    SweepRow row;
    row.point = points[p];
    for (std::size_t s = 0; s < n_seeds; ++s) {
      const auto& r = results[p * n_seeds + s];
      row.regret.push_back(r.average_regret);
      row.gain.push_back(r.mean_gain);
      if (r.mean_recall_cp) row.recall.push_back(*r.mean_recall_cp);
    }
    row.mean_regret = mean(row.regret);
    row.std_regret = stddev(row.regret);
    row.mean_gain = mean(row.gain);
    row.std_gain = stddev(row.gain);
    row.mean_recall = row.recall.empty() ? 0.0 : mean(row.recall);
    const auto it = out.best.find(row.point.policy);
    if (it == out.best.end() || row.mean_regret < out.rows[it->second].mean_regret) {
      out.best[row.point.policy] = out.rows.size();
    }
    out.rows.push_back(std::move(row));
  }
  for (const auto& [name, idx] : out.best) out.rows[idx].best = true;
  return out;
}

SweepResult sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto tapes = make_tapes(cfg, cfg.seeds);
  return run_sweep(tapes, cfg.seeds, sweep_points(cfg));
}

}  // namespace coopsched::harness
