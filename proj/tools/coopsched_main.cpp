#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coopsched/core/text.hpp"
#include "coopsched/harness/config.hpp"
#include "coopsched/harness/report.hpp"
#include "coopsched/harness/runner.hpp"
#include "coopsched/harness/sweep.hpp"
#include "coopsched/harness/tape.hpp"
#include "coopsched/world/mobility.hpp"
#include "coopsched/world/trace_io.hpp"

namespace fs = std::filesystem;
using namespace coopsched;

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  std::string policy;
  std::optional<double> beta;
  std::string out;
  std::optional<Slot> slots;
  std::vector<std::string> set;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--config", f.config, "Config file (key = value lines)");
  app->add_option("--seed", f.seed, "Single seed");
  app->add_option("--seeds", f.seeds, "Seed range a..b or list a,b,c");
  app->add_option("--policy", f.policy, "mass | closest | etc | sw-ucb | earliest-activated | oracle");
  app->add_option("--beta", f.beta, "Confidence scale beta");
  app->add_option("--out", f.out, "Output directory");
  app->add_option("--slots", f.slots, "Number of slots T");
  app->add_option("--set", f.set, "Override a config key: --set key=value (repeatable)");
}

harness::ExperimentConfig build_config(const CommonFlags& f) {
  harness::ExperimentConfig cfg = f.config.empty() ? harness::ExperimentConfig{} : harness::load_config(f.config);
  for (const auto& kv : f.set) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    harness::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (f.seed) cfg.seeds = {*f.seed};
  if (!f.seeds.empty()) cfg.seeds = harness::parse_seed_list(f.seeds);
  if (!f.policy.empty()) cfg.policy = f.policy;
  if (f.beta) cfg.params.beta = *f.beta;
  if (!f.out.empty()) cfg.out_dir = f.out;
  if (f.slots) cfg.slots = *f.slots;
  return cfg;
}

int run_runs(harness::ExperimentConfig cfg, bool dump_gains = false) {
  cfg.validate();
  const auto tapes = harness::make_tapes(cfg, cfg.seeds);
  std::vector<harness::RunResult> runs;
  for (std::size_t i = 0; i < tapes.size(); ++i) {
    runs.push_back(harness::run_on_tape(tapes[i], cfg.policy, cfg.params, cfg.seeds[i]));
  }
  harness::write_run_outputs(cfg.out_dir, cfg, runs);
  if (dump_gains) {
    for (std::size_t i = 0; i < tapes.size(); ++i) {
      std::ostringstream csv;
      harness::write_gain_matrix_csv(csv, tapes[i]);
      harness::write_file_atomic(cfg.out_dir / ("gains_seed" + std::to_string(cfg.seeds[i]) + ".csv"), csv.str());
    }
  }
  std::cout << harness::render_summary(harness::make_summary(cfg, runs));
  std::cout << "wrote " << (cfg.out_dir / "summary.json").string() << '\n';
  return 0;
}

int run_sweep(harness::ExperimentConfig cfg) {
  const auto result = harness::sweep(cfg);
  harness::write_sweep_outputs(cfg.out_dir, cfg, result);
  for (const auto& [name, idx] : result.best) {
    const auto& row = result.rows[idx];
    std::cout << name << ": best mean regret " << format_double(row.mean_regret) << " (std "
              << format_double(row.std_regret) << "), beta " << format_double(row.point.params.beta)
              << ", epoch_len " << row.point.params.epoch_len << ", window_len " << row.point.params.window_len
              << '\n';
  }
  std::cout << "wrote " << (cfg.out_dir / "sweep.csv").string() << '\n';
  return 0;
}

int run_report(const fs::path& dir) {
  const auto summary_path = dir / "summary.json";
  const auto sweep_path = dir / "sweep.csv";
  bool any = false;
  if (fs::exists(summary_path)) {
    const auto s = harness::read_summary(summary_path);
    const std::string text = harness::render_summary(s);
    std::cout << text;
    harness::write_file_atomic(dir / "report.txt", text);
    any = true;
  }
  if (fs::exists(sweep_path)) {
    std::ifstream in(sweep_path);
    std::cout << in.rdbuf();
    any = true;
  }
  if (!any) throw std::runtime_error("no summary.json or sweep.csv in " + dir.string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative-perception scheduling simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(COOPSCHED_VERSION));

  CommonFlags synth_f, world_f, trace_f, sweep_f;
  std::string trace_file, buildings_file, env_name, save_trace, report_dir = "out";
  bool dump_gains = false;

  auto* synth = app.add_subcommand("synth", "Synthetic restless-bandit experiment");
  add_common(synth, synth_f);
  synth->add_flag("--dump-gains", dump_gains, "Also write gains_seed<N>.csv (slot, cov_id, gain)");
  auto* world = app.add_subcommand("world", "Experiment on a generated Manhattan map");
  add_common(world, world_f);
  world->add_flag("--dump-gains", dump_gains, "Also write gains_seed<N>.csv (slot, cov_id, gain)");
  world->add_option("--save-trace", save_trace, "Also write the first seed's trace as <prefix>.csv and <prefix>_buildings.csv");
  auto* trace = app.add_subcommand("trace", "Experiment on an ingested trace");
  add_common(trace, trace_f);
  trace->add_option("file", trace_file, "Trace CSV")->required();
  trace->add_option("--buildings", buildings_file, "Building rectangles CSV");
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep over the configured grids");
  add_common(sweep, sweep_f);
  sweep->add_option("--env", env_name, "synthetic | world | trace (overrides the config)");
  auto* report = app.add_subcommand("report", "Re-render the outputs in a directory");
  report->add_option("--out,dir", report_dir, "Directory holding summary.json / sweep.csv");
  auto* defaults = app.add_subcommand("defaults", "Print every config key with its default value");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      auto cfg = build_config(synth_f);
      cfg.env = harness::EnvKind::kSynthetic;
      return run_runs(cfg, dump_gains);
    }
    if (*world) {
      auto cfg = build_config(world_f);
      cfg.env = harness::EnvKind::kWorld;
      if (!save_trace.empty()) {
        auto m = cfg.mobility;
        m.slots = cfg.slots;
        m.seed = cfg.seeds.front();
        world::save_trace(world::generate_manhattan_trace(m), save_trace + ".csv", save_trace + "_buildings.csv");
      }
      return run_runs(cfg, dump_gains);
    }
    if (*trace) {
      auto cfg = build_config(trace_f);
      cfg.env = harness::EnvKind::kTrace;
      cfg.trace_path = trace_file;
      if (!buildings_file.empty()) cfg.buildings_path = buildings_file;
      return run_runs(cfg);
    }
    if (*sweep) {
      auto cfg = build_config(sweep_f);
      if (!env_name.empty()) harness::apply_setting(cfg, "env", env_name);
      return run_sweep(cfg);
    }
    if (*report) return run_report(report_dir);
    if (*defaults) {
      for (const auto& [k, v] : harness::dump_config(harness::ExperimentConfig{})) std::cout << k << " = " << v << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
