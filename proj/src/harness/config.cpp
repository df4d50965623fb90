#include "coopsched/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <type_traits>
#include <stdexcept>

#include "coopsched/core/text.hpp"

namespace coopsched::harness {

std::string_view to_string(EnvKind env) {
  switch (env) {
    case EnvKind::kSynthetic: return "synthetic";
    case EnvKind::kWorld: return "world";
    case EnvKind::kTrace: return "trace";
  }
  return "?";
}

std::vector<double> LogRange::values() const {
  std::vector<double> out;
  if (points == 1) {
    out.push_back(std::pow(10.0, lo));
    return out;
  }
  for (int k = 0; k < points; ++k) {
    out.push_back(std::pow(10.0, lo + (hi - lo) * k / (points - 1)));
  }
  return out;
}

namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw std::invalid_argument("invalid value '" + std::string(value) + "' for key '" + std::string(key) + "'");
}

double as_double(std::string_view key, std::string_view v) {
  const auto x = parse_double(v);
  if (!x) bad_value(key, v);
  return *x;
}

std::int64_t as_int(std::string_view key, std::string_view v) {
  const auto x = parse_int(v);
  if (!x) bad_value(key, v);
  return *x;
}

std::vector<int> as_int_list(std::string_view key, std::string_view v) {
  std::vector<int> out;
  for (auto part : split(v, ',')) out.push_back(static_cast<int>(as_int(key, part)));
  return out;
}

std::vector<std::string> as_name_list(std::string_view v) {
  std::vector<std::string> out;
  for (auto part : split(v, ',')) {
    part = trim(part);
    if (!part.empty()) out.emplace_back(part);
  }
  return out;
}

LogRange as_log_range(std::string_view key, std::string_view v) {
  const auto parts = split(v, ':');
  if (parts.size() != 3) bad_value(key, v);
  return {as_double(key, parts[0]), as_double(key, parts[1]), static_cast<int>(as_int(key, parts[2]))};
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string join_names(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out;
}

std::string show(const LogRange& r) {
  return format_double(r.lo) + ":" + format_double(r.hi) + ":" + std::to_string(r.points);
}

std::string show_seeds(const std::vector<std::uint64_t>& seeds) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) out += (i ? "," : "") + std::to_string(seeds[i]);
  return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view key, std::string_view value)>;
using Getter = std::function<std::string(const ExperimentConfig&)>;

struct Key {
  std::string_view name;
  Setter set;
  Getter get;
};

template <typename F>
Key real(std::string_view name, F field) {
  return {name,
          [field](ExperimentConfig& c, std::string_view k, std::string_view v) { field(c) = as_double(k, v); },
          [field](const ExperimentConfig& c) { return format_double(field(c)); }};
}

template <typename T, typename F>
Key integer(std::string_view name, F field) {
  return {name,
          [field](ExperimentConfig& c, std::string_view k, std::string_view v) {
            const auto x = as_int(k, v);
            if (x < 0 && std::is_unsigned_v<T>) bad_value(k, v);
            field(c) = static_cast<T>(x);
          },
          [field](const ExperimentConfig& c) { return std::to_string(field(c)); }};
}

const std::vector<Key>& registry() {
  static const std::vector<Key> keys = [] {
    using C = ExperimentConfig;
    std::vector<Key> k;
    k.push_back({"env",
                 [](C& c, std::string_view key, std::string_view v) {
                   v = trim(v);
                   if (v == "synthetic") c.env = EnvKind::kSynthetic;
                   else if (v == "world") c.env = EnvKind::kWorld;
                   else if (v == "trace") c.env = EnvKind::kTrace;
                   else bad_value(key, v);
                 },
                 [](const C& c) { return std::string(to_string(c.env)); }});
    k.push_back({"trace", [](C& c, std::string_view, std::string_view v) { c.trace_path = std::string(trim(v)); },
                 [](const C& c) { return c.trace_path.string(); }});
    k.push_back({"buildings",
                 [](C& c, std::string_view, std::string_view v) { c.buildings_path = std::string(trim(v)); },
                 [](const C& c) { return c.buildings_path.string(); }});
    k.push_back({"policy", [](C& c, std::string_view, std::string_view v) { c.policy = std::string(trim(v)); },
                 [](const C& c) { return c.policy; }});
    k.push_back(real("beta", [](auto& c) -> auto& { return c.params.beta; }));
    k.push_back(integer<int>("epoch_len", [](auto& c) -> auto& { return c.params.epoch_len; }));
    k.push_back(integer<int>("window_len", [](auto& c) -> auto& { return c.params.window_len; }));
    k.push_back(integer<Slot>("slots", [](auto& c) -> auto& { return c.slots; }));
    k.push_back({"seeds", [](C& c, std::string_view, std::string_view v) { c.seeds = parse_seed_list(v); },
                 [](const C& c) { return show_seeds(c.seeds); }});
    k.push_back({"out", [](C& c, std::string_view, std::string_view v) { c.out_dir = std::string(trim(v)); },
                 [](const C& c) { return c.out_dir.string(); }});

    // Simulation parameters.
    k.push_back({"slot_length_s",
                 [](C& c, std::string_view key, std::string_view v) {
                   const double dt = as_double(key, v);
                   c.mobility.delta_t_s = dt;
                   c.world.lidar.delta_t_s = dt;
                 },
                 [](const C& c) { return format_double(c.world.lidar.delta_t_s); }});
    k.push_back(integer<int>("number_of_cars", [](auto& c) -> auto& { return c.mobility.n_cars; }));
    k.push_back(real("cov_ratio", [](auto& c) -> auto& { return c.mobility.cov_ratio; }));
    k.push_back(real("speed_limit_kmh", [](auto& c) -> auto& { return c.mobility.speed_limit_kmh; }));
    k.push_back(real("turn_prob_left", [](auto& c) -> auto& { return c.mobility.turn_left_prob; }));
    k.push_back(real("turn_prob_right", [](auto& c) -> auto& { return c.mobility.turn_right_prob; }));
    k.push_back(real("ped_arrival_rate", [](auto& c) -> auto& { return c.mobility.ped_arrival_rate; }));
    k.push_back(real("ped_speed_mps", [](auto& c) -> auto& { return c.mobility.ped_speed_mps; }));

    // LiDAR.
    k.push_back(integer<int>("lidar_channels", [](auto& c) -> auto& { return c.world.lidar.channels; }));
    k.push_back(real("lidar_vfov_deg", [](auto& c) -> auto& { return c.world.lidar.vfov_deg; }));
    k.push_back(real("lidar_max_range_m", [](auto& c) -> auto& { return c.world.lidar.max_range_m; }));
    k.push_back(real("object_height_m", [](auto& c) -> auto& { return c.world.lidar.object_height_m; }));
    k.push_back(real("lidar_azimuth_res_deg", [](auto& c) -> auto& { return c.world.lidar.azimuth_res_deg; }));
    k.push_back(real("lidar_data_rate_64ch_bps", [](auto& c) -> auto& { return c.world.lidar.data_rate_64ch_bps; }));
    k.push_back(real("lidar_mount_height_m", [](auto& c) -> auto& { return c.world.lidar.mount_height_m; }));

    // V2X.
    k.push_back(real("carrier_frequency_ghz", [](auto& c) -> auto& { return c.world.fc_ghz; }));
    k.push_back(real("tx_power_dbm", [](auto& c) -> auto& { return c.world.radio.tx_power_dbm; }));
    k.push_back(real("noise_psd_dbm_hz", [](auto& c) -> auto& { return c.world.radio.noise_psd_dbm_hz; }));
    k.push_back(real("noise_figure_db", [](auto& c) -> auto& { return c.world.radio.noise_figure_db; }));
    k.push_back(real("shadow_std_los_db", [](auto& c) -> auto& { return c.world.radio.shadow_std_los_db; }));
    k.push_back(real("shadow_std_nlos_db", [](auto& c) -> auto& { return c.world.radio.shadow_std_nlos_db; }));
    k.push_back(real("blockage_loss_mean_db", [](auto& c) -> auto& { return c.world.radio.blockage_mean_db; }));
    k.push_back(real("blockage_loss_std_db", [](auto& c) -> auto& { return c.world.radio.blockage_std_db; }));
    k.push_back(real("bandwidth_hz", [](auto& c) -> auto& { return c.world.radio.bandwidth_hz; }));
    k.push_back({"resource_bandwidths_hz",
                 [](C& c, std::string_view key, std::string_view v) {
                   const auto parts = split(v, ',');
                   if (parts.size() != 3) bad_value(key, v);
                   for (std::size_t i = 0; i < 3; ++i) c.resource_bandwidths_hz[i] = as_double(key, parts[i]);
                 },
                 [](const C& c) {
                   return format_double(c.resource_bandwidths_hz[0]) + "," +
                          format_double(c.resource_bandwidths_hz[1]) + "," +
                          format_double(c.resource_bandwidths_hz[2]);
                 }});
    k.push_back(real("resource_transition_s", [](auto& c) -> auto& { return c.world.eta_dwell_s; }));

    // Map and traffic.
    k.push_back(integer<int>("grid_nodes", [](auto& c) -> auto& { return c.mobility.grid_nodes; }));
    k.push_back(real("block_side_m", [](auto& c) -> auto& { return c.mobility.block_side_m; }));
    k.push_back(real("lane_width_m", [](auto& c) -> auto& { return c.mobility.lane_width_m; }));
    k.push_back(real("sidewalk_width_m", [](auto& c) -> auto& { return c.mobility.sidewalk_width_m; }));
    k.push_back(real("min_speed_fraction", [](auto& c) -> auto& { return c.mobility.min_speed_fraction; }));
    k.push_back(real("light_green_s", [](auto& c) -> auto& { return c.mobility.light_green_s; }));
    k.push_back(real("warmup_s", [](auto& c) -> auto& { return c.mobility.warmup_s; }));
    k.push_back(real("candidate_radius_m", [](auto& c) -> auto& { return c.world.candidate_radius_m; }));
    k.push_back({"v_max",
                 [](C& c, std::string_view key, std::string_view v) {
                   if (trim(v) == "inf") {
                     c.world.v_max = std::numeric_limits<std::size_t>::max();
                     return;
                   }
                   const auto x = as_int(key, v);
                   if (x < 1) bad_value(key, v);
                   c.world.v_max = static_cast<std::size_t>(x);
                 },
                 [](const C& c) {
                   return c.world.v_max == std::numeric_limits<std::size_t>::max() ? std::string("inf")
                                                                                    : std::to_string(c.world.v_max);
                 }});

    // Synthetic environment.
    k.push_back(real("sigma", [](auto& c) -> auto& { return c.population.sigma; }));
    k.push_back(real("arrival_rate", [](auto& c) -> auto& { return c.population.arrival_rate; }));
    k.push_back(real("mean_lifetime", [](auto& c) -> auto& { return c.population.mean_lifetime; }));
    k.push_back(integer<std::size_t>("synth_v_max", [](auto& c) -> auto& { return c.population.v_max; }));
    k.push_back(integer<std::size_t>("initial_arms", [](auto& c) -> auto& { return c.population.initial_arms; }));
    k.push_back(real("g_max", [](auto& c) -> auto& { return c.g_max; }));

    // Sweep grids.
    k.push_back({"sweep_policies",
                 [](C& c, std::string_view, std::string_view v) { c.sweep.policies = as_name_list(v); },
                 [](const C& c) { return join_names(c.sweep.policies); }});
    k.push_back({"sweep_mass_beta_log10",
                 [](C& c, std::string_view key, std::string_view v) { c.sweep.mass_beta = as_log_range(key, v); },
                 [](const C& c) { return show(c.sweep.mass_beta); }});
    k.push_back({"sweep_sw_ucb_beta_log10",
                 [](C& c, std::string_view key, std::string_view v) { c.sweep.sw_ucb_beta = as_log_range(key, v); },
                 [](const C& c) { return show(c.sweep.sw_ucb_beta); }});
    k.push_back({"sweep_sw_ucb_windows",
                 [](C& c, std::string_view key, std::string_view v) { c.sweep.sw_ucb_windows = as_int_list(key, v); },
                 [](const C& c) { return join_ints(c.sweep.sw_ucb_windows); }});
    k.push_back({"sweep_earliest_beta_log10",
                 [](C& c, std::string_view key, std::string_view v) { c.sweep.earliest_beta = as_log_range(key, v); },
                 [](const C& c) { return show(c.sweep.earliest_beta); }});
    k.push_back({"sweep_etc_epochs",
                 [](C& c, std::string_view key, std::string_view v) { c.sweep.etc_epochs = as_int_list(key, v); },
                 [](const C& c) { return join_ints(c.sweep.etc_epochs); }});
    return k;
  }();
  return keys;
}

}  // namespace

world::WorldSettings ExperimentConfig::world_settings() const {
  world::WorldSettings w = world;
  for (std::size_t i = 0; i < 3; ++i) w.eta_ratios[i] = resource_bandwidths_hz[i] / world.radio.bandwidth_hz;
  return w;
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (slots < 1) fail("slots must be at least 1");
  if (seeds.empty()) fail("seeds must not be empty");
  const bool known = policy == "oracle" || std::any_of(std::begin(policy::kPolicyNames), std::end(policy::kPolicyNames),
                                                       [&](std::string_view n) { return n == policy; });
  if (!known) fail("unknown policy '" + policy + "'");
  if (env == EnvKind::kTrace && trace_path.empty()) fail("env=trace requires 'trace'");
  if (!(g_max > 0.0)) fail("g_max must be positive");
  for (double bw : resource_bandwidths_hz) {
    if (!(bw > 0.0) || bw > world.radio.bandwidth_hz) fail("resource_bandwidths_hz must lie in (0, bandwidth_hz]");
  }
  for (const LogRange* r : {&sweep.mass_beta, &sweep.sw_ucb_beta, &sweep.earliest_beta}) {
    if (r->points < 1 || r->lo > r->hi) fail("sweep ranges need lo <= hi and at least one point");
  }
  if (sweep.policies.empty()) fail("sweep_policies must not be empty");
  if (sweep.sw_ucb_windows.empty() || sweep.etc_epochs.empty()) fail("sweep lists must not be empty");
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  for (const auto& k : registry()) {
    if (k.name == key) {
      k.set(cfg, key, trim(value));
      return;
    }
  }
  throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v(line);
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    }
    try {
      apply_setting(cfg, v.substr(0, eq), v.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  return parse_config(in);
}

std::vector<std::pair<std::string, std::string>> dump_config(const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : registry()) out.emplace_back(std::string(k.name), k.get(cfg));
  return out;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    const auto dots = part.find("..");
    auto seed = [&](std::string_view s) {
      const auto x = parse_int(s);
      if (!x || *x < 0) throw std::invalid_argument("invalid seed '" + std::string(s) + "'");
      return static_cast<std::uint64_t>(*x);
    };
    if (dots == std::string_view::npos) {
      out.push_back(seed(part));
      continue;
    }
    const auto a = seed(part.substr(0, dots));
    const auto b = seed(part.substr(dots + 2));
    if (b < a) throw std::invalid_argument("empty seed range '" + std::string(part) + "'");
    for (auto s = a; s <= b; ++s) out.push_back(s);
  }
  if (out.empty()) throw std::invalid_argument("empty seed list");
  return out;
}

}  // namespace coopsched::harness
