#include "coopsched/harness/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "coopsched/core/text.hpp"
#include "coopsched/harness/stats.hpp"

namespace coopsched::harness {

using Json = nlohmann::ordered_json;

namespace {

std::string opt(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

Json opt_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

std::optional<double> opt_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

Json run_to_json(const RunSummary& r) {
  Json j;
  j["policy"] = r.policy;
  j["beta"] = r.params.beta;
  j["epoch_len"] = r.params.epoch_len;
  j["window_len"] = r.params.window_len;
  j["seed"] = r.seed;
  j["slots"] = r.slots;
  j["cumulative_regret"] = r.cumulative_regret;
  j["average_regret"] = r.average_regret;
  j["mean_gain"] = r.mean_gain;
  j["mean_optimal_gain"] = r.mean_optimal_gain;
  j["mean_recall_standalone"] = opt_json(r.mean_recall_standalone);
  j["mean_recall_cp"] = opt_json(r.mean_recall_cp);
  return j;
}

RunSummary run_from_json(const Json& j) {
  RunSummary r;
  r.policy = j.at("policy").get<std::string>();
  r.params.beta = j.at("beta").get<double>();
  r.params.epoch_len = j.at("epoch_len").get<int>();
  r.params.window_len = j.at("window_len").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.slots = j.at("slots").get<Slot>();
  r.cumulative_regret = j.at("cumulative_regret").get<double>();
  r.average_regret = j.at("average_regret").get<double>();
  r.mean_gain = j.at("mean_gain").get<double>();
  r.mean_optimal_gain = j.at("mean_optimal_gain").get<double>();
  r.mean_recall_standalone = opt_from(j.at("mean_recall_standalone"));
  r.mean_recall_cp = opt_from(j.at("mean_recall_cp"));
  return r;
}

std::string slot_csv(std::span<const SlotMetrics> slots) {
  std::ostringstream os;
  write_slot_csv(os, slots);
  return os.str();
}

}  // namespace

void write_slot_csv(std::ostream& out, std::span<const SlotMetrics> slots) {
  out << kSlotCsvHeader << '\n';
  for (const auto& m : slots) {
    out << m.slot << ',' << m.candidate_count << ',';
    if (m.scheduled_cov) out << raw(*m.scheduled_cov);
    out << ',' << format_double(m.observed_gain) << ',' << format_double(m.optimal_gain) << ','
        << format_double(m.regret_increment) << ',' << opt(m.recall_standalone) << ',' << opt(m.recall_cp) << '\n';
  }
}

std::vector<SlotMetrics> read_slot_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kSlotCsvHeader) {
    throw std::runtime_error("slot CSV: unexpected header");
  }
  std::vector<SlotMetrics> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    auto fail = [&]() -> void { throw std::runtime_error("slot CSV: malformed line " + std::to_string(lineno)); };
    if (f.size() != 8) fail();
    auto num = [&](std::string_view s) {
      const auto x = parse_double(s);
      if (!x) fail();
      return *x;
    };
    auto maybe = [&](std::string_view s) -> std::optional<double> {
      if (trim(s).empty()) return std::nullopt;
      return num(s);
    };
    SlotMetrics m;
    const auto slot = parse_int(f[0]);
    const auto count = parse_int(f[1]);
    if (!slot || !count) fail();
    m.slot = *slot;
    m.candidate_count = static_cast<std::size_t>(*count);
    if (!trim(f[2]).empty()) {
      const auto id = parse_int(f[2]);
      if (!id) fail();
      m.scheduled_cov = cov(static_cast<std::uint32_t>(*id));
    }
    m.observed_gain = num(f[3]);
    m.optimal_gain = num(f[4]);
    m.regret_increment = num(f[5]);
    m.recall_standalone = maybe(f[6]);
    m.recall_cp = maybe(f[7]);
    out.push_back(m);
  }
  return out;
}

void write_gain_matrix_csv(std::ostream& out, const Tape& tape) {
  out << kGainCsvHeader << '\n';
  for (const auto& s : tape.slots) {
    for (std::size_t i = 0; i < s.candidates.size(); ++i) {
      out << s.slot << ',' << raw(s.candidates[i].id) << ',' << format_double(s.gains[i]) << '\n';
    }
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : result.rows) {
    const auto& p = row.point;
    const bool uses_beta = p.policy == "mass" || p.policy == "sw-ucb" || p.policy == "earliest-activated";
    out << p.policy << ',' << (uses_beta ? format_double(p.params.beta) : "") << ','
        << (p.policy == "etc" ? std::to_string(p.params.epoch_len) : "") << ','
        << (p.policy == "sw-ucb" ? std::to_string(p.params.window_len) : "") << ','
        << format_double(row.mean_regret) << ',' << format_double(row.std_regret) << ','
        << format_double(row.mean_gain) << ',' << format_double(row.std_gain) << ','
        << (row.recall.empty() ? "" : format_double(row.mean_recall)) << ',' << (row.best ? 1 : 0) << '\n';
  }
}

Summary make_summary(const ExperimentConfig& cfg, std::span<const RunResult> runs) {
  if (runs.empty()) throw std::invalid_argument("no results to report");
  Summary s;
  s.code_version = COOPSCHED_VERSION;
  s.config = dump_config(cfg);
  std::vector<double> regret;
  std::vector<double> gain;
  std::vector<double> recall;
  for (const auto& r : runs) {
    s.seeds.push_back(r.summary.seed);
    s.runs.push_back(r.summary);
    regret.push_back(r.summary.average_regret);
    gain.push_back(r.summary.mean_gain);
    if (r.summary.mean_recall_cp) recall.push_back(*r.summary.mean_recall_cp);
  }
  s.mean_average_regret = mean(regret);
  s.mean_gain = mean(gain);
  if (!recall.empty()) s.mean_recall_cp = mean(recall);
  return s;
}

std::string summary_to_json(const Summary& s) {
  Json j;
  j["code_version"] = s.code_version;
  Json cfg = Json::object();
  for (const auto& [k, v] : s.config) cfg[k] = v;
  j["config"] = cfg;
  j["seeds"] = s.seeds;
  Json runs = Json::array();
  for (const auto& r : s.runs) runs.push_back(run_to_json(r));
  j["runs"] = runs;
  j["aggregate"] = {{"mean_average_regret", s.mean_average_regret},
                    {"mean_gain", s.mean_gain},
                    {"mean_recall_cp", opt_json(s.mean_recall_cp)}};
  return j.dump(2) + "\n";
}

Summary summary_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  Summary s;
  s.code_version = j.at("code_version").get<std::string>();
  for (const auto& [k, v] : j.at("config").items()) s.config.emplace_back(k, v.get<std::string>());
  s.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  for (const auto& r : j.at("runs")) s.runs.push_back(run_from_json(r));
  const auto& agg = j.at("aggregate");
  s.mean_average_regret = agg.at("mean_average_regret").get<double>();
  s.mean_gain = agg.at("mean_gain").get<double>();
  s.mean_recall_cp = opt_from(agg.at("mean_recall_cp"));
  return s;
}

Summary read_summary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return summary_from_json(ss.str());
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_run_outputs(const std::filesystem::path& dir, const ExperimentConfig& cfg,
                       std::span<const RunResult> runs) {
  const Summary summary = make_summary(cfg, runs);
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  for (const auto& r : runs) {
    files.emplace_back(dir / ("slots_seed" + std::to_string(r.summary.seed) + ".csv"), slot_csv(r.slots));
  }
  files.emplace_back(dir / "summary.json", summary_to_json(summary));
  std::filesystem::create_directories(dir);
  for (const auto& [path, content] : files) write_file_atomic(path, content);
}

void write_sweep_outputs(const std::filesystem::path& dir, const ExperimentConfig& cfg, const SweepResult& result) {
  if (result.rows.empty()) throw std::invalid_argument("no results to report");
  std::ostringstream csv;
  write_sweep_csv(csv, result);
  Json j;
  j["code_version"] = COOPSCHED_VERSION;
  Json c = Json::object();
  for (const auto& [k, v] : dump_config(cfg)) c[k] = v;
  j["config"] = c;
  j["seeds"] = result.seeds;
  Json best = Json::object();
  for (const auto& [name, idx] : result.best) {
    const auto& row = result.rows[idx];
    best[name] = {{"beta", row.point.params.beta},
                  {"epoch_len", row.point.params.epoch_len},
                  {"window_len", row.point.params.window_len},
                  {"mean_regret", row.mean_regret},
                  {"std_regret", row.std_regret},
                  {"mean_gain", row.mean_gain}};
  }
  j["best"] = best;
  std::filesystem::create_directories(dir);
  write_file_atomic(dir / "sweep.csv", csv.str());
  write_file_atomic(dir / "sweep_summary.json", j.dump(2) + "\n");
}

std::string render_summary(const Summary& s) {
  std::ostringstream os;
  os << "code version " << s.code_version << ", " << s.runs.size() << " run(s)\n";
  os << std::left << std::setw(20) << "policy" << std::setw(8) << "seed" << std::setw(10) << "slots" << std::setw(24)
     << "avg_regret" << std::setw(24) << "mean_gain" << "mean_recall_cp\n";
  for (const auto& r : s.runs) {
    os << std::setw(20) << r.policy << std::setw(8) << r.seed << std::setw(10) << r.slots << std::setw(24)
       << format_double(r.average_regret) << std::setw(24) << format_double(r.mean_gain)
       << (r.mean_recall_cp ? format_double(*r.mean_recall_cp) : "-") << '\n';
  }
  os << "mean average regret " << format_double(s.mean_average_regret) << ", mean gain "
     << format_double(s.mean_gain);
  if (s.mean_recall_cp) os << ", mean CP recall " << format_double(*s.mean_recall_cp);
  os << '\n';
  return os.str();
}

}  // namespace coopsched::harness
