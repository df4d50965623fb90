#include "coopsched/world/trace_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "coopsched/core/text.hpp"

namespace coopsched::world {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

double field_double(std::string_view s, std::size_t line, const char* name) {
  const auto v = parse_double(s);
  if (!v) throw ParseError(line, std::string("bad ") + name + " '" + std::string(s) + "'");
  return *v;
}

std::int64_t field_int(std::string_view s, std::size_t line, const char* name) {
  const auto v = parse_int(s);
  if (!v) throw ParseError(line, std::string("bad ") + name + " '" + std::string(s) + "'");
  return *v;
}

bool field_flag(std::string_view s, std::size_t line, const char* name) {
  const auto v = parse_int(s);
  if (!v || (*v != 0 && *v != 1)) {
    throw ParseError(line, std::string("bad ") + name + " '" + std::string(s) + "', expected 0 or 1");
  }
  return *v == 1;
}

std::uint32_t field_id(std::string_view s, std::size_t line) {
  const auto v = field_int(s, line, "entity_id");
  if (v < 0 || v > static_cast<std::int64_t>(UINT32_MAX)) throw ParseError(line, "entity_id out of range");
  return static_cast<std::uint32_t>(v);
}

void expect_header(std::istream& in, const char* header) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header row");
  if (trim(line) != header) throw ParseError(1, "unexpected header '" + std::string(trim(line)) + "'");
}

}  // namespace

std::vector<WorldFrame> read_frames(std::istream& in) {
  expect_header(in, kTraceHeader);
  std::vector<WorldFrame> frames;
  std::vector<std::size_t> first_line;
  std::vector<int> ego_count;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) {
      throw ParseError(lineno, "expected 10 fields, got " + std::to_string(f.size()));
    }
    const Slot slot = field_int(f[0], lineno, "slot");
    if (frames.empty() || frames.back().slot != slot) {
      if (!frames.empty() && slot != frames.back().slot + 1) {
        throw ParseError(lineno, "non-contiguous slot " + std::to_string(slot) + " after " +
                                     std::to_string(frames.back().slot));
      }
      frames.emplace_back();
      frames.back().slot = slot;
      first_line.push_back(lineno);
      ego_count.push_back(0);
    }
    WorldFrame& fr = frames.back();
    const std::string_view kind = trim(f[1]);
    const std::uint32_t id = field_id(f[2], lineno);
    const double x = field_double(f[3], lineno, "x_m");
    const double y = field_double(f[4], lineno, "y_m");
    const double heading = field_double(f[5], lineno, "heading_rad");
    const double length = field_double(f[6], lineno, "length_m");
    const double width = field_double(f[7], lineno, "width_m");
    const bool is_cov = field_flag(f[8], lineno, "is_cov");
    const bool is_ego = field_flag(f[9], lineno, "is_ego");
    if (kind == "car") {
      fr.vehicles.push_back(Vehicle{id, {x, y}, heading, length, width, is_cov});
      if (is_ego) {
        fr.ego_id = id;
        ++ego_count.back();
      }
    } else if (kind == "pedestrian") {
      if (is_cov || is_ego) throw ParseError(lineno, "pedestrian flagged as CoV or ego");
      fr.pedestrians.push_back(Pedestrian{id, {x, y}, heading, length, width});
    } else {
      throw ParseError(lineno, "unknown entity_kind '" + std::string(kind) + "'");
    }
  }
  for (std::size_t k = 0; k < frames.size(); ++k) {
    if (ego_count[k] != 1) {
      throw ParseError(first_line[k], "slot " + std::to_string(frames[k].slot) + " has " +
                                          std::to_string(ego_count[k]) + " ego rows, expected 1");
    }
    try {
      frames[k].validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(first_line[k], "slot " + std::to_string(frames[k].slot) + ": " + e.what());
    }
  }
  return frames;
}

std::vector<Rect> read_buildings(std::istream& in) {
  expect_header(in, kBuildingsHeader);
  std::vector<Rect> out;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 4) throw ParseError(lineno, "expected 4 fields, got " + std::to_string(f.size()));
    Rect r{field_double(f[0], lineno, "x_min"), field_double(f[1], lineno, "y_min"),
           field_double(f[2], lineno, "x_max"), field_double(f[3], lineno, "y_max")};
    if (!(r.x_max > r.x_min) || !(r.y_max > r.y_min)) throw ParseError(lineno, "degenerate building");
    out.push_back(r);
  }
  return out;
}

void write_frames(std::ostream& out, const std::vector<WorldFrame>& frames) {
  out << kTraceHeader << '\n';
  for (const auto& fr : frames) {
    for (const auto& v : fr.vehicles) {
      out << fr.slot << ",car," << v.id << ',' << format_double(v.center.x) << ','
          << format_double(v.center.y) << ',' << format_double(v.heading) << ','
          << format_double(v.length) << ',' << format_double(v.width) << ',' << (v.is_cov ? 1 : 0)
          << ',' << (v.id == fr.ego_id ? 1 : 0) << '\n';
    }
    for (const auto& p : fr.pedestrians) {
      out << fr.slot << ",pedestrian," << p.id << ',' << format_double(p.position.x) << ','
          << format_double(p.position.y) << ',' << format_double(p.heading) << ','
          << format_double(p.length) << ',' << format_double(p.width) << ",0,0\n";
    }
  }
}

void write_buildings(std::ostream& out, const std::vector<Rect>& buildings) {
  out << kBuildingsHeader << '\n';
  for (const auto& r : buildings) {
    out << format_double(r.x_min) << ',' << format_double(r.y_min) << ',' << format_double(r.x_max)
        << ',' << format_double(r.y_max) << '\n';
  }
}

Trace load_trace(const std::filesystem::path& trace_csv, const std::filesystem::path& buildings_csv) {
  Trace t;
  std::ifstream in(trace_csv);
  if (!in) throw std::runtime_error("cannot open trace file " + trace_csv.string());
  t.frames = read_frames(in);
  if (!buildings_csv.empty()) {
    std::ifstream bin(buildings_csv);
    if (!bin) throw std::runtime_error("cannot open buildings file " + buildings_csv.string());
    t.buildings = read_buildings(bin);
  }
  return t;
}

void save_trace(const Trace& trace, const std::filesystem::path& trace_csv,
                const std::filesystem::path& buildings_csv) {
  std::ofstream out(trace_csv);
  if (!out) throw std::runtime_error("cannot write trace file " + trace_csv.string());
  write_frames(out, trace.frames);
  std::ofstream bout(buildings_csv);
  if (!bout) throw std::runtime_error("cannot write buildings file " + buildings_csv.string());
  write_buildings(bout, trace.buildings);
  if (!out || !bout) throw std::runtime_error("write failed");
}

}  // namespace coopsched::world
