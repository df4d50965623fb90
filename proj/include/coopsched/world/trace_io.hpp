#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "coopsched/world/frame.hpp"

namespace coopsched::world {

/// Malformed trace or building file. `line` is 1-based (the header is line 1).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline constexpr const char* kTraceHeader =
    "slot,entity_kind,entity_id,x_m,y_m,heading_rad,length_m,width_m,is_cov,is_ego";
inline constexpr const char* kBuildingsHeader = "x_min,y_min,x_max,y_max";

/// Frames are grouped by slot in ascending contiguous order and each one is
/// validated; every failure is reported as a ParseError.
std::vector<WorldFrame> read_frames(std::istream& in);
std::vector<Rect> read_buildings(std::istream& in);

void write_frames(std::ostream& out, const std::vector<WorldFrame>& frames);
void write_buildings(std::ostream& out, const std::vector<Rect>& buildings);

/// An empty `buildings_csv` path means an open map.
Trace load_trace(const std::filesystem::path& trace_csv,
                 const std::filesystem::path& buildings_csv = {});
void save_trace(const Trace& trace, const std::filesystem::path& trace_csv,
                const std::filesystem::path& buildings_csv);

}  // namespace coopsched::world
