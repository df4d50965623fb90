#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "coopsched/world/mobility.hpp"
#include "coopsched/world/trace_io.hpp"

using namespace coopsched::world;

namespace {

const char* kThreeFrames =
    "slot,entity_kind,entity_id,x_m,y_m,heading_rad,length_m,width_m,is_cov,is_ego\n"
    "1,car,1,0,0,0,4.5,1.8,1,1\n"
    "1,car,2,10,0,0,4.5,1.8,1,0\n"
    "1,pedestrian,1,5,8,0,0.6,0.6,0,0\n"
    "2,car,1,1,0,0,4.5,1.8,1,1\n"
    "2,car,2,11,0,0,4.5,1.8,1,0\n"
    "3,car,1,2,0,0,4.5,1.8,1,1\n"
    "3,car,2,12,0,0,4.5,1.8,0,0\n";

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_frames(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(TraceIo, ReadsThreeFrames) {
  std::istringstream in(kThreeFrames);
  const auto frames = read_frames(in);
  ASSERT_EQ(frames.size(), 3u);
  EXPECT_EQ(frames[0].pedestrians.size(), 1u);
  EXPECT_EQ(frames[2].ego_id, 1u);
  EXPECT_FALSE(frames[2].vehicles[1].is_cov);
}

TEST(TraceIo, DuplicateVehicleIdRejected) {
  std::string text = kThreeFrames;
  text += "";
  text.replace(text.find("2,car,2,11"), 10, "2,car,1,11");
  EXPECT_EQ(error_line(text), 5u);
}

TEST(TraceIo, MissingEgoRejected) {
  std::string text = kThreeFrames;
  text.replace(text.find("3,car,1,2,0,0,4.5,1.8,1,1"), 25, "3,car,1,2,0,0,4.5,1.8,1,0");
  EXPECT_EQ(error_line(text), 7u);
}

TEST(TraceIo, NonContiguousSlotsRejected) {
  std::string text = kThreeFrames;
  text.replace(text.find("3,car,1"), 7, "4,car,1");
  text.replace(text.find("3,car,2"), 7, "4,car,2");
  EXPECT_EQ(error_line(text), 7u);
}

TEST(TraceIo, MalformedRowsRejected) {
  std::string text = kThreeFrames;
  text.replace(text.find("10,0,0"), 6, "ten,0,0");
  EXPECT_EQ(error_line(text), 3u);
  EXPECT_EQ(error_line("slot,bad\n"), 1u);
  std::string short_row = kThreeFrames;
  short_row += "4,car,1,2,0\n";
  EXPECT_EQ(error_line(short_row), 9u);
  std::string kind = kThreeFrames;
  kind.replace(kind.find("pedestrian"), 10, "bicycle123");
  EXPECT_EQ(error_line(kind), 4u);
}

TEST(TraceIo, BuildingsFile) {
  std::istringstream in("x_min,y_min,x_max,y_max\n0,0,10,20\n");
  const auto b = read_buildings(in);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].y_max, 20.0);
  std::istringstream bad("x_min,y_min,x_max,y_max\n0,0,-1,20\n");
  EXPECT_THROW(read_buildings(bad), ParseError);
}

TEST(TraceIo, GenerateSaveLoadRoundTrip) {
  ManhattanParams p;
  p.n_cars = 40;
  p.slots = 50;
  p.warmup_s = 5.0;
  const Trace t = generate_manhattan_trace(p);
  const auto dir = std::filesystem::temp_directory_path() / "coopsched_trace_rt";
  std::filesystem::create_directories(dir);
  save_trace(t, dir / "trace.csv", dir / "buildings.csv");
  const Trace back = load_trace(dir / "trace.csv", dir / "buildings.csv");
  EXPECT_EQ(back, t);
  std::filesystem::remove_all(dir);
}

TEST(TraceIo, MissingFile) {
  EXPECT_THROW(load_trace("/nonexistent/trace.csv"), std::runtime_error);
}
