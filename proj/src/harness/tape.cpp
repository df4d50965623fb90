#include "coopsched/harness/tape.hpp"

#include <exception>

#include "coopsched/rmab/reflected_walk.hpp"
#include "coopsched/world/mobility.hpp"
#include "coopsched/world/trace_io.hpp"

namespace coopsched::harness {

Tape synthetic_tape(const rmab::PopulationParams& params, double g_max, Slot slots, std::uint64_t seed) {
  rmab::ArmPopulation pop(params, seed);
  Tape tape;
  tape.slots.reserve(static_cast<std::size_t>(slots));
  for (Slot t = 1; t <= slots; ++t) {
    pop.step();
    TapeSlot s;
    s.slot = t;
    for (const auto& [id, arm] : pop.arms()) {
      s.candidates.push_back({id, 0.0, t});
      s.gains.push_back(rmab::normalize_gain(arm.value(), g_max));
    }
    tape.slots.push_back(std::move(s));
  }
  return tape;
}

Tape world_tape(const world::Trace& trace, const world::WorldSettings& settings, std::uint64_t seed,
                bool reference_scanner) {
  world::WorldEvaluator eval(trace.buildings, settings, seed);
  eval.use_reference_scanner(reference_scanner);
  Tape tape;
  tape.has_recall = true;
  tape.slots.reserve(trace.frames.size());
  for (const auto& frame : trace.frames) {
    auto e = eval.evaluate(frame);
    tape.slots.push_back({e.slot, std::move(e.candidates), std::move(e.gains), std::move(e.recall_cp),
                          e.recall_standalone});
  }
  return tape;
}

Tape make_tape(const ExperimentConfig& cfg, std::uint64_t seed) {
  switch (cfg.env) {
    case EnvKind::kSynthetic:
      return synthetic_tape(cfg.population, cfg.g_max, cfg.slots, seed);
    case EnvKind::kWorld: {
      world::ManhattanParams m = cfg.mobility;
      m.slots = cfg.slots;
      m.seed = seed;
      const auto trace = world::generate_manhattan_trace(m);
      return world_tape(trace, cfg.world_settings(), seed);
    }
    case EnvKind::kTrace: {
      auto trace = world::load_trace(cfg.trace_path, cfg.buildings_path);
      if (static_cast<Slot>(trace.frames.size()) > cfg.slots) trace.frames.resize(static_cast<std::size_t>(cfg.slots));
      return world_tape(trace, cfg.world_settings(), seed);
    }
  }
  throw std::logic_error("unknown environment");
}

std::vector<Tape> make_tapes(const ExperimentConfig& cfg, const std::vector<std::uint64_t>& seeds) {
  std::vector<Tape> tapes(seeds.size());
  std::exception_ptr error;
  const auto n = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      tapes[static_cast<std::size_t>(i)] = make_tape(cfg, seeds[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return tapes;
}

}  // namespace coopsched::harness
