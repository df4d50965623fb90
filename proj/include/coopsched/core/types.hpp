#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>

namespace coopsched {

/// Identifier of a cooperative vehicle (an arm, in bandit terms).
enum class CovId : std::uint32_t {};

constexpr std::uint32_t raw(CovId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr CovId cov(std::uint32_t v) noexcept { return static_cast<CovId>(v); }

inline std::ostream& operator<<(std::ostream& os, CovId id) { return os << raw(id); }

/// Discrete time-slot index. Slots start at 1.
using Slot = std::int64_t;

/// What a scheduler is allowed to know about one candidate in one slot.
struct CandidateView {
  CovId id{};
  double distance_m = 0.0;
  Slot slot = 0;
};

using CandidateSet = std::span<const CandidateView>;

}  // namespace coopsched
