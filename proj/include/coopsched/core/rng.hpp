#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace coopsched {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed for an independent named sub-stream. Changing the draws of one stream
// (say "channel") never shifts the draws of another ("mobility").
std::uint64_t derive_seed(std::uint64_t base, std::string_view stream, std::uint64_t a = 0,
                          std::uint64_t b = 0) noexcept;

inline Rng make_rng(std::uint64_t base, std::string_view stream, std::uint64_t a = 0,
                    std::uint64_t b = 0) {
  return Rng{derive_seed(base, stream, a, b)};
}

// Uniform on (0, 1]; never returns zero.
double uniform_open0(Rng& rng);

}  // namespace coopsched
