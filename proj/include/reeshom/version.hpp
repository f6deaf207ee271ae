#pragma once

#include <cstddef>
#include <cstdint>

namespace reeshom {

inline constexpr const char* kVersion = "0.1.0";

// Materialized chain spaces larger than this are rejected unless forced.
inline constexpr std::uint64_t kDefaultChainCap = 2'000'000;

// Homotopy certificates enumerate basis chains without materializing
// matrices; they get a separate (much larger) enumeration budget.
inline constexpr std::uint64_t kDefaultHomotopyCap = 50'000'000;

// Rees instances with more than this many non-zero elements are rejected
// unless forced: degree-n chain spaces scale as dim^(n+1).
inline constexpr std::size_t kMaxTriples = 4096;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eed5eedULL;

}  // namespace reeshom
