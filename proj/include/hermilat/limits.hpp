#pragma once

#include <cstdint>
#include <string>

namespace hermilat {

// Size caps that keep exhaustive checks interactive. All of them can be
// lifted with --force-cap or HERMILAT_CAP_OVERRIDE=1; lifting prints a
// warning to stderr once.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;
inline constexpr std::size_t kMaxDimension = 8;
inline constexpr std::uint64_t kMaxSubspaces = 20000;
inline constexpr std::uint64_t kMaxVectorScan = 1u << 24;
inline constexpr std::uint64_t kMaxCarrier = 1u << 20;
inline constexpr std::size_t kMaxCongruenceLattice = 500;
inline constexpr std::uint64_t kMaxSimilaritySearch = 1000000;
inline constexpr std::uint64_t kMaxRankOneScan = 1000000;

void set_force_caps(bool on);
bool caps_forced();

// Returns true when `value <= cap`, or when caps are forced (with a warning
// naming `what`). Callers throw their own error on false.
bool within_cap(std::uint64_t value, std::uint64_t cap, const std::string& what);

}  // namespace hermilat
