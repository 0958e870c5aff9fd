#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "fanoturan/kernels.hpp"

namespace fanoturan::detail {

inline constexpr std::uint64_t kSubTriples = 20;  // C(6,3)
inline constexpr std::uint64_t kFullSub = (std::uint64_t{1} << kSubTriples) - 1;

/// Six-vertex parts missing at most two of the 20 triples, complements in ascending order of
/// (size, mask).
std::vector<std::uint32_t> near_complete_subs();

/// A six-vertex part is B_6 exactly when it misses two disjoint triples.
bool is_b6_sub(std::uint32_t sub);

inline bool contains_any(TripleMask h, const std::vector<TripleMask>& patterns) {
  for (auto p : patterns)
    if ((h & p) == p) return true;
  return false;
}

/// crossing[(a << 10) | (b << 5) | c] for p = 5.
const std::vector<std::uint8_t>& crossing_table_5();

inline std::uint32_t pack_four_vertex(std::uint32_t m01, std::uint32_t m23, std::uint32_t m02, std::uint32_t m13,
                                      std::uint32_t m03, std::uint32_t m12) {
  return m01 | m23 << 5 | m02 << 10 | m13 << 15 | m03 << 20 | m12 << 25;
}

// Binomial coefficient table for the transversal scans, universe <= 64.
std::uint64_t choose(int n, int k);

}  // namespace fanoturan::detail
