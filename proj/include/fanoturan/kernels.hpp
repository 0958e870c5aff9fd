#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "fanoturan/multigraph.hpp"

namespace fanoturan {

/// Edge set over triple ranks of a hypergraph with n <= 8.
using TripleMask = std::uint64_t;

/// Edge masks of every labelled Fano copy on {0..n-1}, ascending; empty for n < 7. n <= 8.
std::vector<TripleMask> fano_copy_masks(int n);
/// Edge masks of every K_k^(3) on {0..n-1}, ascending. n <= 8.
std::vector<TripleMask> clique_masks(int n, int k);

/// Size-`size` subsets of {0..universe-1} meeting every pattern. A subset of triple ranks is a
/// transversal of the Fano masks exactly when removing it leaves a Fano-free hypergraph.
struct TransversalResult {
  std::vector<TripleMask> survivors;  // ascending
  std::uint64_t space = 0;            // C(universe, size)
  std::uint64_t visited = 0;          // subsets examined or discarded with their whole subtree
  std::uint64_t nodes = 0;            // search-tree nodes expanded
};

struct TransversalOptions {
  bool prune = true;
  /// Append progress frames here; an existing compatible file is resumed.
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t checkpoint_interval = 10'000'000;
};

/// Reference: every subset in lexicographic order, no pruning. universe <= 64, at most 256 patterns.
TransversalResult transversals_serial(int universe, int size, std::span<const TripleMask> patterns);
/// Depth-first over increasing subsets, split across threads by the first two elements.
/// Prunes a subtree once some unmet pattern lies entirely below the next candidate, or once more
/// disjoint unmet patterns remain than picks.
TransversalResult transversals(int universe, int size, std::span<const TripleMask> patterns,
                               const TransversalOptions& options = {});

/// Seven vertices: a six-vertex part on {0..5} missing at most two triples, and the link of
/// vertex 6, any of the 2^15 graphs on {0..5}.
struct LinkScanResult {
  std::uint64_t space = 0;
  std::uint64_t premise = 0;    // link and sub-hypergraph meet the edge thresholds
  std::uint64_t fano_free = 0;  // premise states without a Fano copy
  /// First premise state (link << 20 | sub) that is Fano-free but whose six-vertex part is not B_6.
  std::optional<TripleMask> counterexample;
  /// Over the complete six-vertex part: largest Fano-free link and the first link attaining it.
  int max_free_link = -1;
  std::uint32_t max_free_link_witness = 0;
};

LinkScanResult link_scan_serial(int min_link_edges, int min_sub_edges);
LinkScanResult link_scan(int min_link_edges, int min_sub_edges);

/// All 32^6 membership assignments of a 5-multigraph on four vertices. A state packs
/// M01 | M23 << 5 | M02 << 10 | M13 << 15 | M03 << 20 | M12 << 25.
struct FourVertexScanResult {
  std::uint64_t space = 0;
  std::uint64_t visited = 0;
  std::uint64_t filtered = 0;       // states discarded by the total-edge filter
  std::uint64_t crossing_free = 0;  // among the states actually inspected
  int max_crossing_free_edges = 0;
  std::optional<std::uint32_t> counterexample_i;
  std::optional<std::uint32_t> counterexample_ii;
};

FourVertexScanResult four_vertex_scan_serial(const FourVertexThresholds& thresholds);
FourVertexScanResult four_vertex_scan(const FourVertexThresholds& thresholds);
PMultigraph four_vertex_state(std::uint32_t state);

}  // namespace fanoturan
