#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fanoturan/canonical.hpp"
#include "fanoturan/certificate.hpp"
#include "fanoturan/hypergraph.hpp"
#include "fanoturan/kernels.hpp"

namespace fanoturan {

enum class Dedup { none, canonical };
enum class Forbidden { fano, tetrahedron };

/// Complements of `target` triples on n <= 8 vertices whose primal avoids `forbidden`.
struct EnumerationPlan {
  int n = 7;
  int target = 5;
  Dedup dedup = Dedup::none;
  Forbidden forbidden = Forbidden::fano;
  bool prune = true;
  std::optional<std::filesystem::path> checkpoint;
};

struct Enumeration {
  std::vector<Hypergraph> complements;  // colex-mask order
  std::uint64_t space = 0;
  std::uint64_t visited = 0;
};

/// With Dedup::canonical only complements equal to their own canonical form are kept.
Enumeration enumerate_complements(const EnumerationPlan& plan);

struct ComplementScan {
  int complement_size = 0;
  std::uint64_t space = 0;
  std::uint64_t visited = 0;
  std::uint64_t survivors = 0;
};

struct ExtremalResult {
  std::int64_t edges = 0;
  std::vector<CanonicalForm> classes;  // ascending, one per isomorphism class
  std::vector<ComplementScan> scans;   // every complement size tried, smallest first
};

struct ExtremalOptions {
  std::optional<std::filesystem::path> checkpoint_dir;
};

/// ex(n, Fano) for n in [4, 8]: complement sizes 0, 1, ... are scanned until some complement
/// meets every Fano copy. Every extremal primal is re-checked with the embedding detector.
ExtremalResult max_fano_free_edges(int n, const ExtremalOptions& options = {});

/// Number of the seven lines sigma(L) that are edges of hbar; hbar has 7 vertices.
int fano_line_count(const Hypergraph& hbar, std::span<const Vertex> sigma);

// --- verifiers; each returns a pass or fail certificate -----------------------------------------

/// All 4- and 5-triple complements on 7 vertices. Fano-free primals must fall into exactly the
/// expected classes (B_7 and J_7 plus `extra_classes`), and any two complement triples must be
/// disjoint or share a pair.
Certificate verify_lemma_n7(std::span<const CanonicalForm> extra_classes = {});

/// Link of v with at least `min_link_edges` edges and a six-vertex part with at least 18 edges:
/// every Fano-free combination has the six-vertex part isomorphic to B_6.
Certificate verify_lemma_2_3(int min_link_edges = 11);

/// Largest Fano-free link over a complete six-set is 10, so e(H) <= 20 + 10 + 10 + 6 = 46 < b(8).
Certificate verify_fact_2_4();

/// Over all 2^15 graphs on six vertices: 11 edges force a perfect matching, and the 10-edge graphs
/// without one are the six labellings of K_5 plus an isolated vertex.
Certificate verify_matching_facts();

/// Every n-vertex hypergraph with b(n) edges contains a tetrahedron (n in [4, 7]); also checks
/// 3 C(n,3) < 4 b(n) for n in [4, 64].
Certificate verify_fact_tetra(std::span<const int> ns);

/// b(n-4) + f4(n-4) + 5(n-4) + additive = b(n) for odd n in [9, n_max], and
/// b(n) - b(n-1) = 3 C(n/2, 2) for even n in [8, n_max].
Certificate verify_section4_arithmetic(int n_max, std::int64_t additive = 4);

/// Embedding, crossing-pair and Pasch detectors agree on `samples` seeded random hypergraphs per n.
Certificate verify_detector_agreement(std::uint64_t seed, std::span<const int> ns, int samples = 1000);

/// ex(n, Fano) and its extremal classes against the known values: C(n,3) with K_n^(3) for n <= 6,
/// 30 with {B_7, J_7} for n = 7, 48 with {B_8} for n = 8.
Certificate verify_ex(int n, const ExtremalOptions& options = {});

/// Each triple present independently with probability `density`; a triple is kept when the top
/// 53 bits of the next draw, read as a fraction of 1, fall below the density.
Hypergraph random_hypergraph(int n, double density, std::mt19937_64& rng);

}  // namespace fanoturan
