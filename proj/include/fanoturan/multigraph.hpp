#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fanoturan/certificate.hpp"
#include "fanoturan/graph.hpp"
#include "json.hpp"

namespace fanoturan {

/// Subset of the layers {0..p-1} as a bitmask.
using LayerSet = std::uint16_t;
inline constexpr int kMaxLayers = 16;

/// A p-tuple of simple graphs on a shared vertex set, stored per vertex pair as the set
/// M(u,v) of layers containing that pair.
class PMultigraph {
 public:
  PMultigraph() = default;
  PMultigraph(int p, int n);

  static PMultigraph from_layers(std::span<const Graph> layers);

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int n() const { return n_; }

  [[nodiscard]] LayerSet layers(Vertex u, Vertex v) const;
  void set_layers(Vertex u, Vertex v, LayerSet s);
  void add_edge(int layer, Vertex u, Vertex v);

  /// e(u,v) = |M(u,v)|
  [[nodiscard]] int multiplicity(Vertex u, Vertex v) const;
  /// e(G), the total over all layers.
  [[nodiscard]] std::int64_t total_edges() const;
  /// e(X): layered edges with both ends in x.
  [[nodiscard]] std::int64_t edges_within(VertexSet x) const;
  [[nodiscard]] Graph layer(int i) const;

  [[nodiscard]] PMultigraph relabel(std::span<const Vertex> perm) const;
  /// perm[i] is the new index of layer i.
  [[nodiscard]] PMultigraph permute_layers(std::span<const int> perm) const;

  [[nodiscard]] std::span<const LayerSet> membership() const { return membership_; }

  friend bool operator==(const PMultigraph&, const PMultigraph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  int p_ = 0;
  int n_ = 0;
  std::vector<LayerSet> membership_;  // indexed by pair_rank
};

/// Layers i, j, k (distinct) and vertices w, x, y, z (distinct) with wx, yz in G_i; wy, xz in G_j;
/// wz, xy in G_k.
struct CrossingWitness {
  int i = 0, j = 0, k = 0;
  Vertex w = 0, x = 0, y = 0, z = 0;
  friend bool operator==(const CrossingWitness&, const CrossingWitness&) = default;
};

bool is_crossing_witness(const PMultigraph& g, const CrossingWitness& c);

/// Lexicographically first (i, j, k) of pairwise distinct layers with i in a, j in b, k in c.
std::optional<std::array<int, 3>> distinct_representatives(LayerSet a, LayerSet b, LayerSet c);

/// e+(X) = e(G) - e(V \ X): layered edges with at least one end in x.
std::int64_t e_plus(const PMultigraph& g, VertexSet x);

/// First three crossing pairs in canonical order: 4-sets w<x<y<z lexicographically, then layer
/// triples (i, j, k) lexicographically. None when p < 3 or n < 4.
std::optional<CrossingWitness> has_three_crossing_pairs(const PMultigraph& g);

/// 2 C(n,2) + 2 floor(n^2/4); n >= 4.
std::int64_t f4_formula(int n);

/// Layers 0,1 carry X^(2) and K(X,Y); layers 2,3 carry Y^(2) and K(X,Y), with
/// X = {0..floor(n/2)-1} and Y the rest.
PMultigraph extremal_4multigraph(int n);

/// (all five layers equal to the balanced complete 3-partite graph,
///  extremal_4multigraph(n) plus K(X,Y) as a fifth layer)
std::pair<PMultigraph, PMultigraph> f5_lower_constructions(int n);

/// Balanced complete tripartite (K4-free Turán) graph; parts are residues mod 3.
Graph turan_graph_3(int n);

nlohmann::json to_json(const PMultigraph& g);
PMultigraph pmultigraph_from_json(const nlohmann::json& j);

// --- exact maximisation -----------------------------------------------------------------------

struct MaxEdgesOptions {
  /// Shared across workers and polled every 4096 nodes, so small budgets overshoot slightly.
  std::uint64_t node_budget = 2'000'000'000ULL;
  /// Required for (p, n) = (5, 6).
  bool long_run = false;
  /// Start from the best known crossing-free construction instead of the empty multigraph.
  bool seed_with_constructions = true;
};

struct MaxEdgesResult {
  std::int64_t edges = 0;
  PMultigraph witness;
  std::uint64_t nodes = 0;
};

/// f_p(n) by branch and bound over membership sets, for p in {4, 5} and n in [3, 6].
///
/// Pairs are assigned in colex order. Symmetry breaking: pair {0,1} carries a maximum
/// multiplicity, M(0,1) is a prefix {0..k-1} of the layers, and M(0,2) is a prefix within both
/// {0..k-1} and {k..p-1}. Each completed 4-set is checked for crossing pairs as soon as its last
/// pair is assigned. The bound averages min(f_p(n-1), optimistic completion) over the n vertex-
/// deleted subsets, with f_p(n-1) computed by the same search. Root subtrees run in parallel; the
/// witness is the first optimum in serial depth-first order.
MaxEdgesResult max_edges_no_crossing(int p, int n, const MaxEdgesOptions& options = {});

/// Same search, single-threaded; kept as the reference the parallel version is tested against.
MaxEdgesResult max_edges_no_crossing_serial(int p, int n, const MaxEdgesOptions& options = {});

// --- verifiers -----------------------------------------------------------

/// Thresholds of the 4-vertex 5-multigraph lemma; the defaults are the true statement, other
/// values exist to mutation-test the verifier.
struct FourVertexThresholds {
  int part_i_min_edges = 23;
  int part_i_max_pair_sum = 5;
  int part_ii_min_edges = 22;
};

/// Exhaustive scan of all 32^6 membership assignments on four vertices.
Certificate verify_lemma_4vertex(const FourVertexThresholds& thresholds = {});

/// (a) b(n-5) + F(n-5) + 7(n-5) + 10 < b(n) and
/// (b) b(n-6) + (n-9)/2 + F(n-6) + C(n-6,2) + 10(n-6) + 20 < b(n) for odd n in [9, n_max],
/// with F(m) = (7m^2 - m)/4, compared exactly in quarter units.
enum class Relation { less, greater_equal };
Certificate verify_corollary_inequalities(int n_max, Relation relation = Relation::less);

}  // namespace fanoturan
