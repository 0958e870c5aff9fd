#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fanoturan/graph.hpp"

namespace fanoturan {

inline constexpr int kMaxVertices = 64;

constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// A 3-element vertex set with a < b < c.
struct Triple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  auto operator<=>(const Triple&) const = default;
};

/// Sorts the three vertices; throws ParameterError unless they are distinct and non-negative.
Triple make_triple(Vertex x, Vertex y, Vertex z);

/// Colexicographic rank: C(c,3) + C(b,2) + a. Ranks of triples on {0..n-1} are exactly 0..C(n,3)-1,
/// so a vertex added later only appends ranks.
constexpr std::uint32_t triple_rank(const Triple& t) {
  return static_cast<std::uint32_t>(binomial(t.c, 3) + binomial(t.b, 2) + t.a);
}
Triple triple_unrank(std::uint32_t rank);

constexpr bool colex_less(const Triple& l, const Triple& r) { return triple_rank(l) < triple_rank(r); }

/// 3-uniform hypergraph on vertices {0..n-1}; the edge set is a dense bitset indexed by triple_rank.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n);

  static Hypergraph from_edges(int n, std::span<const Triple> edges);
  /// Edge set given as a bitmask over triple ranks (requires C(n,3) <= 64, i.e. n <= 8).
  static Hypergraph from_mask(int n, std::uint64_t mask);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::int64_t edge_count() const;
  [[nodiscard]] bool has_edge(const Triple& t) const;
  [[nodiscard]] bool has_edge(Vertex x, Vertex y, Vertex z) const { return has_edge(make_triple(x, y, z)); }

  void add_edge(const Triple& t);
  void add_edge(Vertex x, Vertex y, Vertex z) { add_edge(make_triple(x, y, z)); }
  void remove_edge(const Triple& t);

  /// Edges in colexicographic order.
  [[nodiscard]] std::vector<Triple> edges() const;
  [[nodiscard]] int degree(Vertex v) const;

  /// perm[v] is the new label of vertex v; perm must be a permutation of {0..n-1}.
  [[nodiscard]] Hypergraph relabel(std::span<const Vertex> perm) const;
  /// Subhypergraph induced on `keep`, relabelled to {0..|keep|-1} in increasing order.
  [[nodiscard]] Hypergraph induced(VertexSet keep) const;

  [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }
  [[nodiscard]] std::uint64_t mask() const;  // n <= 8 only

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void check_triple(const Triple& t) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class Family { complete, balanced_bipartite, j7, fano, pasch };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

/// Lines of the Fano plane on points 0..6 (the 1-indexed set 123 345 156 147 367 257 246, shifted down).
inline constexpr std::array<std::array<Vertex, 3>, 7> kFanoLines{{
    {0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 3, 6}, {2, 5, 6}, {1, 4, 6}, {1, 3, 5}}};

/// The two parity classes of transversals of the matching {x1x2, x3x4, x5x6}, written with
/// x_i -> i-1. Each class is a Pasch configuration.
inline constexpr std::array<std::array<std::array<int, 3>, 4>, 2> kPaschPatterns{{
    {{{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}}},
    {{{1, 3, 5}, {1, 2, 4}, {0, 3, 4}, {0, 2, 5}}}}};

/// Named constructions. balanced_bipartite puts X = {0..floor(n/2)-1}, Y = the rest;
/// j7 removes the five triples through the pair {0,1}; fano uses kFanoLines; pasch uses kPaschPatterns[0].
Hypergraph construct(Family family, int n);

/// b(n) = ((n-2)/2) * floor(n^2/4), the edge count of the balanced complete bipartite hypergraph.
std::int64_t b_formula(int n);
/// C(n,3) - C(floor(n/2),3) - C(floor((n+1)/2),3); the same number by the other closed form.
std::int64_t b_formula_by_complement(int n);

Hypergraph complement(const Hypergraph& h);
Graph link_graph(const Hypergraph& h, Vertex v);

struct SplitCounts {
  std::int64_t e0 = 0, e1 = 0, e2 = 0, e3 = 0;
  friend bool operator==(const SplitCounts&, const SplitCounts&) = default;
};
/// e_i = number of edges meeting k in exactly i vertices.
SplitCounts edge_split_counts(const Hypergraph& h, VertexSet k);

/// Number of pairs {a,b} inside k with {v,a,b} an edge. Throws if v is in k or |k| < 2.
int degree_in_set(const Hypergraph& h, Vertex v, VertexSet k);

}  // namespace fanoturan
