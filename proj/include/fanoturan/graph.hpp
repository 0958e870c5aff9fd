#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fanoturan {

using Vertex = int;
/// Subset of {0..63} as a bitmask.
using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(Vertex v) { return VertexSet{1} << v; }
constexpr VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : (vertex_bit(n) - 1); }
constexpr int set_size(VertexSet s) { return std::popcount(s); }

/// Colex rank of the pair a < b: C(b,2) + a.
constexpr std::uint32_t pair_rank(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::uint32_t>(b * (b - 1) / 2 + a);
}

/// Simple graph on {0..n-1}, n <= 64, one adjacency bitmask per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Edge set as a bitmask over pair_rank (n <= 11).
  static Graph from_pair_mask(int n, std::uint64_t mask);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  [[nodiscard]] VertexSet neighbors(Vertex v) const { return rows_[v]; }
  [[nodiscard]] int degree(Vertex v) const { return std::popcount(rows_[v]); }
  [[nodiscard]] std::int64_t edge_count() const;
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;
  [[nodiscard]] std::uint64_t pair_mask() const;

  [[nodiscard]] Graph relabel(std::span<const Vertex> perm) const;
  [[nodiscard]] bool has_perfect_matching() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

Graph complete_graph(int n);

}  // namespace fanoturan
