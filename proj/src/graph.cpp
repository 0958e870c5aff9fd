#include "fanoturan/graph.hpp"

#include <string>

#include "fanoturan/error.hpp"

namespace fanoturan {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > 64) throw ParameterError("graph vertex count must lie in [0, 64], got " + std::to_string(n));
  rows_.assign(n, 0);
}

Graph Graph::from_pair_mask(int n, std::uint64_t mask) {
  if (n > 11) throw ParameterError("pair mask encoding needs n <= 11");
  Graph g(n);
  for (Vertex b = 1; b < n; ++b)
    for (Vertex a = 0; a < b; ++a)
      if ((mask >> pair_rank(a, b)) & 1U) g.add_edge(a, b);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw ParameterError("invalid graph edge");
  rows_[u] |= vertex_bit(v);
  rows_[v] |= vertex_bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw ParameterError("invalid graph edge");
  rows_[u] &= ~vertex_bit(v);
  rows_[v] &= ~vertex_bit(u);
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex b = 1; b < n_; ++b)
    for (Vertex a = 0; a < b; ++a)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

std::uint64_t Graph::pair_mask() const {
  if (n_ > 11) throw ParameterError("pair mask encoding needs n <= 11");
  std::uint64_t m = 0;
  for (const auto& [a, b] : edges()) m |= std::uint64_t{1} << pair_rank(a, b);
  return m;
}

Graph Graph::relabel(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ParameterError("permutation size differs from n");
  Graph out(n_);
  for (const auto& [a, b] : edges()) out.add_edge(perm[a], perm[b]);
  return out;
}

namespace {

bool match_rest(const std::vector<VertexSet>& rows, VertexSet unmatched) {
  if (unmatched == 0) return true;
  const Vertex v = std::countr_zero(unmatched);
  const VertexSet rest = unmatched & ~vertex_bit(v);
  for (auto cand = rows[v] & rest; cand != 0; cand &= cand - 1)
    if (match_rest(rows, rest & ~vertex_bit(std::countr_zero(cand)))) return true;
  return false;
}

}  // namespace

bool Graph::has_perfect_matching() const {
  if (n_ % 2 != 0) return false;
  return match_rest(rows_, all_vertices(n_));
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex b = 1; b < n; ++b)
    for (Vertex a = 0; a < b; ++a) g.add_edge(a, b);
  return g;
}

}  // namespace fanoturan
