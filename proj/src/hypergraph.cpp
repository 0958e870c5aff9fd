#include "fanoturan/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fanoturan/error.hpp"

namespace fanoturan {
namespace {

constexpr std::uint32_t kMaxTriples = static_cast<std::uint32_t>(binomial(kMaxVertices, 3));

const std::vector<Triple>& unrank_table() {
  static const std::vector<Triple> table = [] {
    std::vector<Triple> t;
    t.reserve(kMaxTriples);
    for (Vertex c = 2; c < kMaxVertices; ++c)
      for (Vertex b = 1; b < c; ++b)
        for (Vertex a = 0; a < b; ++a) t.push_back({a, b, c});
    std::sort(t.begin(), t.end(), colex_less);
    return t;
  }();
  return table;
}

std::size_t word_count(int n) { return (static_cast<std::size_t>(binomial(n, 3)) + 63) / 64; }

}  // namespace

Triple make_triple(Vertex x, Vertex y, Vertex z) {
  std::array<Vertex, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (v[0] < 0 || v[0] == v[1] || v[1] == v[2])
    throw ParameterError("triple needs three distinct non-negative vertices");
  return {v[0], v[1], v[2]};
}

Triple triple_unrank(std::uint32_t rank) {
  if (rank >= kMaxTriples) throw ParameterError("triple rank out of range");
  return unrank_table()[rank];
}

Hypergraph::Hypergraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw ParameterError("hypergraph vertex count must lie in [0, 64], got " + std::to_string(n));
  words_.assign(word_count(n), 0);
}

Hypergraph Hypergraph::from_edges(int n, std::span<const Triple> edges) {
  Hypergraph h(n);
  for (const auto& e : edges) h.add_edge(e);
  return h;
}

Hypergraph Hypergraph::from_mask(int n, std::uint64_t mask) {
  if (n > 8) throw ParameterError("mask encoding needs n <= 8");
  Hypergraph h(n);
  const auto total = static_cast<int>(binomial(n, 3));
  if (total < 64 && (mask >> total) != 0) throw ParameterError("mask has bits beyond C(n,3)");
  if (!h.words_.empty()) h.words_[0] = mask;
  return h;
}

void Hypergraph::check_triple(const Triple& t) const {
  if (t.a < 0 || !(t.a < t.b && t.b < t.c) || t.c >= n_)
    throw ParameterError("triple is not an ascending set of vertices below n");
}

std::int64_t Hypergraph::edge_count() const {
  std::int64_t m = 0;
  for (auto w : words_) m += std::popcount(w);
  return m;
}

bool Hypergraph::has_edge(const Triple& t) const {
  check_triple(t);
  const auto r = triple_rank(t);
  return (words_[r / 64] >> (r % 64)) & 1U;
}

void Hypergraph::add_edge(const Triple& t) {
  check_triple(t);
  const auto r = triple_rank(t);
  words_[r / 64] |= std::uint64_t{1} << (r % 64);
}

void Hypergraph::remove_edge(const Triple& t) {
  check_triple(t);
  const auto r = triple_rank(t);
  words_[r / 64] &= ~(std::uint64_t{1} << (r % 64));
}

std::vector<Triple> Hypergraph::edges() const {
  std::vector<Triple> out;
  const auto& table = unrank_table();
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits != 0; bits &= bits - 1)
      out.push_back(table[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))]);
  }
  return out;
}

int Hypergraph::degree(Vertex v) const {
  if (v < 0 || v >= n_) throw ParameterError("vertex out of range");
  int d = 0;
  for (const auto& e : edges()) d += (e.a == v || e.b == v || e.c == v);
  return d;
}

Hypergraph Hypergraph::relabel(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ParameterError("permutation size differs from n");
  VertexSet seen = 0;
  for (auto p : perm) {
    if (p < 0 || p >= n_ || (seen & vertex_bit(p))) throw ParameterError("not a permutation");
    seen |= vertex_bit(p);
  }
  Hypergraph out(n_);
  for (const auto& e : edges()) out.add_edge(make_triple(perm[e.a], perm[e.b], perm[e.c]));
  return out;
}

Hypergraph Hypergraph::induced(VertexSet keep) const {
  keep &= all_vertices(n_);
  std::vector<Vertex> index(n_, -1);
  int k = 0;
  for (Vertex v = 0; v < n_; ++v)
    if (keep & vertex_bit(v)) index[v] = k++;
  Hypergraph out(k);
  for (const auto& e : edges())
    if (index[e.a] >= 0 && index[e.b] >= 0 && index[e.c] >= 0)
      out.add_edge(Triple{index[e.a], index[e.b], index[e.c]});
  return out;
}

std::uint64_t Hypergraph::mask() const {
  if (n_ > 8) throw ParameterError("mask encoding needs n <= 8");
  return words_.empty() ? 0 : words_[0];
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "balanced_bipartite") return Family::balanced_bipartite;
  if (name == "j7") return Family::j7;
  if (name == "fano") return Family::fano;
  if (name == "pasch") return Family::pasch;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::balanced_bipartite: return "balanced_bipartite";
    case Family::j7: return "j7";
    case Family::fano: return "fano";
    case Family::pasch: return "pasch";
  }
  return "?";
}

Hypergraph construct(Family family, int n) {
  const auto bad_n = [&](const char* need) {
    return ParameterError(std::string(family_name(family)) + " requires " + need + ", got n=" +
                          std::to_string(n));
  };
  switch (family) {
    case Family::complete: {
      if (n < 0 || n > kMaxVertices) throw bad_n("0 <= n <= 64");
      Hypergraph h(n);
      for (Vertex c = 2; c < n; ++c)
        for (Vertex b = 1; b < c; ++b)
          for (Vertex a = 0; a < b; ++a) h.add_edge(Triple{a, b, c});
      return h;
    }
    case Family::balanced_bipartite: {
      if (n < 2 || n > kMaxVertices) throw bad_n("2 <= n <= 64");
      const Vertex split = n / 2;
      Hypergraph h(n);
      for (Vertex c = 2; c < n; ++c)
        for (Vertex b = 1; b < c; ++b)
          for (Vertex a = 0; a < b; ++a) {
            const int in_x = (a < split) + (b < split) + (c < split);
            if (in_x == 1 || in_x == 2) h.add_edge(Triple{a, b, c});
          }
      return h;
    }
    case Family::j7: {
      if (n != 7) throw bad_n("n = 7");
      Hypergraph h = construct(Family::complete, 7);
      for (Vertex c = 2; c < 7; ++c) h.remove_edge(Triple{0, 1, c});
      return h;
    }
    case Family::fano: {
      if (n != 7) throw bad_n("n = 7");
      Hypergraph h(7);
      for (const auto& l : kFanoLines) h.add_edge(l[0], l[1], l[2]);
      return h;
    }
    case Family::pasch: {
      if (n != 6) throw bad_n("n = 6");
      Hypergraph h(6);
      for (const auto& t : kPaschPatterns[0]) h.add_edge(t[0], t[1], t[2]);
      return h;
    }
  }
  throw ParameterError("unknown family");
}

std::int64_t b_formula(int n) {
  if (n < 2) throw ParameterError("b(n) needs n >= 2");
  const std::int64_t m = n;
  return (m - 2) * (m * m / 4) / 2;
}

std::int64_t b_formula_by_complement(int n) {
  if (n < 2) throw ParameterError("b(n) needs n >= 2");
  return binomial(n, 3) - binomial(n / 2, 3) - binomial((n + 1) / 2, 3);
}

Hypergraph complement(const Hypergraph& h) {
  Hypergraph full = construct(Family::complete, h.n());
  Hypergraph out(h.n());
  for (const auto& t : full.edges())
    if (!h.has_edge(t)) out.add_edge(t);
  return out;
}

Graph link_graph(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.n()) throw ParameterError("link vertex out of range");
  Graph g(h.n());
  for (const auto& e : h.edges()) {
    if (e.a == v) g.add_edge(e.b, e.c);
    else if (e.b == v) g.add_edge(e.a, e.c);
    else if (e.c == v) g.add_edge(e.a, e.b);
  }
  return g;
}

SplitCounts edge_split_counts(const Hypergraph& h, VertexSet k) {
  if ((k & ~all_vertices(h.n())) != 0) throw ParameterError("vertex set exceeds n");
  SplitCounts s;
  for (const auto& e : h.edges()) {
    switch (set_size(k & (vertex_bit(e.a) | vertex_bit(e.b) | vertex_bit(e.c)))) {
      case 0: ++s.e0; break;
      case 1: ++s.e1; break;
      case 2: ++s.e2; break;
      default: ++s.e3; break;
    }
  }
  return s;
}

int degree_in_set(const Hypergraph& h, Vertex v, VertexSet k) {
  if (v < 0 || v >= h.n()) throw ParameterError("vertex out of range");
  if ((k & ~all_vertices(h.n())) != 0) throw ParameterError("vertex set exceeds n");
  if (k & vertex_bit(v)) throw ParameterError("vertex must not belong to the set");
  if (set_size(k) < 2) throw ParameterError("set needs at least two vertices");
  const Graph link = link_graph(h, v);
  int d = 0;
  for (auto rest = k; rest != 0; rest &= rest - 1) {
    const Vertex a = std::countr_zero(rest);
    d += set_size(link.neighbors(a) & k & ~all_vertices(a + 1));
  }
  return d;
}

}  // namespace fanoturan
