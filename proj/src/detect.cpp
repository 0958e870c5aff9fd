#include "fanoturan/detect.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "fanoturan/error.hpp"

namespace fanoturan {
namespace {

// common[a * n + b] = set of c with {a, b, c} an edge.
std::vector<VertexSet> pair_neighbourhoods(const Hypergraph& h) {
  const int n = h.n();
  std::vector<VertexSet> common(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : h.edges()) {
    common[e.a * n + e.b] |= vertex_bit(e.c);
    common[e.b * n + e.a] |= vertex_bit(e.c);
    common[e.a * n + e.c] |= vertex_bit(e.b);
    common[e.c * n + e.a] |= vertex_bit(e.b);
    common[e.b * n + e.c] |= vertex_bit(e.a);
    common[e.c * n + e.b] |= vertex_bit(e.a);
  }
  return common;
}

bool clique_extend(const std::vector<VertexSet>& common, int n, std::vector<Vertex>& chosen, int k) {
  if (static_cast<int>(chosen.size()) == k) return true;
  const Vertex last = chosen.empty() ? -1 : chosen.back();
  VertexSet cand = all_vertices(n) & ~all_vertices(last + 1);
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j) cand &= common[chosen[i] * n + chosen[j]];
  for (; cand != 0; cand &= cand - 1) {
    chosen.push_back(std::countr_zero(cand));
    if (clique_extend(common, n, chosen, k)) return true;
    chosen.pop_back();
  }
  return false;
}

// For each Fano point k, the lines {p, q, k} with p, q < k.
struct PlacementConstraints {
  std::array<std::vector<std::array<int, 2>>, 7> earlier;
  PlacementConstraints() {
    for (const auto& line : kFanoLines) {
      auto l = line;
      std::sort(l.begin(), l.end());
      earlier[l[2]].push_back({l[0], l[1]});
    }
  }
};

bool embed_from(const std::vector<VertexSet>& common, int n, const PlacementConstraints& pc,
                FanoEmbedding& phi, int k, VertexSet used) {
  if (k == 7) return true;
  VertexSet cand = all_vertices(n) & ~used;
  for (const auto& [p, q] : pc.earlier[k]) cand &= common[phi[p] * n + phi[q]];
  for (; cand != 0; cand &= cand - 1) {
    const Vertex v = std::countr_zero(cand);
    phi[k] = v;
    if (embed_from(common, n, pc, phi, k + 1, used | vertex_bit(v))) return true;
  }
  return false;
}

constexpr std::array<std::array<int, 3>, 6> kAssignments{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// Matching m of the quad q as two vertex pairs.
std::array<std::array<Vertex, 2>, 2> quad_matching(const std::array<Vertex, 4>& q, int m) {
  switch (m) {
    case 0: return {{{q[0], q[1]}, {q[2], q[3]}}};
    case 1: return {{{q[0], q[2]}, {q[1], q[3]}}};
    default: return {{{q[0], q[3]}, {q[1], q[2]}}};
  }
}

}  // namespace

std::string_view method_name(DetectionMethod m) {
  switch (m) {
    case DetectionMethod::embedding: return "embedding";
    case DetectionMethod::crossing_pairs: return "crossing";
    case DetectionMethod::pasch_matching: return "pasch";
  }
  return "?";
}

std::optional<DetectionMethod> method_from_name(std::string_view name) {
  for (auto m : kDetectionMethods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

bool is_fano_copy(const Hypergraph& h, const FanoEdges& edges) {
  VertexSet points = 0;
  for (const auto& e : edges) {
    if (e.c >= h.n() || !h.has_edge(e)) return false;
    points |= vertex_bit(e.a) | vertex_bit(e.b) | vertex_bit(e.c);
  }
  if (set_size(points) != 7) return false;
  // 7 triples cover 21 pairs; all C(7,2) = 21 pairs are covered iff no pair repeats.
  std::vector<std::uint32_t> pairs;
  for (const auto& e : edges) {
    pairs.push_back(pair_rank(e.a, e.b));
    pairs.push_back(pair_rank(e.a, e.c));
    pairs.push_back(pair_rank(e.b, e.c));
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

std::optional<VertexSet> find_clique(const Hypergraph& h, int k) {
  if (k < 4 || k > 6) throw ParameterError("clique order must lie in [4, 6]");
  if (k > h.n()) return std::nullopt;
  const auto common = pair_neighbourhoods(h);
  std::vector<Vertex> chosen;
  if (!clique_extend(common, h.n(), chosen, k)) return std::nullopt;
  VertexSet s = 0;
  for (auto v : chosen) s |= vertex_bit(v);
  return s;
}

bool contains_clique(const Hypergraph& h, int k) { return find_clique(h, k).has_value(); }

std::optional<FanoEmbedding> find_fano_embedding(const Hypergraph& h) {
  if (h.n() < 7) return std::nullopt;
  static const PlacementConstraints pc;
  const auto common = pair_neighbourhoods(h);
  FanoEmbedding phi{};
  if (embed_from(common, h.n(), pc, phi, 0, 0)) return phi;
  return std::nullopt;
}

bool contains_fano_embedding(const Hypergraph& h) { return find_fano_embedding(h).has_value(); }

FanoEdges fano_edges(const FanoEmbedding& phi) {
  FanoEdges out{};
  for (std::size_t i = 0; i < 7; ++i)
    out[i] = make_triple(phi[kFanoLines[i][0]], phi[kFanoLines[i][1]], phi[kFanoLines[i][2]]);
  return out;
}

std::optional<CrossingPairsWitness> find_fano_crossing(const Hypergraph& h) {
  const int n = h.n();
  if (n < 7) return std::nullopt;
  for (const auto& e : h.edges()) {
    const std::array<Graph, 3> links{link_graph(h, e.a), link_graph(h, e.b), link_graph(h, e.c)};
    const VertexSet others = all_vertices(n) & ~(vertex_bit(e.a) | vertex_bit(e.b) | vertex_bit(e.c));
    std::vector<Vertex> rest;
    for (auto s = others; s != 0; s &= s - 1) rest.push_back(std::countr_zero(s));
    const std::size_t r = rest.size();
    for (std::size_t i0 = 0; i0 < r; ++i0)
      for (std::size_t i1 = i0 + 1; i1 < r; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < r; ++i2)
          for (std::size_t i3 = i2 + 1; i3 < r; ++i3) {
            const std::array<Vertex, 4> q{rest[i0], rest[i1], rest[i2], rest[i3]};
            // inside[t][m]: matching m lies in the link of apex t.
            bool inside[3][3];
            for (int t = 0; t < 3; ++t)
              for (int m = 0; m < 3; ++m) {
                const auto pm = quad_matching(q, m);
                inside[t][m] = links[t].has_edge(pm[0][0], pm[0][1]) && links[t].has_edge(pm[1][0], pm[1][1]);
              }
            for (const auto& as : kAssignments)
              if (inside[0][as[0]] && inside[1][as[1]] && inside[2][as[2]])
                return CrossingPairsWitness{e, q, as};
          }
  }
  return std::nullopt;
}

bool contains_fano_crossing(const Hypergraph& h) { return find_fano_crossing(h).has_value(); }

FanoEdges fano_edges(const CrossingPairsWitness& w) {
  const std::array<Vertex, 3> apex{w.edge.a, w.edge.b, w.edge.c};
  FanoEdges out{};
  out[0] = w.edge;
  std::size_t k = 1;
  for (int t = 0; t < 3; ++t)
    for (const auto& pr : quad_matching(w.quad, w.matching[t])) out[k++] = make_triple(apex[t], pr[0], pr[1]);
  return out;
}

std::optional<PaschWitness> find_fano_pasch(const Hypergraph& h) {
  const int n = h.n();
  if (n < 7) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    const auto link_edges = link_graph(h, v).edges();  // lexicographic (by larger end, then smaller)
    std::vector<std::pair<Vertex, Vertex>> le(link_edges.begin(), link_edges.end());
    std::sort(le.begin(), le.end());
    const std::size_t m = le.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (le[j].first <= le[i].first) continue;
        const VertexSet ij = vertex_bit(le[i].first) | vertex_bit(le[i].second);
        if (ij & (vertex_bit(le[j].first) | vertex_bit(le[j].second))) continue;
        for (std::size_t k = j + 1; k < m; ++k) {
          if (le[k].first <= le[j].first) continue;
          const VertexSet used = ij | vertex_bit(le[j].first) | vertex_bit(le[j].second);
          if (used & (vertex_bit(le[k].first) | vertex_bit(le[k].second))) continue;
          const std::array<Vertex, 6> x{le[i].first, le[i].second, le[j].first,
                                        le[j].second, le[k].first, le[k].second};
          for (int parity = 0; parity < 2; ++parity) {
            bool all = true;
            for (const auto& t : kPaschPatterns[parity]) {
              if (!h.has_edge(x[t[0]], x[t[1]], x[t[2]])) {
                all = false;
                break;
              }
            }
            if (all) return PaschWitness{v, x, parity};
          }
        }
      }
  }
  return std::nullopt;
}

bool contains_fano_pasch(const Hypergraph& h) { return find_fano_pasch(h).has_value(); }

FanoEdges fano_edges(const PaschWitness& w) {
  FanoEdges out{};
  const auto& x = w.matched;
  out[0] = make_triple(w.apex, x[0], x[1]);
  out[1] = make_triple(w.apex, x[2], x[3]);
  out[2] = make_triple(w.apex, x[4], x[5]);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& t = kPaschPatterns[w.parity][i];
    out[3 + i] = make_triple(x[t[0]], x[t[1]], x[t[2]]);
  }
  return out;
}

bool contains_fano(const Hypergraph& h, DetectionMethod method) { return find_fano(h, method).has_value(); }

std::optional<FanoEdges> find_fano(const Hypergraph& h, DetectionMethod method) {
  switch (method) {
    case DetectionMethod::embedding:
      if (auto w = find_fano_embedding(h)) return fano_edges(*w);
      return std::nullopt;
    case DetectionMethod::crossing_pairs:
      if (auto w = find_fano_crossing(h)) return fano_edges(*w);
      return std::nullopt;
    case DetectionMethod::pasch_matching:
      if (auto w = find_fano_pasch(h)) return fano_edges(*w);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace fanoturan
