#include "fanoturan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "fanoturan/error.hpp"

namespace fanoturan {
namespace {

// Vertices grouped by degree (descending). Every order-respecting labelling assigns the
// positions [start, start + size) of a group to that group's vertices in some order.
struct DegreeClasses {
  std::vector<std::vector<Vertex>> groups;
};

DegreeClasses degree_classes(const std::vector<int>& degree) {
  std::vector<Vertex> order(degree.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex l, Vertex r) { return degree[l] > degree[r]; });
  DegreeClasses dc;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || degree[order[i]] != degree[order[i - 1]]) dc.groups.emplace_back();
    dc.groups.back().push_back(order[i]);
  }
  return dc;
}

// Calls visit(label) for every labelling that maps group g onto its block of positions.
template <typename Visit>
void for_each_ordered_labelling(DegreeClasses dc, int n, Visit&& visit) {
  for (auto& g : dc.groups) std::sort(g.begin(), g.end());
  std::vector<Vertex> label(n);
  while (true) {
    int pos = 0;
    for (const auto& g : dc.groups)
      for (Vertex v : g) label[v] = pos++;
    visit(label);
    std::size_t k = 0;
    for (; k < dc.groups.size(); ++k)
      if (std::next_permutation(dc.groups[k].begin(), dc.groups[k].end())) break;
    if (k == dc.groups.size()) return;
  }
}

}  // namespace

Hypergraph CanonicalForm::hypergraph() const {
  Hypergraph h(n);
  for (std::size_t w = 0; w < code.size(); ++w)
    for (auto bits = code[w]; bits != 0; bits &= bits - 1)
      h.add_edge(triple_unrank(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits))));
  return h;
}

std::string CanonicalForm::hex() const {
  std::string out = std::to_string(n) + ":";
  char buf[17];
  for (auto w : code) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

CanonicalForm canonical_form(const Hypergraph& h) {
  const int n = h.n();
  if (n > kMaxCanonicalVertices)
    throw CapabilityError("canonical form is limited to n <= 12, got n=" + std::to_string(n));
  const auto edges = h.edges();
  std::vector<int> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e.a];
    ++degree[e.b];
    ++degree[e.c];
  }
  CanonicalForm best{n, {}};
  std::vector<std::uint64_t> code(h.words().size());
  bool first = true;
  for_each_ordered_labelling(degree_classes(degree), n, [&](const std::vector<Vertex>& label) {
    std::fill(code.begin(), code.end(), 0);
    for (const auto& e : edges) {
      const auto r = triple_rank(make_triple(label[e.a], label[e.b], label[e.c]));
      code[r / 64] |= std::uint64_t{1} << (r % 64);
    }
    if (first || code < best.code) {
      best.code = code;
      first = false;
    }
  });
  return best;
}

bool is_canonical(const Hypergraph& h) { return canonical_form(h).code == h.words(); }

bool are_isomorphic(const Hypergraph& g, const Hypergraph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::uint64_t canonical_graph_code(const Graph& g) {
  const int n = g.n();
  if (n > 10) throw CapabilityError("graph canonical code is limited to n <= 10");
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  const auto edges = g.edges();
  std::uint64_t best = ~std::uint64_t{0};
  for_each_ordered_labelling(degree_classes(degree), n, [&](const std::vector<Vertex>& label) {
    std::uint64_t code = 0;
    for (const auto& [a, b] : edges) code |= std::uint64_t{1} << pair_rank(label[a], label[b]);
    best = std::min(best, code);
  });
  return best;
}

namespace {

bool is_exact_bipartite(const Hypergraph& h, VertexSet x) {
  const int n = h.n();
  const VertexSet all = all_vertices(n);
  const VertexSet y = all & ~x;
  if (std::abs(set_size(x) - set_size(y)) > 1) return false;
  if (h.edge_count() != b_formula(n)) return false;
  for (const auto& e : h.edges()) {
    const VertexSet m = vertex_bit(e.a) | vertex_bit(e.b) | vertex_bit(e.c);
    if ((m & x) == 0 || (m & y) == 0) return false;
  }
  // Right edge count and no monochromatic edge: every crossing triple is present.
  return true;
}

}  // namespace

std::optional<Bipartition> recognize_balanced_bipartite(const Hypergraph& h) {
  const int n = h.n();
  if (n < 2) return std::nullopt;
  // u and w lie in a common class of size >= 3 iff some triple through both is missing.
  // Union the vertices linked this way; classes of size <= 2 stay as singletons.
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const Hypergraph missing = complement(h);
  for (const auto& e : missing.edges()) {
    parent[find(e.b)] = find(e.a);
    parent[find(e.c)] = find(e.a);
  }
  std::vector<VertexSet> components;
  {
    std::vector<VertexSet> by_root(n, 0);
    for (Vertex v = 0; v < n; ++v) by_root[find(v)] |= vertex_bit(v);
    for (Vertex v = 0; v < n; ++v)
      if (by_root[v] != 0) components.push_back(by_root[v]);
    std::sort(components.begin(), components.end(),
              [](VertexSet l, VertexSet r) { return std::countr_zero(l) < std::countr_zero(r); });
  }
  if (components.size() > 16) return std::nullopt;
  // Component 0 holds vertex 0 and always goes to X.
  const std::size_t free_components = components.size() - 1;
  for (std::uint32_t choice = 0; choice < (std::uint32_t{1} << free_components); ++choice) {
    VertexSet x = components[0];
    for (std::size_t i = 0; i < free_components; ++i)
      if ((choice >> i) & 1U) x |= components[i + 1];
    if (is_exact_bipartite(h, x)) return Bipartition{x, all_vertices(n) & ~x};
  }
  return std::nullopt;
}

std::vector<VertexSet> independent_sets_of_size(const Hypergraph& h, int size) {
  const int n = h.n();
  std::vector<VertexSet> out;
  if (size < 0 || size > n || n > 24) throw ParameterError("independent set scan needs 0 <= size <= n <= 24");
  const auto edges = h.edges();
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    if (set_size(s) != size) continue;
    bool independent = true;
    for (const auto& e : edges) {
      if ((s & vertex_bit(e.a)) && (s & vertex_bit(e.b)) && (s & vertex_bit(e.c))) {
        independent = false;
        break;
      }
    }
    if (independent) out.push_back(s);
  }
  return out;
}

}  // namespace fanoturan
