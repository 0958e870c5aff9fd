#include "fanoturan/multigraph.hpp"

#include <bit>
#include <string>

#include "fanoturan/error.hpp"
#include "fanoturan/hypergraph.hpp"

namespace fanoturan {

PMultigraph::PMultigraph(int p, int n) : p_(p), n_(n) {
  if (p < 1 || p > kMaxLayers) throw ParameterError("layer count must lie in [1, 16], got " + std::to_string(p));
  if (n < 0 || n > kMaxVertices) throw ParameterError("vertex count must lie in [0, 64], got " + std::to_string(n));
  membership_.assign(static_cast<std::size_t>(binomial(n, 2)), 0);
}

PMultigraph PMultigraph::from_layers(std::span<const Graph> layers) {
  if (layers.empty()) throw ParameterError("need at least one layer");
  PMultigraph g(static_cast<int>(layers.size()), layers[0].n());
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].n() != g.n_) throw ParameterError("layers disagree on the vertex count");
    for (const auto& [a, b] : layers[i].edges()) g.add_edge(static_cast<int>(i), a, b);
  }
  return g;
}

void PMultigraph::check_pair(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw ParameterError("invalid vertex pair");
}

LayerSet PMultigraph::layers(Vertex u, Vertex v) const {
  check_pair(u, v);
  return membership_[pair_rank(u, v)];
}

void PMultigraph::set_layers(Vertex u, Vertex v, LayerSet s) {
  check_pair(u, v);
  if (p_ < kMaxLayers && (s >> p_) != 0) throw ParameterError("layer set exceeds p");
  membership_[pair_rank(u, v)] = s;
}

void PMultigraph::add_edge(int layer, Vertex u, Vertex v) {
  if (layer < 0 || layer >= p_) throw ParameterError("layer index out of range");
  check_pair(u, v);
  membership_[pair_rank(u, v)] |= static_cast<LayerSet>(1U << layer);
}

int PMultigraph::multiplicity(Vertex u, Vertex v) const { return std::popcount(layers(u, v)); }

std::int64_t PMultigraph::total_edges() const {
  std::int64_t e = 0;
  for (auto s : membership_) e += std::popcount(s);
  return e;
}

std::int64_t PMultigraph::edges_within(VertexSet x) const {
  std::int64_t e = 0;
  for (Vertex b = 1; b < n_; ++b)
    for (Vertex a = 0; a < b; ++a)
      if ((x & vertex_bit(a)) && (x & vertex_bit(b))) e += std::popcount(membership_[pair_rank(a, b)]);
  return e;
}

Graph PMultigraph::layer(int i) const {
  if (i < 0 || i >= p_) throw ParameterError("layer index out of range");
  Graph g(n_);
  for (Vertex b = 1; b < n_; ++b)
    for (Vertex a = 0; a < b; ++a)
      if ((membership_[pair_rank(a, b)] >> i) & 1U) g.add_edge(a, b);
  return g;
}

PMultigraph PMultigraph::relabel(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ParameterError("permutation size differs from n");
  PMultigraph out(p_, n_);
  for (Vertex b = 1; b < n_; ++b)
    for (Vertex a = 0; a < b; ++a) out.set_layers(perm[a], perm[b], membership_[pair_rank(a, b)]);
  return out;
}

PMultigraph PMultigraph::permute_layers(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != p_) throw ParameterError("layer permutation size differs from p");
  PMultigraph out(p_, n_);
  for (std::size_t r = 0; r < membership_.size(); ++r) {
    LayerSet s = 0;
    for (int i = 0; i < p_; ++i)
      if ((membership_[r] >> i) & 1U) s |= static_cast<LayerSet>(1U << perm[i]);
    out.membership_[r] = s;
  }
  return out;
}

bool is_crossing_witness(const PMultigraph& g, const CrossingWitness& c) {
  const std::array<Vertex, 4> v{c.w, c.x, c.y, c.z};
  for (int a = 0; a < 4; ++a) {
    if (v[a] < 0 || v[a] >= g.n()) return false;
    for (int b = a + 1; b < 4; ++b)
      if (v[a] == v[b]) return false;
  }
  if (c.i == c.j || c.i == c.k || c.j == c.k) return false;
  for (int l : {c.i, c.j, c.k})
    if (l < 0 || l >= g.p()) return false;
  const auto in = [&](int layer, Vertex a, Vertex b) { return (g.layers(a, b) >> layer) & 1U; };
  return in(c.i, c.w, c.x) && in(c.i, c.y, c.z) && in(c.j, c.w, c.y) && in(c.j, c.x, c.z) &&
         in(c.k, c.w, c.z) && in(c.k, c.x, c.y);
}

std::optional<std::array<int, 3>> distinct_representatives(LayerSet a, LayerSet b, LayerSet c) {
  for (LayerSet sa = a; sa != 0; sa &= sa - 1) {
    const int i = std::countr_zero(sa);
    for (LayerSet sb = b & ~(1U << i); sb != 0; sb &= sb - 1) {
      const int j = std::countr_zero(sb);
      const LayerSet sc = c & ~(1U << i) & ~(1U << j);
      if (sc != 0) return std::array<int, 3>{i, j, std::countr_zero(sc)};
    }
  }
  return std::nullopt;
}

std::int64_t e_plus(const PMultigraph& g, VertexSet x) {
  if ((x & ~all_vertices(g.n())) != 0) throw ParameterError("vertex set exceeds n");
  return g.total_edges() - g.edges_within(all_vertices(g.n()) & ~x);
}

std::optional<CrossingWitness> has_three_crossing_pairs(const PMultigraph& g) {
  const int n = g.n();
  if (g.p() < 3 || n < 4) return std::nullopt;
  const auto m = g.membership();
  for (Vertex w = 0; w < n; ++w)
    for (Vertex x = w + 1; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y)
        for (Vertex z = y + 1; z < n; ++z) {
          const LayerSet a = m[pair_rank(w, x)] & m[pair_rank(y, z)];
          const LayerSet b = m[pair_rank(w, y)] & m[pair_rank(x, z)];
          const LayerSet c = m[pair_rank(w, z)] & m[pair_rank(x, y)];
          if (auto r = distinct_representatives(a, b, c)) return CrossingWitness{(*r)[0], (*r)[1], (*r)[2], w, x, y, z};
        }
  return std::nullopt;
}

std::int64_t f4_formula(int n) {
  if (n < 4) throw ParameterError("f4 formula needs n >= 4");
  const std::int64_t m = n;
  return 2 * binomial(m, 2) + 2 * (m * m / 4);
}

PMultigraph extremal_4multigraph(int n) {
  if (n < 4 || n > kMaxVertices) throw ParameterError("extremal 4-multigraph needs 4 <= n <= 64");
  const Vertex split = n / 2;
  PMultigraph g(4, n);
  for (Vertex b = 1; b < n; ++b)
    for (Vertex a = 0; a < b; ++a) {
      const bool a_in_x = a < split, b_in_x = b < split;
      LayerSet s = 0;
      if (a_in_x != b_in_x) s = 0b1111;
      else if (a_in_x) s = 0b0011;
      else s = 0b1100;
      g.set_layers(a, b, s);
    }
  return g;
}

Graph turan_graph_3(int n) {
  Graph t(n);
  for (Vertex b = 1; b < n; ++b)
    for (Vertex a = 0; a < b; ++a)
      if (a % 3 != b % 3) t.add_edge(a, b);
  return t;
}

std::pair<PMultigraph, PMultigraph> f5_lower_constructions(int n) {
  if (n < 4 || n > kMaxVertices) throw ParameterError("f5 constructions need 4 <= n <= 64");
  const Graph t = turan_graph_3(n);
  const std::array<Graph, 5> same{t, t, t, t, t};
  PMultigraph first = PMultigraph::from_layers(same);

  const PMultigraph base = extremal_4multigraph(n);
  PMultigraph second(5, n);
  const Vertex split = n / 2;
  for (Vertex b = 1; b < n; ++b)
    for (Vertex a = 0; a < b; ++a) {
      LayerSet s = base.layers(a, b);
      if ((a < split) != (b < split)) s |= 0b10000;
      second.set_layers(a, b, s);
    }
  return {std::move(first), std::move(second)};
}

nlohmann::json to_json(const PMultigraph& g) {
  nlohmann::json pairs = nlohmann::json::array();
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const LayerSet s = g.layers(u, v);
      if (s == 0) continue;
      nlohmann::json layers = nlohmann::json::array();
      for (int i = 0; i < g.p(); ++i)
        if ((s >> i) & 1U) layers.push_back(i);
      pairs.push_back({{"u", u}, {"v", v}, {"layers", std::move(layers)}});
    }
  return {{"p", g.p()}, {"n", g.n()}, {"pairs", std::move(pairs)}};
}

PMultigraph pmultigraph_from_json(const nlohmann::json& j) {
  try {
    const int p = j.at("p").get<int>();
    const int n = j.at("n").get<int>();
    PMultigraph g(p, n);
    std::pair<Vertex, Vertex> previous{-1, -1};
    for (const auto& pr : j.at("pairs")) {
      const Vertex u = pr.at("u").get<int>(), v = pr.at("v").get<int>();
      if (!(0 <= u && u < v && v < n)) throw ParameterError("multigraph json: pair must satisfy u < v < n");
      if (std::pair{u, v} <= previous) throw ParameterError("multigraph json: pairs not sorted");
      previous = {u, v};
      LayerSet s = 0;
      int last = -1;
      for (const auto& l : pr.at("layers")) {
        const int i = l.get<int>();
        if (i <= last || i >= p) throw ParameterError("multigraph json: layers must ascend within [0, p)");
        last = i;
        s |= static_cast<LayerSet>(1U << i);
      }
      g.set_layers(u, v, s);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("multigraph json: ") + e.what());
  }
}

}  // namespace fanoturan
