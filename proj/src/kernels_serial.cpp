#include <algorithm>
#include <array>
#include <numeric>

#include "fanoturan/error.hpp"
#include "fanoturan/hypergraph.hpp"
#include "kernels_internal.hpp"

namespace fanoturan {
namespace detail {

std::uint64_t choose(int n, int k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int i = 0; i <= 64; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (n < 0 || k < 0 || k > n) return 0;
  return table[n][k];
}

std::vector<std::uint32_t> near_complete_subs() {
  std::vector<std::uint32_t> subs{static_cast<std::uint32_t>(kFullSub)};
  for (std::uint32_t i = 0; i < kSubTriples; ++i) subs.push_back(static_cast<std::uint32_t>(kFullSub & ~(1U << i)));
  for (std::uint32_t j = 1; j < kSubTriples; ++j)
    for (std::uint32_t i = 0; i < j; ++i)
      subs.push_back(static_cast<std::uint32_t>(kFullSub & ~(1U << i) & ~(1U << j)));
  return subs;
}

bool is_b6_sub(std::uint32_t sub) {
  const std::uint32_t missing = static_cast<std::uint32_t>(kFullSub) & ~sub;
  if (std::popcount(missing) != 2) return false;
  const Triple s = triple_unrank(static_cast<std::uint32_t>(std::countr_zero(missing)));
  const Triple t = triple_unrank(static_cast<std::uint32_t>(31 - std::countl_zero(missing)));
  const VertexSet a = vertex_bit(s.a) | vertex_bit(s.b) | vertex_bit(s.c);
  const VertexSet b = vertex_bit(t.a) | vertex_bit(t.b) | vertex_bit(t.c);
  return (a & b) == 0;
}

const std::vector<std::uint8_t>& crossing_table_5() {
  static const auto table = [] {
    std::vector<std::uint8_t> t(1U << 15);
    for (std::uint32_t i = 0; i < t.size(); ++i)
      t[i] = distinct_representatives(static_cast<LayerSet>(i >> 10), static_cast<LayerSet>((i >> 5) & 31),
                                      static_cast<LayerSet>(i & 31))
                 .has_value();
    return t;
  }();
  return table;
}

}  // namespace detail

namespace {

TripleMask edges_mask(const std::vector<std::array<Vertex, 3>>& triples) {
  TripleMask m = 0;
  for (const auto& t : triples) m |= TripleMask{1} << triple_rank(make_triple(t[0], t[1], t[2]));
  return m;
}

void check_small(int n) {
  if (n < 0 || n > 8) throw ParameterError("mask kernels need n <= 8, got " + std::to_string(n));
}

}  // namespace

std::vector<TripleMask> fano_copy_masks(int n) {
  check_small(n);
  std::vector<TripleMask> out;
  if (n < 7) return out;
  std::array<Vertex, 8> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  // Each injection {0..6} -> {0..n-1} is a prefix of a permutation of {0..n-1}.
  do {
    std::vector<std::array<Vertex, 3>> lines;
    for (const auto& l : kFanoLines) lines.push_back({perm[l[0]], perm[l[1]], perm[l[2]]});
    out.push_back(edges_mask(lines));
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TripleMask> clique_masks(int n, int k) {
  check_small(n);
  std::vector<TripleMask> out;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<std::array<Vertex, 3>> triples;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          if ((s >> a & 1) && (s >> b & 1) && (s >> c & 1)) triples.push_back({a, b, c});
    out.push_back(edges_mask(triples));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TransversalResult transversals_serial(int universe, int size, std::span<const TripleMask> patterns) {
  if (universe < 0 || universe > 64 || size < 0 || size > universe)
    throw ParameterError("transversal scan needs 0 <= size <= universe <= 64");
  TransversalResult r;
  r.space = detail::choose(universe, size);
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    TripleMask c = 0;
    for (int i : idx) c |= TripleMask{1} << i;
    ++r.visited;
    ++r.nodes;
    if (std::all_of(patterns.begin(), patterns.end(), [c](TripleMask p) { return (p & c) != 0; }))
      r.survivors.push_back(c);
    int i = size - 1;
    while (i >= 0 && idx[i] == universe - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(r.survivors.begin(), r.survivors.end());
  return r;
}

LinkScanResult link_scan_serial(int min_link_edges, int min_sub_edges) {
  const auto fano = fano_copy_masks(7);
  const auto subs = detail::near_complete_subs();
  LinkScanResult r;
  r.space = (std::uint64_t{1} << 15) * subs.size();
  for (std::uint32_t link = 0; link < (1U << 15); ++link) {
    for (auto sub : subs) {
      const TripleMask h = TripleMask{sub} | TripleMask{link} << detail::kSubTriples;
      const bool free = !detail::contains_any(h, fano);
      if (sub == detail::kFullSub && free && std::popcount(link) > r.max_free_link) {
        r.max_free_link = std::popcount(link);
        r.max_free_link_witness = link;
      }
      if (std::popcount(link) < min_link_edges || std::popcount(sub) < min_sub_edges) continue;
      ++r.premise;
      if (!free) continue;
      ++r.fano_free;
      if (!detail::is_b6_sub(sub) && (!r.counterexample || h < *r.counterexample)) r.counterexample = h;
    }
  }
  return r;
}

FourVertexScanResult four_vertex_scan_serial(const FourVertexThresholds& th) {
  const auto& crossing = detail::crossing_table_5();
  FourVertexScanResult r;
  r.space = std::uint64_t{1} << 30;
  for (std::uint32_t state = 0; state < (1U << 30); ++state) {
    ++r.visited;
    std::array<std::uint32_t, 6> m{};
    for (int i = 0; i < 6; ++i) m[i] = state >> (5 * i) & 31;
    if (crossing[(m[0] & m[1]) << 10 | (m[2] & m[3]) << 5 | (m[4] & m[5])]) continue;
    ++r.crossing_free;
    const int a = std::popcount(m[0]) + std::popcount(m[1]);
    const int b = std::popcount(m[2]) + std::popcount(m[3]);
    const int c = std::popcount(m[4]) + std::popcount(m[5]);
    const int e = a + b + c;
    r.max_crossing_free_edges = std::max(r.max_crossing_free_edges, e);
    if (!r.counterexample_i && e >= th.part_i_min_edges && std::min({a, b, c}) > th.part_i_max_pair_sum)
      r.counterexample_i = state;
    if (!r.counterexample_ii && e >= th.part_ii_min_edges &&
        std::none_of(m.begin(), m.end(), [](std::uint32_t s) { return s == 31; }))
      r.counterexample_ii = state;
  }
  return r;
}

PMultigraph four_vertex_state(std::uint32_t state) {
  PMultigraph g(5, 4);
  constexpr std::array<std::array<Vertex, 2>, 6> kPairs{{{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}};
  for (int i = 0; i < 6; ++i) g.set_layers(kPairs[i][0], kPairs[i][1], static_cast<LayerSet>(state >> (5 * i) & 31));
  return g;
}

}  // namespace fanoturan
