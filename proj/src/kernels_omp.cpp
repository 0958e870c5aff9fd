#include <algorithm>
#include <array>

#include "fanoturan/checkpoint.hpp"
#include "fanoturan/error.hpp"
#include "kernels_internal.hpp"

namespace fanoturan {
namespace {

// Sets of pattern indices; at most 256 patterns.
using PatternSet = std::array<std::uint64_t, 4>;

PatternSet operator&(const PatternSet& l, const PatternSet& r) {
  return {l[0] & r[0], l[1] & r[1], l[2] & r[2], l[3] & r[3]};
}
PatternSet without(const PatternSet& l, const PatternSet& r) {
  return {l[0] & ~r[0], l[1] & ~r[1], l[2] & ~r[2], l[3] & ~r[3]};
}
bool any(const PatternSet& s) { return (s[0] | s[1] | s[2] | s[3]) != 0; }

struct PatternIndex {
  int universe;
  int size;
  std::vector<TripleMask> patterns;
  std::vector<PatternSet> hits;   // [e]: patterns containing element e
  std::vector<PatternSet> below;  // [e]: patterns whose elements are all < e
  PatternSet all{};

  PatternIndex(int u, int s, std::span<const TripleMask> p) : universe(u), size(s), patterns(p.begin(), p.end()) {
    if (u < 0 || u > 64 || s < 0 || s > u) throw ParameterError("transversal scan needs 0 <= size <= universe <= 64");
    if (patterns.size() > 256) throw ParameterError("transversal scan supports at most 256 patterns");
    hits.assign(u, PatternSet{});
    below.assign(u + 1, PatternSet{});
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      const auto word = i / 64;
      const auto bit = std::uint64_t{1} << (i % 64);
      all[word] |= bit;
      if (patterns[i] == 0) throw ParameterError("empty pattern");
      const int top = 63 - std::countl_zero(patterns[i]);
      if (top >= u) throw ParameterError("pattern outside the universe");
      for (int e = 0; e < u; ++e)
        if (patterns[i] >> e & 1) hits[e][word] |= bit;
      for (int e = top + 1; e <= u; ++e) below[e][word] |= bit;
    }
  }
};

struct Walk {
  const PatternIndex& ix;
  bool prune;
  std::vector<TripleMask> survivors;
  std::uint64_t visited = 0;
  std::uint64_t nodes = 0;

  // More pairwise disjoint unmet patterns (restricted above `last`) than picks left.
  bool packing_dead(const PatternSet& unmet, int last, int picks) const {
    const TripleMask above = last >= 63 ? 0 : ~((TripleMask{2} << last) - 1);
    TripleMask used = 0;
    int disjoint = 0;
    for (int w = 0; w < 4; ++w)
      for (auto bits = unmet[w]; bits != 0; bits &= bits - 1) {
        const TripleMask q = ix.patterns[w * 64 + std::countr_zero(bits)] & above;
        if ((q & used) == 0) {
          used |= q;
          if (++disjoint > picks) return true;
        }
      }
    return false;
  }

  // Extends `chosen` (last element `last`) by `picks` more elements.
  void dfs(TripleMask chosen, int last, int picks, const PatternSet& unmet) {
    ++nodes;
    const int n = ix.universe;
    if (picks == 0) {
      ++visited;
      if (!any(unmet)) survivors.push_back(chosen);
      return;
    }
    if (picks == 1) {
      for (int e = last + 1; e < n; ++e)
        if (!any(without(unmet, ix.hits[e]))) survivors.push_back(chosen | TripleMask{1} << e);
      visited += static_cast<std::uint64_t>(n - last - 1);
      return;
    }
    for (int e = last + 1; e <= n - picks; ++e) {
      if (prune && any(unmet & ix.below[e])) {
        visited += detail::choose(n - e, picks);
        return;
      }
      const auto next = without(unmet, ix.hits[e]);
      if (prune && packing_dead(next, e, picks - 1)) {
        visited += detail::choose(n - e - 1, picks - 1);
        continue;
      }
      dfs(chosen | TripleMask{1} << e, e, picks - 1, next);
    }
  }

  // Subsets whose two smallest elements are e0 < e1.
  void task(int e0, int e1) {
    const auto after0 = without(ix.all, ix.hits[e0]);
    const auto after1 = without(after0, ix.hits[e1]);
    if (prune && (any(ix.all & ix.below[e0]) || any(after0 & ix.below[e1]))) {
      ++nodes;
      visited += detail::choose(ix.universe - e1 - 1, ix.size - 2);
      return;
    }
    dfs(TripleMask{1} << e0 | TripleMask{1} << e1, e1, ix.size - 2, after1);
  }
};

}  // namespace

TransversalResult transversals(int universe, int size, std::span<const TripleMask> patterns,
                               const TransversalOptions& options) {
  if (size < 2) return transversals_serial(universe, size, patterns);
  const PatternIndex ix(universe, size, patterns);

  std::vector<std::array<int, 2>> tasks;
  for (int e0 = 0; e0 < universe; ++e0)
    for (int e1 = e0 + 1; e1 < universe; ++e1) tasks.push_back({e0, e1});

  TransversalResult r;
  r.space = detail::choose(universe, size);
  std::size_t frontier = 0;

  const CheckpointHeader header{static_cast<std::uint32_t>(universe), static_cast<std::uint32_t>(size),
                                pattern_digest(patterns)};
  std::optional<CheckpointWriter> writer;
  if (options.checkpoint) {
    if (auto frame = load_checkpoint(*options.checkpoint, header)) {
      frontier = frame->frontier;
      r.visited = frame->visited;
      r.nodes = frame->nodes;
      r.survivors = std::move(frame->survivors);
    }
    writer.emplace(*options.checkpoint, header);
  }

  // Blocks of tasks; threads take every stride-th task inside a block.
  constexpr std::size_t kBlock = 64;
  std::uint64_t since_checkpoint = 0;
  while (frontier < tasks.size()) {
    const std::size_t end = std::min(tasks.size(), frontier + kBlock);
    std::vector<std::vector<TripleMask>> found(end - frontier);
    std::uint64_t visited = 0;
    std::uint64_t nodes = 0;
#pragma omp parallel for schedule(static, 1) reduction(+ : visited, nodes)
    for (std::size_t i = frontier; i < end; ++i) {
      Walk w{ix, options.prune, {}, 0, 0};
      w.task(tasks[i][0], tasks[i][1]);
      found[i - frontier] = std::move(w.survivors);
      visited += w.visited;
      nodes += w.nodes;
    }
    for (auto& f : found) r.survivors.insert(r.survivors.end(), f.begin(), f.end());
    r.visited += visited;
    r.nodes += nodes;
    frontier = end;
    since_checkpoint += visited;
    if (writer && (since_checkpoint >= options.checkpoint_interval || frontier == tasks.size())) {
      writer->append({frontier, r.visited, r.nodes, r.survivors});
      since_checkpoint = 0;
    }
  }
  std::sort(r.survivors.begin(), r.survivors.end());
  return r;
}

LinkScanResult link_scan(int min_link_edges, int min_sub_edges) {
  const auto fano = fano_copy_masks(7);
  const auto subs = detail::near_complete_subs();
  constexpr std::uint32_t kLinks = 1U << 15;
  LinkScanResult r;
  r.space = std::uint64_t{kLinks} * subs.size();
  std::vector<int> free_link_size(kLinks, -1);
  std::vector<std::optional<TripleMask>> bad(kLinks);
  std::uint64_t premise = 0;
  std::uint64_t fano_free = 0;
#pragma omp parallel for schedule(static, 256) reduction(+ : premise, fano_free)
  for (std::uint32_t link = 0; link < kLinks; ++link) {
    const TripleMask upper = TripleMask{link} << detail::kSubTriples;
    // Copies inside {0..5} are impossible, so every relevant copy uses the link.
    std::vector<TripleMask> live;
    for (auto f : fano)
      if ((f & upper) == (f & ~detail::kFullSub)) live.push_back(f);
    const bool link_ok = std::popcount(link) >= min_link_edges;
    for (auto sub : subs) {
      const TripleMask h = TripleMask{sub} | upper;
      const bool free = !detail::contains_any(h, live);
      if (sub == detail::kFullSub && free) free_link_size[link] = std::popcount(link);
      if (!link_ok || std::popcount(sub) < min_sub_edges) continue;
      ++premise;
      if (!free) continue;
      ++fano_free;
      if (!detail::is_b6_sub(sub) && (!bad[link] || h < *bad[link])) bad[link] = h;
    }
  }
  r.premise = premise;
  r.fano_free = fano_free;
  for (std::uint32_t link = 0; link < kLinks; ++link) {
    if (free_link_size[link] > r.max_free_link) {
      r.max_free_link = free_link_size[link];
      r.max_free_link_witness = link;
    }
    if (bad[link] && (!r.counterexample || *bad[link] < *r.counterexample)) r.counterexample = bad[link];
  }
  return r;
}

FourVertexScanResult four_vertex_scan(const FourVertexThresholds& th) {
  const auto& crossing = detail::crossing_table_5();
  const int needed = std::min(th.part_i_min_edges, th.part_ii_min_edges);
  FourVertexScanResult r;
  r.space = std::uint64_t{1} << 30;
  std::uint64_t filtered = 0;
  std::uint64_t crossing_free = 0;
  int best = 0;
  std::uint32_t first_i = UINT32_MAX;
  std::uint32_t first_ii = UINT32_MAX;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : filtered, crossing_free) \
    reduction(max : best) reduction(min : first_i, first_ii)
  for (std::uint32_t outer = 0; outer < 1024; ++outer) {
    const std::uint32_t m01 = outer & 31, m23 = outer >> 5;
    const std::uint32_t sa = m01 & m23;
    const int a = std::popcount(m01) + std::popcount(m23);
    for (std::uint32_t middle = 0; middle < 1024; ++middle) {
      const std::uint32_t m02 = middle & 31, m13 = middle >> 5;
      const int b = std::popcount(m02) + std::popcount(m13);
      if (a + b + 10 < needed) {
        filtered += 1024;
        continue;
      }
      const std::uint32_t base = sa << 10 | (m02 & m13) << 5;
      const bool full_ab = m01 == 31 || m23 == 31 || m02 == 31 || m13 == 31;
      for (std::uint32_t inner = 0; inner < 1024; ++inner) {
        const std::uint32_t m03 = inner & 31, m12 = inner >> 5;
        if (crossing[base | (m03 & m12)]) continue;
        ++crossing_free;
        const int c = std::popcount(m03) + std::popcount(m12);
        const int e = a + b + c;
        best = std::max(best, e);
        const std::uint32_t state = detail::pack_four_vertex(m01, m23, m02, m13, m03, m12);
        if (e >= th.part_i_min_edges && std::min({a, b, c}) > th.part_i_max_pair_sum)
          first_i = std::min(first_i, state);
        if (e >= th.part_ii_min_edges && !full_ab && m03 != 31 && m12 != 31) first_ii = std::min(first_ii, state);
      }
    }
  }
  r.visited = r.space;
  r.filtered = filtered;
  r.crossing_free = crossing_free;
  r.max_crossing_free_edges = best;
  if (first_i != UINT32_MAX) r.counterexample_i = first_i;
  if (first_ii != UINT32_MAX) r.counterexample_ii = first_ii;
  return r;
}

}  // namespace fanoturan
