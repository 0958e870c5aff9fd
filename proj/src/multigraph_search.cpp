#include <algorithm>
#include <atomic>
#include <bit>
#include <string>

#include "fanoturan/error.hpp"
#include "fanoturan/hypergraph.hpp"
#include "fanoturan/multigraph.hpp"

namespace fanoturan {
namespace {

struct Quad {
  std::array<std::uint32_t, 6> pair;  // wx yz | wy xz | wz xy
};

struct SearchSpace {
  int p = 0;
  int n = 0;
  int pairs = 0;
  std::vector<std::pair<Vertex, Vertex>> pair_list;  // colex order
  std::vector<std::vector<Quad>> completed_at;       // 4-sets whose last pair is t
  std::vector<std::uint8_t> crossing;                // indexed by (a << 2p) | (b << p) | c
  std::vector<std::vector<int>> remaining_with;      // [t][r]: pairs after t containing r
  std::vector<LayerSet> by_size;                     // all subsets, larger first
  std::int64_t sub_bound = -1;                       // f_p(n-1), when n >= 5

  SearchSpace(int p_, int n_) : p(p_), n(n_) {
    for (Vertex b = 1; b < n; ++b)
      for (Vertex a = 0; a < b; ++a) pair_list.emplace_back(a, b);
    std::sort(pair_list.begin(), pair_list.end(),
              [](auto l, auto r) { return pair_rank(l.first, l.second) < pair_rank(r.first, r.second); });
    pairs = static_cast<int>(pair_list.size());
    completed_at.resize(pairs);
    for (int t = 0; t < pairs; ++t) {
      const auto [y, z] = pair_list[t];
      for (Vertex w = 0; w < y; ++w)
        for (Vertex x = w + 1; x < y; ++x)
          completed_at[t].push_back(Quad{{pair_rank(w, x), pair_rank(y, z), pair_rank(w, y), pair_rank(x, z),
                                          pair_rank(w, z), pair_rank(x, y)}});
    }
    const std::size_t width = std::size_t{1} << p;
    crossing.assign(width * width * width, 0);
    for (std::size_t a = 0; a < width; ++a)
      for (std::size_t b = 0; b < width; ++b)
        for (std::size_t c = 0; c < width; ++c)
          crossing[(a << (2 * p)) | (b << p) | c] =
              distinct_representatives(static_cast<LayerSet>(a), static_cast<LayerSet>(b), static_cast<LayerSet>(c))
                  .has_value();
    remaining_with.assign(pairs + 1, std::vector<int>(n, 0));
    for (int t = pairs - 1; t >= 0; --t) {
      remaining_with[t] = remaining_with[t + 1];
      remaining_with[t][pair_list[t].first]++;
      remaining_with[t][pair_list[t].second]++;
    }
    for (std::size_t s = 0; s < width; ++s) by_size.push_back(static_cast<LayerSet>(s));
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](LayerSet l, LayerSet r) { return std::popcount(l) > std::popcount(r); });
  }

  [[nodiscard]] bool crosses(std::span<const LayerSet> m, const Quad& q) const {
    const std::size_t a = m[q.pair[0]] & m[q.pair[1]];
    const std::size_t b = m[q.pair[2]] & m[q.pair[3]];
    const std::size_t c = m[q.pair[4]] & m[q.pair[5]];
    return crossing[(a << (2 * p)) | (b << p) | c] != 0;
  }
};

struct Walker {
  const SearchSpace& space;
  std::atomic<std::int64_t>& global_best;
  std::atomic<std::uint64_t>& global_nodes;
  std::uint64_t budget;

  std::vector<LayerSet> m;
  std::vector<std::int64_t> degree;  // assigned multiplicity at each vertex
  std::int64_t assigned = 0;
  std::int64_t best;
  std::vector<LayerSet> best_m;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  Walker(const SearchSpace& s, std::atomic<std::int64_t>& gb, std::atomic<std::uint64_t>& gn, std::uint64_t b,
         std::int64_t start)
      : space(s), global_best(gb), global_nodes(gn), budget(b), m(s.pairs, 0), degree(s.n, 0), best(start) {}

  // Upper bound on the final total once pairs 0..t are assigned.
  [[nodiscard]] std::int64_t upper_bound(int t) const {
    const std::int64_t unassigned = space.pairs - (t + 1);
    const std::int64_t optimistic = assigned + space.p * unassigned;
    if (space.sub_bound < 0) return optimistic;
    std::int64_t sum = 0;
    for (Vertex r = 0; r < space.n; ++r) {
      const std::int64_t rest = (assigned - degree[r]) + space.p * (unassigned - space.remaining_with[t + 1][r]);
      sum += std::min(space.sub_bound, rest);
    }
    return std::min(optimistic, sum / (space.n - 2));
  }

  [[nodiscard]] bool worth_descending(int t) const {
    const auto ub = upper_bound(t);
    return ub > best && ub >= global_best.load(std::memory_order_relaxed);
  }

  // Assigns pair t; false if that completes three crossing pairs.
  bool assign(int t, LayerSet s) {
    m[t] = s;
    const int k = std::popcount(s);
    assigned += k;
    degree[space.pair_list[t].first] += k;
    degree[space.pair_list[t].second] += k;
    for (const auto& q : space.completed_at[t])
      if (space.crosses(m, q)) return false;
    return true;
  }

  void unassign(int t) {
    const int k = std::popcount(m[t]);
    assigned -= k;
    degree[space.pair_list[t].first] -= k;
    degree[space.pair_list[t].second] -= k;
    m[t] = 0;
  }

  void dfs(int t, int max_mult) {
    if (exhausted) return;
    if (++nodes % 4096 == 0 && global_nodes.fetch_add(4096, std::memory_order_relaxed) + 4096 > budget) {
      exhausted = true;
      return;
    }
    if (t == space.pairs) {
      if (assigned > best) {
        best = assigned;
        best_m = m;
        std::int64_t g = global_best.load(std::memory_order_relaxed);
        while (g < best && !global_best.compare_exchange_weak(g, best, std::memory_order_relaxed)) {
        }
      }
      return;
    }
    for (LayerSet s : space.by_size) {
      if (std::popcount(s) > max_mult) continue;
      if (assign(t, s) && worth_descending(t)) dfs(t + 1, max_mult);
      unassign(t);
    }
  }
};

struct RootTask {
  LayerSet first;   // M(0,1)
  LayerSet second;  // M(0,2)
};

std::vector<RootTask> root_tasks(int p) {
  std::vector<RootTask> tasks;
  for (int k = p; k >= 0; --k) {
    const LayerSet first = static_cast<LayerSet>((1U << k) - 1);
    std::vector<LayerSet> seconds;
    for (int lo = 0; lo <= k; ++lo)
      for (int hi = 0; hi <= p - k; ++hi)
        if (lo + hi <= k) seconds.push_back(static_cast<LayerSet>(((1U << lo) - 1) | (((1U << hi) - 1) << k)));
    std::stable_sort(seconds.begin(), seconds.end(), [](LayerSet l, LayerSet r) {
      return std::popcount(l) != std::popcount(r) ? std::popcount(l) > std::popcount(r) : l < r;
    });
    for (auto s : seconds) tasks.push_back({first, s});
  }
  return tasks;
}

PMultigraph seed_construction(int p, int n) {
  if (n < 4) {
    PMultigraph full(p, n);
    for (Vertex b = 1; b < n; ++b)
      for (Vertex a = 0; a < b; ++a) full.set_layers(a, b, static_cast<LayerSet>((1U << p) - 1));
    return full;
  }
  if (p == 4) return extremal_4multigraph(n);
  auto [first, second] = f5_lower_constructions(n);
  return first.total_edges() >= second.total_edges() ? first : second;
}

MaxEdgesResult run_search(int p, int n, const MaxEdgesOptions& options, bool parallel) {
  if (p != 4 && p != 5) throw ParameterError("exact search supports p in {4, 5}, got " + std::to_string(p));
  if (n < 3 || n > 6)
    throw CapabilityError("exact search supports 3 <= n <= 6, got n=" + std::to_string(n));
  if (p == 5 && n == 6 && !options.long_run)
    throw CapabilityError("f_5(6) search is gated behind the long-run flag");

  SearchSpace space(p, n);
  std::uint64_t sub_nodes = 0;
  if (n >= 5) {
    MaxEdgesOptions sub = options;
    sub.long_run = true;
    const auto r = run_search(p, n - 1, sub, parallel);
    space.sub_bound = r.edges;
    sub_nodes = r.nodes;
  }

  PMultigraph start_witness(p, n);
  std::int64_t start = -1;
  if (options.seed_with_constructions) {
    start_witness = seed_construction(p, n);
    if (has_three_crossing_pairs(start_witness)) throw std::logic_error("seed construction has crossing pairs");
    start = start_witness.total_edges();
  }

  const auto tasks = root_tasks(p);
  std::vector<std::int64_t> task_best(tasks.size(), start);
  std::vector<std::vector<LayerSet>> task_witness(tasks.size());
  std::atomic<std::int64_t> global_best{start};
  std::atomic<std::uint64_t> global_nodes{0};
  std::atomic<bool> exhausted{false};
  std::uint64_t nodes = 0;

  const auto run_task = [&](std::size_t i, std::int64_t floor_value) {
    Walker w(space, global_best, global_nodes, options.node_budget, floor_value);
    const int max_mult = std::popcount(tasks[i].first);
    ++w.nodes;
    bool ok = w.assign(0, tasks[i].first) && w.worth_descending(0);
    if (ok && space.pairs > 1) ok = w.assign(1, tasks[i].second) && w.worth_descending(1);
    if (ok) w.dfs(std::min(2, space.pairs), max_mult);
    if (w.exhausted) exhausted = true;
    task_best[i] = w.best;
    task_witness[i] = w.best_m;
    return w.nodes;
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : nodes)
    for (std::size_t i = 0; i < tasks.size(); ++i) nodes += run_task(i, start);
  } else {
    std::int64_t running = start;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      nodes += run_task(i, running);
      running = std::max(running, task_best[i]);
    }
  }

  std::int64_t best = start;
  const std::vector<LayerSet>* best_m = nullptr;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (task_best[i] > best && !task_witness[i].empty()) {
      best = task_best[i];
      best_m = &task_witness[i];
    }
  if (exhausted) throw CapabilityError("node budget exhausted", best);

  MaxEdgesResult result;
  result.edges = best;
  result.nodes = nodes + sub_nodes;
  if (best_m != nullptr) {
    PMultigraph w(p, n);
    for (int t = 0; t < space.pairs; ++t) w.set_layers(space.pair_list[t].first, space.pair_list[t].second, (*best_m)[t]);
    result.witness = std::move(w);
  } else {
    result.witness = std::move(start_witness);
  }
  return result;
}

}  // namespace

MaxEdgesResult max_edges_no_crossing(int p, int n, const MaxEdgesOptions& options) {
  return run_search(p, n, options, true);
}

MaxEdgesResult max_edges_no_crossing_serial(int p, int n, const MaxEdgesOptions& options) {
  return run_search(p, n, options, false);
}

}  // namespace fanoturan
