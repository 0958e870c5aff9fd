#include "fanoturan/search.hpp"

#include <algorithm>
#include <set>

#include "fanoturan/detect.hpp"
#include "fanoturan/error.hpp"
#include "fanoturan/io.hpp"

namespace fanoturan {
namespace {

TripleMask full_mask(int n) {
  const auto triples = binomial(n, 3);
  return triples == 64 ? ~TripleMask{0} : (TripleMask{1} << triples) - 1;
}

std::vector<CanonicalForm> expected_classes(int n) {
  if (n <= 6) return {canonical_form(construct(Family::complete, n))};
  std::vector<CanonicalForm> out{canonical_form(construct(Family::balanced_bipartite, n))};
  if (n == 7) out.push_back(canonical_form(construct(Family::j7, 7)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Enumeration enumerate_complements(const EnumerationPlan& plan) {
  if (plan.n < 3 || plan.n > 8) throw CapabilityError("complement enumeration needs 3 <= n <= 8");
  const int universe = static_cast<int>(binomial(plan.n, 3));
  if (plan.target < 0 || plan.target > universe) throw ParameterError("complement size out of range");
  const auto patterns = plan.forbidden == Forbidden::fano ? fano_copy_masks(plan.n) : clique_masks(plan.n, 4);
  TransversalOptions options;
  options.prune = plan.prune;
  options.checkpoint = plan.checkpoint;
  const auto scan = transversals(universe, plan.target, patterns, options);
  Enumeration out;
  out.space = scan.space;
  out.visited = scan.visited;
  for (auto c : scan.survivors) {
    auto h = Hypergraph::from_mask(plan.n, c);
    if (plan.dedup == Dedup::canonical && !is_canonical(h)) continue;
    out.complements.push_back(std::move(h));
  }
  return out;
}

ExtremalResult max_fano_free_edges(int n, const ExtremalOptions& options) {
  if (n < 4 || n > 8) throw CapabilityError("ex(n, Fano) search covers 4 <= n <= 8, got " + std::to_string(n));
  const int universe = static_cast<int>(binomial(n, 3));
  const auto patterns = fano_copy_masks(n);
  ExtremalResult result;
  for (int t = 0; t <= universe; ++t) {
    TransversalOptions to;
    if (options.checkpoint_dir)
      to.checkpoint = *options.checkpoint_dir / ("ex" + std::to_string(n) + "-t" + std::to_string(t) + ".ckpt");
    const auto scan = transversals(universe, t, patterns, to);
    result.scans.push_back({t, scan.space, scan.visited, scan.survivors.size()});
    if (scan.survivors.empty()) continue;
    result.edges = universe - t;
    std::set<CanonicalForm> classes;
    for (auto c : scan.survivors) {
      const auto primal = Hypergraph::from_mask(n, full_mask(n) & ~c);
      if (contains_fano_embedding(primal)) throw std::logic_error("transversal scan returned a primal with a Fano copy");
      classes.insert(canonical_form(primal));
    }
    result.classes.assign(classes.begin(), classes.end());
    return result;
  }
  throw std::logic_error("unreachable: the full complement meets every pattern");
}

int fano_line_count(const Hypergraph& hbar, std::span<const Vertex> sigma) {
  if (hbar.n() != 7 || sigma.size() != 7) throw ParameterError("fano_line_count needs 7 vertices");
  int count = 0;
  for (const auto& l : kFanoLines) count += hbar.has_edge(sigma[l[0]], sigma[l[1]], sigma[l[2]]);
  return count;
}

Certificate verify_ex(int n, const ExtremalOptions& options) {
  Stopwatch clock;
  const auto r = max_fano_free_edges(n, options);
  Certificate c;
  c.claim = "ex-" + std::to_string(n);
  for (const auto& s : r.scans) {
    c.space += s.space;
    c.visited += s.visited;
  }
  const std::int64_t expected_edges = n <= 6 ? binomial(n, 3) : b_formula(n);
  const auto expected = expected_classes(n);
  c.pass = r.edges == expected_edges && r.classes == expected;
  for (const auto& cls : r.classes)
    c.witnesses.push_back({{"class", cls.hex()}, {"hypergraph", to_json(cls.hypergraph())}});
  if (!c.pass && c.witnesses.empty()) c.witnesses.push_back({{"edges", r.edges}});
  c.detail = "ex = " + std::to_string(r.edges) + " (expected " + std::to_string(expected_edges) + "), " +
             std::to_string(r.classes.size()) + " extremal class(es)";
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

Hypergraph random_hypergraph(int n, double density, std::mt19937_64& rng) {
  Hypergraph h(n);
  for (Vertex c = 2; c < n; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a)
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) h.add_edge(Triple{a, b, c});
  return h;
}

}  // namespace fanoturan
