#include "fanoturan/claims.hpp"

#include <array>
#include <functional>

#include "fanoturan/error.hpp"
#include "fanoturan/multigraph.hpp"
#include "fanoturan/search.hpp"

namespace fanoturan {
namespace {

// Exact f_p(n) for each (n, expected) by branch and bound.
Certificate exact_multigraph_claim(std::string claim, int p, std::span<const std::pair<int, std::int64_t>> cases) {
  Stopwatch clock;
  Certificate c;
  c.claim = std::move(claim);
  for (const auto& [n, expected] : cases) {
    const auto r = max_edges_no_crossing(p, n);
    c.space += r.nodes;
    c.visited += r.nodes;
    const bool witness_ok = r.witness.total_edges() == r.edges && !has_three_crossing_pairs(r.witness);
    if (r.edges != expected || !witness_ok)
      c.witnesses.push_back({{"n", n}, {"found", r.edges}, {"expected", expected}, {"witness", to_json(r.witness)}});
    c.detail += (c.detail.empty() ? "" : ", ") + ("f" + std::to_string(p) + "(" + std::to_string(n) + ") = " +
                                                  std::to_string(r.edges));
  }
  c.pass = c.witnesses.empty();
  c.detail += " (space and visited count search-tree nodes)";
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

struct Entry {
  ClaimInfo info;
  std::function<Certificate(const ClaimOptions&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    t.push_back({{"lemma-n7", "7-vertex Fano-free hypergraphs with 30 edges are B_7 or J_7", false},
                 [](const ClaimOptions&) { return verify_lemma_n7(); }});
    t.push_back({{"lemma-2-3", "d(v) >= 11 and e(H - v) >= 18 in a Fano-free H force H - v = B_6", false},
                 [](const ClaimOptions&) { return verify_lemma_2_3(); }});
    t.push_back({{"fact-2-4", "K_6 inside a Fano-free 8-vertex H gives e(H) <= 46 < b(8)", false},
                 [](const ClaimOptions&) { return verify_fact_2_4(); }});
    t.push_back({{"fact-tetra", "b(n) edges force a tetrahedron, n = 4..7", false}, [](const ClaimOptions&) {
                   constexpr std::array ns{4, 5, 6, 7};
                   return verify_fact_tetra(ns);
                 }});
    t.push_back({{"lemma-4vertex", "crossing-free 5-multigraphs on 4 vertices with 23 or 22 edges", false},
                 [](const ClaimOptions&) { return verify_lemma_4vertex(); }});
    t.push_back({{"corollary-bf", "inequalities (a) and (b) for odd n in [9, 10001]", false},
                 [](const ClaimOptions&) { return verify_corollary_inequalities(10001); }});
    t.push_back({{"section4-arith", "b(n-4) + f4(n-4) + 5(n-4) + 4 = b(n) for odd n in [9, 10001]", false},
                 [](const ClaimOptions&) { return verify_section4_arithmetic(10001); }});
    t.push_back({{"matching-facts", "6-vertex graphs: 11 edges force a perfect matching; K5+K1 is the only 10-edge exception", false},
                 [](const ClaimOptions&) { return verify_matching_facts(); }});
    t.push_back({{"ex-7", "ex(7, Fano) = 30 with extremal classes B_7 and J_7", false},
                 [](const ClaimOptions&) { return verify_ex(7); }});
    t.push_back({{"ex-8", "ex(8, Fano) = 48 with B_8 the only extremal class", false}, [](const ClaimOptions& o) {
                   ExtremalOptions e;
                   e.checkpoint_dir = o.checkpoint_dir;
                   return verify_ex(8, e);
                 }});
    t.push_back({{"detector-agreement", "three Fano detectors agree on 1000 random hypergraphs per n = 7, 8, 9", false},
                 [](const ClaimOptions& o) {
                   constexpr std::array ns{7, 8, 9};
                   return verify_detector_agreement(o.seed, ns);
                 }});
    t.push_back({{"f4-exact", "f4(n) = 2 C(n,2) + 2 floor(n^2/4) for n = 4, 5, 6 by exact search", false}, [](const ClaimOptions&) {
                   constexpr std::array<std::pair<int, std::int64_t>, 3> cases{{{4, 20}, {5, 32}, {6, 48}}};
                   return exact_multigraph_claim("f4-exact", 4, cases);
                 }});
    t.push_back({{"f5-exact", "f5(3) = 15, f5(4) = 25, f5(5) = 40 by exact search", false}, [](const ClaimOptions&) {
                   constexpr std::array<std::pair<int, std::int64_t>, 3> cases{{{3, 15}, {4, 25}, {5, 40}}};
                   return exact_multigraph_claim("f5-exact", 5, cases);
                 }});
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Certificate run_claim(std::string_view id, const ClaimOptions& options) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    if (e.info.long_run && !options.long_run)
      throw CapabilityError("claim " + e.info.id + " needs the long-run flag");
    auto c = e.run(options);
    c.seed = options.seed;
    return c;
  }
  throw ParameterError("unknown claim id: " + std::string(id));
}

}  // namespace fanoturan
