#include "fanoturan/error.hpp"
#include "fanoturan/hypergraph.hpp"
#include "fanoturan/kernels.hpp"
#include "fanoturan/multigraph.hpp"

namespace fanoturan {
namespace {

nlohmann::json state_witness(const char* part, std::uint32_t state) {
  return {{"part", part}, {"state", state}, {"multigraph", to_json(four_vertex_state(state))}};
}

// 4 * F(m) with F(m) = (7m^2 - m)/4, the upper bound for f_5(m).
std::int64_t f5_bound_quarters(std::int64_t m) { return 7 * m * m - m; }

}  // namespace

Certificate verify_lemma_4vertex(const FourVertexThresholds& thresholds) {
  Stopwatch clock;
  const auto scan = four_vertex_scan(thresholds);
  Certificate c;
  c.claim = "lemma-4vertex";
  c.space = scan.space;
  c.visited = scan.visited;
  if (scan.counterexample_i) c.witnesses.push_back(state_witness("i", *scan.counterexample_i));
  if (scan.counterexample_ii) c.witnesses.push_back(state_witness("ii", *scan.counterexample_ii));
  c.pass = c.witnesses.empty();
  c.detail = "crossing-free states inspected " + std::to_string(scan.crossing_free) + ", filtered by total " +
             std::to_string(scan.filtered) + ", max crossing-free total " +
             std::to_string(scan.max_crossing_free_edges);
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

Certificate verify_corollary_inequalities(int n_max, Relation relation) {
  if (n_max < 9) throw ParameterError("inequality check needs n_max >= 9");
  Stopwatch clock;
  Certificate c;
  c.claim = "corollary-bf";
  for (std::int64_t n = 9; n <= n_max; n += 2) {
    const std::int64_t rhs = 4 * b_formula(static_cast<int>(n));
    const std::int64_t a = n - 5;
    const std::int64_t b = n - 6;
    const std::int64_t lhs_a = 4 * (b_formula(static_cast<int>(a)) + 7 * a + 10) + f5_bound_quarters(a);
    const std::int64_t lhs_b = 4 * (b_formula(static_cast<int>(b)) + binomial(b, 2) + 10 * b + 20) + 2 * (n - 9) +
                               f5_bound_quarters(b);
    for (const auto& [name, lhs] : {std::pair{"a", lhs_a}, std::pair{"b", lhs_b}}) {
      ++c.space;
      ++c.visited;
      const bool holds = relation == Relation::less ? lhs < rhs : lhs >= rhs;
      if (!holds && c.witnesses.size() < 4)
        c.witnesses.push_back({{"n", n}, {"inequality", name}, {"lhs_quarters", lhs}, {"rhs_quarters", rhs}});
    }
  }
  c.pass = c.witnesses.empty();
  c.detail = "odd n in [9, " + std::to_string(n_max) + "], both inequalities";
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

}  // namespace fanoturan
