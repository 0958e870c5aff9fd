#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fanoturan/detect.hpp"
#include "fanoturan/error.hpp"
#include "fanoturan/io.hpp"
#include "fanoturan/search.hpp"

using namespace fanoturan;

namespace {

EnumerationPlan plan(int n, int target, Dedup dedup = Dedup::none) {
  EnumerationPlan p;
  p.n = n;
  p.target = target;
  p.dedup = dedup;
  return p;
}

std::set<CanonicalForm> primal_classes(const Enumeration& e) {
  std::set<CanonicalForm> out;
  for (const auto& hbar : e.complements) out.insert(canonical_form(complement(hbar)));
  return out;
}

}  // namespace

TEST(MaxFanoFreeEdges, SmallN) {
  for (int n = 4; n <= 6; ++n) {
    const auto r = max_fano_free_edges(n);
    EXPECT_EQ(r.edges, binomial(n, 3));
    ASSERT_EQ(r.classes.size(), 1U);
    EXPECT_EQ(r.classes[0], canonical_form(construct(Family::complete, n)));
  }
}

TEST(MaxFanoFreeEdges, SevenVertices) {
  const auto r = max_fano_free_edges(7);
  EXPECT_EQ(r.edges, 30);
  std::vector<CanonicalForm> expected{canonical_form(construct(Family::balanced_bipartite, 7)),
                                      canonical_form(construct(Family::j7, 7))};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(r.classes, expected);
  ASSERT_EQ(r.scans.size(), 6U);
  EXPECT_EQ(r.scans[4].space, 52360U);
  EXPECT_EQ(r.scans[4].survivors, 0U);
  EXPECT_EQ(r.scans[5].space, 324632U);
  EXPECT_EQ(r.scans[5].survivors, 56U);
}

TEST(MaxFanoFreeEdges, EightVertices) {
  const auto r = max_fano_free_edges(8);
  EXPECT_EQ(r.edges, 48);
  ASSERT_EQ(r.classes.size(), 1U);
  EXPECT_EQ(r.classes[0], canonical_form(construct(Family::balanced_bipartite, 8)));
  // C(8,4)/2 labellings of B_8.
  EXPECT_EQ(r.scans.back().survivors, 35U);
  for (const auto& s : r.scans) EXPECT_EQ(s.visited, s.space);
}

TEST(MaxFanoFreeEdges, OutOfRange) {
  EXPECT_THROW(max_fano_free_edges(3), CapabilityError);
  EXPECT_THROW(max_fano_free_edges(9), CapabilityError);
}

TEST(Enumeration, CanonicalDedupKeepsTheSameClasses) {
  const auto all = enumerate_complements(plan(7, 5));
  const auto dedup = enumerate_complements(plan(7, 5, Dedup::canonical));
  EXPECT_EQ(all.complements.size(), 56U);
  EXPECT_EQ(dedup.complements.size(), 2U);
  EXPECT_EQ(primal_classes(all), primal_classes(dedup));
  for (const auto& hbar : dedup.complements) EXPECT_TRUE(is_canonical(hbar));
}

TEST(Enumeration, SurvivingComplementClasses) {
  // Tetrahedron plus a disjoint triple, and the five triples through one pair.
  Hypergraph tetra_edge(7);
  for (auto t : {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 2, 3}, Triple{1, 2, 3}, Triple{4, 5, 6}})
    tetra_edge.add_edge(t);
  Hypergraph pair_star(7);
  for (Vertex c = 2; c < 7; ++c) pair_star.add_edge(0, 1, c);
  std::set<CanonicalForm> expected{canonical_form(tetra_edge), canonical_form(pair_star)};
  std::set<CanonicalForm> found;
  for (const auto& hbar : enumerate_complements(plan(7, 5, Dedup::canonical)).complements)
    found.insert(canonical_form(hbar));
  EXPECT_EQ(found, expected);
}

TEST(Enumeration, ComplementDualitySpotCheck) {
  // Random 5-triple complements: survivor status equals Fano-freeness of the rebuilt primal.
  const auto survivors = enumerate_complements(plan(7, 5));
  std::set<std::uint64_t> survivor_masks;
  for (const auto& h : survivors.complements) survivor_masks.insert(h.mask());
  std::mt19937_64 rng(21);
  std::vector<int> ranks(35);
  std::iota(ranks.begin(), ranks.end(), 0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::shuffle(ranks.begin(), ranks.end(), rng);
    std::uint64_t mask = 0;
    for (int i = 0; i < 5; ++i) mask |= std::uint64_t{1} << ranks[i];
    if (trial % 10 == 0 && !survivors.complements.empty())
      mask = survivors.complements[rng() % survivors.complements.size()].mask();
    Hypergraph primal(7);
    for (int r = 0; r < 35; ++r)
      if (!(mask >> r & 1)) primal.add_edge(triple_unrank(static_cast<std::uint32_t>(r)));
    EXPECT_EQ(survivor_masks.contains(mask), !contains_fano_crossing(primal));
  }
}

TEST(Enumeration, BoundaryWitnessesExtendToFanoCopies) {
  // Every superset of an extremal primal contains a Fano plane.
  std::mt19937_64 rng(31);
  for (int n : {7, 8}) {
    const auto r = max_fano_free_edges(n);
    for (int trial = 0; trial < 50; ++trial) {
      auto h = r.classes[trial % r.classes.size()].hypergraph();
      const auto missing = complement(h).edges();
      h.add_edge(missing[rng() % missing.size()]);
      EXPECT_TRUE(contains_fano_embedding(h));
    }
  }
}

TEST(FanoLineCount, Values) {
  const std::vector<Vertex> id{0, 1, 2, 3, 4, 5, 6};
  EXPECT_EQ(fano_line_count(construct(Family::fano, 7), id), 7);
  EXPECT_EQ(fano_line_count(Hypergraph(7), id), 0);
  EXPECT_THROW(fano_line_count(Hypergraph(6), id), ParameterError);
}

TEST(FanoLineCount, AveragesOverAllPermutations) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    Hypergraph hbar(7);
    while (hbar.edge_count() < 5) hbar.add_edge(triple_unrank(static_cast<std::uint32_t>(rng() % 35)));
    std::vector<Vertex> sigma{0, 1, 2, 3, 4, 5, 6};
    std::int64_t total = 0;
    do total += fano_line_count(hbar, sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    EXPECT_EQ(total, 5040 / 5 * 5);
  }
}

TEST(Verifiers, SevenVertexExtremalClasses) {
  const auto c = verify_lemma_n7();
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.space, 52360U + 324632U);
  EXPECT_EQ(c.visited, c.space);
  EXPECT_EQ(c.witnesses.size(), 2U);
}

TEST(Verifiers, SevenVertexWithAThirdExpectedClassFails) {
  const std::vector<CanonicalForm> extra{canonical_form(construct(Family::complete, 7))};
  const auto c = verify_lemma_n7(extra);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.witnesses.at(0).at("reason"), "expected class not found");
}

TEST(Verifiers, LinkBoundForcesB6) {
  const auto c = verify_lemma_2_3();
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.space, 6914048U);
}

TEST(Verifiers, LinkBoundWeakerDegreeMutant) {
  const auto c = verify_lemma_2_3(10);
  std::cout << "[mutant] lemma-2-3 with d(v) >= 10: " << (c.pass ? "pass" : "fail") << '\n';
  ASSERT_FALSE(c.pass);
  const auto h = hypergraph_from_json(c.witnesses.at(0));
  EXPECT_FALSE(contains_fano_embedding(h));
  EXPECT_GE(h.degree(6), 10);
  EXPECT_FALSE(recognize_balanced_bipartite(h.induced(all_vertices(6))));
}

TEST(Verifiers, MaxFanoFreeLinkOnK6) {
  const auto c = verify_fact_2_4();
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.space, 32768U);
  EXPECT_LT(46, b_formula(8));
  // The recorded 11-edge link carries a Fano copy.
  const auto h = hypergraph_from_json(c.witnesses.back().at("hypergraph"));
  EXPECT_EQ(link_graph(h, 6).edge_count(), 11);
  EXPECT_TRUE(contains_fano_pasch(h));
}

TEST(Verifiers, MatchingFacts) {
  const auto c = verify_matching_facts();
  EXPECT_TRUE(c.pass);
  Graph k5(6);
  for (Vertex b = 1; b < 5; ++b)
    for (Vertex a = 0; a < b; ++a) k5.add_edge(a, b);
  EXPECT_FALSE(k5.has_perfect_matching());
  EXPECT_TRUE(complete_graph(6).has_perfect_matching());
}

TEST(Verifiers, TetrahedronFreeComplements) {
  const std::array ns{4, 5, 6, 7};
  const auto c = verify_fact_tetra(ns);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.space, 1U + 10U + 190U + 324632U + 61U);
  const std::array bad{8};
  EXPECT_THROW(verify_fact_tetra(bad), ParameterError);
}

TEST(Verifiers, OddEqualityChain) {
  EXPECT_TRUE(verify_section4_arithmetic(10001).pass);
  // n = 9: b(5) + f4(5) + 5*5 + 4 = 9 + 32 + 25 + 4 = 70.
  EXPECT_EQ(b_formula(5) + 32 + 25 + 4, b_formula(9));
  const auto mutant = verify_section4_arithmetic(10001, 0);
  EXPECT_FALSE(mutant.pass);
  EXPECT_EQ(mutant.witnesses.at(0).at("n"), 9);
  EXPECT_EQ(b_formula(8) - b_formula(7), 18);
}

TEST(Verifiers, DetectorAgreementIsReproducible) {
  const std::array ns{7, 8};
  const auto a = verify_detector_agreement(42, ns, 200);
  const auto b = verify_detector_agreement(42, ns, 200);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.detail, b.detail);
  EXPECT_EQ(a.seed, 42U);
}

TEST(Verifiers, ExCertificates) {
  for (int n : {5, 7}) {
    const auto c = verify_ex(n);
    EXPECT_TRUE(c.pass) << n;
    EXPECT_EQ(certificate_problem(c), "");
  }
}

TEST(RandomHypergraph, DensityExtremes) {
  std::mt19937_64 rng(1);
  EXPECT_EQ(random_hypergraph(8, 0.0, rng).edge_count(), 0);
  EXPECT_EQ(random_hypergraph(8, 1.0, rng).edge_count(), 56);
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(random_hypergraph(9, 0.5, a), random_hypergraph(9, 0.5, b));
}
