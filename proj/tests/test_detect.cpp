#include <gtest/gtest.h>

#include <random>

#include "fanoturan/detect.hpp"
#include "fanoturan/error.hpp"
#include "fanoturan/search.hpp"

using namespace fanoturan;

namespace {

// Oracle: first k-subset (in mask order) spanning all its triples.
bool has_clique_brute(const Hypergraph& h, int k) {
  for (VertexSet s = 0; s < (VertexSet{1} << h.n()); ++s) {
    if (set_size(s) != k) continue;
    bool all = true;
    for (int c = 0; c < h.n() && all; ++c)
      for (int b = 0; b < c && all; ++b)
        for (int a = 0; a < b && all; ++a)
          if ((s >> a & 1) && (s >> b & 1) && (s >> c & 1)) all = h.has_edge(a, b, c);
    if (all) return true;
  }
  return false;
}

void expect_all_methods(const Hypergraph& h, bool expected) {
  for (auto m : kDetectionMethods) {
    const auto copy = find_fano(h, m);
    EXPECT_EQ(copy.has_value(), expected) << method_name(m);
    if (copy) EXPECT_TRUE(is_fano_copy(h, *copy)) << method_name(m);
  }
}

}  // namespace

TEST(Clique, NamedExamples) {
  EXPECT_TRUE(contains_clique(construct(Family::j7, 7), 6));
  EXPECT_TRUE(contains_clique(construct(Family::balanced_bipartite, 4), 4));
  for (int n = 4; n <= 10; ++n) {
    EXPECT_TRUE(contains_clique(construct(Family::balanced_bipartite, n), 4)) << n;
    EXPECT_FALSE(contains_clique(construct(Family::balanced_bipartite, n), 5)) << n;
  }
  EXPECT_EQ(find_clique(construct(Family::complete, 8), 5), VertexSet{0b11111});
  EXPECT_FALSE(find_clique(construct(Family::complete, 4), 5));
  EXPECT_THROW(find_clique(construct(Family::complete, 8), 3), ParameterError);
}

TEST(Clique, AgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = random_hypergraph(8, 0.5 + 0.4 * (trial % 3) / 2.0, rng);
    for (int k = 4; k <= 6; ++k) EXPECT_EQ(contains_clique(h, k), has_clique_brute(h, k)) << trial << " " << k;
  }
}

TEST(Fano, NamedInputs) {
  expect_all_methods(construct(Family::fano, 7), true);
  expect_all_methods(construct(Family::complete, 7), true);
  expect_all_methods(construct(Family::j7, 7), false);
  for (int n = 7; n <= 12; ++n) expect_all_methods(construct(Family::balanced_bipartite, n), false);
  expect_all_methods(construct(Family::pasch, 6), false);
}

TEST(Fano, IdentityEmbeddingOfTheFanoPlane) {
  const auto phi = find_fano_embedding(construct(Family::fano, 7));
  ASSERT_TRUE(phi);
  EXPECT_EQ(*phi, (FanoEmbedding{0, 1, 2, 3, 4, 5, 6}));
}

TEST(Fano, CrossingPairsBuiltByHand) {
  // Edge {0,1,2}; quad {3,4,5,6}; link of 0 holds 34|56, link of 1 holds 35|46, link of 2 holds 36|45.
  Hypergraph h(9);
  h.add_edge(0, 1, 2);
  h.add_edge(0, 3, 4), h.add_edge(0, 5, 6);
  h.add_edge(1, 3, 5), h.add_edge(1, 4, 6);
  h.add_edge(2, 3, 6), h.add_edge(2, 4, 5);
  const auto w = find_fano_crossing(h);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->edge, (Triple{0, 1, 2}));
  EXPECT_EQ(w->quad, (std::array<Vertex, 4>{3, 4, 5, 6}));
  EXPECT_EQ(w->matching, (std::array<int, 3>{0, 1, 2}));
  expect_all_methods(h, true);
  h.remove_edge(Triple{2, 4, 5});
  expect_all_methods(h, false);
}

TEST(Fano, PaschFindsEveryApex) {
  // Each point of the plane is the apex of a Pasch witness in some relabelling.
  const auto fano = construct(Family::fano, 7);
  for (Vertex v = 0; v < 7; ++v) {
    std::vector<Vertex> perm(7);
    for (Vertex u = 0; u < 7; ++u) perm[u] = (u - v + 7) % 7;
    const auto h = fano.relabel(perm);
    const auto w = find_fano_pasch(h);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->apex, 0);
    EXPECT_TRUE(is_fano_copy(h, fano_edges(*w)));
  }
}

TEST(Fano, MethodNames) {
  for (auto m : kDetectionMethods) EXPECT_EQ(method_from_name(method_name(m)), m);
  EXPECT_FALSE(method_from_name("magic"));
}

TEST(Fano, ThreeWayAgreementOnRandomSamples) {
  for (int n : {7, 8, 9}) {
    std::mt19937_64 rng(1000 + n);
    int positives = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto h = random_hypergraph(n, 0.3 + 0.6 * i / 999.0, rng);
      const bool e = contains_fano_embedding(h);
      positives += e;
      ASSERT_EQ(contains_fano_crossing(h), e) << n << " " << i;
      ASSERT_EQ(contains_fano_pasch(h), e) << n << " " << i;
    }
    // Both outcomes occur, so agreement is not vacuous.
    EXPECT_GT(positives, 50);
    EXPECT_LT(positives, 950);
  }
}

TEST(Fano, WitnessesAreSound) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 300; ++i) {
    const auto h = random_hypergraph(8, 0.6, rng);
    for (auto m : kDetectionMethods)
      if (const auto copy = find_fano(h, m)) ASSERT_TRUE(is_fano_copy(h, *copy));
  }
}

TEST(Fano, IsFanoCopyRejectsNonPlanes) {
  const auto fano = construct(Family::fano, 7);
  auto edges = *find_fano(fano, DetectionMethod::embedding);
  EXPECT_TRUE(is_fano_copy(fano, edges));
  edges[0] = edges[1];
  EXPECT_FALSE(is_fano_copy(fano, edges));
  EXPECT_FALSE(is_fano_copy(construct(Family::pasch, 6), *find_fano(fano, DetectionMethod::embedding)));
}

TEST(Fano, MonotoneUnderAddingEdges) {
  std::mt19937_64 rng(77);
  auto h = random_hypergraph(8, 0.3, rng);
  std::array<bool, 3> before{};
  for (std::size_t m = 0; m < 3; ++m) before[m] = contains_fano(h, kDetectionMethods[m]);
  for (int step = 0; step < 200; ++step) {
    h.add_edge(triple_unrank(static_cast<std::uint32_t>(rng() % binomial(8, 3))));
    for (std::size_t m = 0; m < 3; ++m) {
      const bool now = contains_fano(h, kDetectionMethods[m]);
      EXPECT_TRUE(now || !before[m]);
      before[m] = now;
    }
  }
  EXPECT_TRUE(before[0]);
}

TEST(Fano, SmallHypergraphsHaveNoCopy) {
  expect_all_methods(construct(Family::complete, 6), false);
  expect_all_methods(Hypergraph(3), false);
}
