#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "fanoturan/hypergraph.hpp"

namespace fanoturan {

enum class DetectionMethod { embedding, crossing_pairs, pasch_matching };

inline constexpr std::array<DetectionMethod, 3> kDetectionMethods{
    DetectionMethod::embedding, DetectionMethod::crossing_pairs, DetectionMethod::pasch_matching};

std::string_view method_name(DetectionMethod m);
std::optional<DetectionMethod> method_from_name(std::string_view name);

/// The seven edges of a Fano copy, as found in some hypergraph.
using FanoEdges = std::array<Triple, 7>;

/// True iff all seven triples are edges of h and they form a Fano plane: seven points,
/// every pair of which lies in exactly one of the triples.
bool is_fano_copy(const Hypergraph& h, const FanoEdges& edges);

// --- cliques -------------------------------------------------------------------------------

/// Lexicographically first k-set spanning all C(k,3) triples; k must lie in [4, 6].
std::optional<VertexSet> find_clique(const Hypergraph& h, int k);
bool contains_clique(const Hypergraph& h, int k);

// --- embedding ------------------------------------------------------------------------------

/// image[i] is the vertex that canonical Fano point i (see kFanoLines) is sent to.
using FanoEmbedding = std::array<Vertex, 7>;

/// Lexicographically first injective image of the Fano points that maps every line to an edge.
/// Points are placed in index order; each candidate set is cut down by every line whose other
/// two points are already placed.
std::optional<FanoEmbedding> find_fano_embedding(const Hypergraph& h);
bool contains_fano_embedding(const Hypergraph& h);
FanoEdges fano_edges(const FanoEmbedding& phi);

// --- three crossing pairs ---------------------------------------------------------------------

/// An edge xyz and four further vertices q0<q1<q2<q3. Their perfect matchings are
/// m0 = {q0q1, q2q3}, m1 = {q0q2, q1q3}, m2 = {q0q3, q1q2}; matching[t] is the one lying in the
/// link of the t-th vertex of the edge.
struct CrossingPairsWitness {
  Triple edge;
  std::array<Vertex, 4> quad{};
  std::array<int, 3> matching{};
};

std::optional<CrossingPairsWitness> find_fano_crossing(const Hypergraph& h);
bool contains_fano_crossing(const Hypergraph& h);
FanoEdges fano_edges(const CrossingPairsWitness& w);

// --- Pasch configuration over a link matching -------------------------------------------------

/// A vertex, a perfect matching {x0x1, x2x3, x4x5} of six other vertices inside its link, and the
/// parity class (index into kPaschPatterns) whose four transversal triples are all edges.
struct PaschWitness {
  Vertex apex = 0;
  std::array<Vertex, 6> matched{};
  int parity = 0;
};

std::optional<PaschWitness> find_fano_pasch(const Hypergraph& h);
bool contains_fano_pasch(const Hypergraph& h);
FanoEdges fano_edges(const PaschWitness& w);

bool contains_fano(const Hypergraph& h, DetectionMethod method);
/// Witness edges from the given method, if any.
std::optional<FanoEdges> find_fano(const Hypergraph& h, DetectionMethod method);

}  // namespace fanoturan
