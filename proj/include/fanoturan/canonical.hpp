#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanoturan/hypergraph.hpp"

namespace fanoturan {

inline constexpr int kMaxCanonicalVertices = 12;

/// Relabelling-invariant fingerprint of a hypergraph.
///
/// Vertices are ordered by non-increasing degree; among all relabellings that respect this
/// order the lexicographically least edge bitset (compared word by word, word 0 first) is kept.
/// Two hypergraphs share a CanonicalForm iff they are isomorphic, and the form is itself the
/// edge bitset of a member of the isomorphism class.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> code;

  [[nodiscard]] Hypergraph hypergraph() const;
  [[nodiscard]] std::string hex() const;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Throws CapabilityError for n > kMaxCanonicalVertices.
CanonicalForm canonical_form(const Hypergraph& h);

/// True iff h is already labelled as its own canonical form.
bool is_canonical(const Hypergraph& h);

bool are_isomorphic(const Hypergraph& g, const Hypergraph& h);

/// Canonical pair-mask of a graph on at most 10 vertices (same scheme as CanonicalForm).
std::uint64_t canonical_graph_code(const Graph& g);

struct Bipartition {
  VertexSet x = 0;  // contains vertex 0
  VertexSet y = 0;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Finds a partition with class sizes differing by at most one such that h is exactly the set of
/// triples meeting both classes. Empty when h is not a balanced complete bipartite hypergraph.
std::optional<Bipartition> recognize_balanced_bipartite(const Hypergraph& h);

/// Independent vertex sets of the given size (no edge inside), in colex order of their masks.
std::vector<VertexSet> independent_sets_of_size(const Hypergraph& h, int size);

}  // namespace fanoturan
