#include "fanoturan/io.hpp"

#include <sstream>

#include "fanoturan/error.hpp"

namespace fanoturan {
namespace {

void require_canonical_order(const std::vector<Triple>& edges) {
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!colex_less(edges[i - 1], edges[i]))
      throw ParameterError("edges are not strictly colexicographically sorted");
}

}  // namespace

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  const auto edges = h.edges();
  out << h.n() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.a << ' ' << e.b << ' ' << e.c << '\n';
  return out.str();
}

Hypergraph parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || n > kMaxVertices || m < 0)
    throw ParameterError("hypergraph text: bad header");
  std::vector<Triple> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long a, b, c;
    if (!(in >> a >> b >> c)) throw ParameterError("hypergraph text: truncated edge list");
    if (!(0 <= a && a < b && b < c && c < n))
      throw ParameterError("hypergraph text: edge is not ascending within [0, n)");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
  }
  std::string trailing;
  if (in >> trailing) throw ParameterError("hypergraph text: trailing content");
  require_canonical_order(edges);
  return Hypergraph::from_edges(static_cast<int>(n), edges);
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges()) edges.push_back({e.a, e.b, e.c});
  return {{"n", h.n()}, {"edges", std::move(edges)}};
}

namespace {

Hypergraph hypergraph_from_json_unchecked(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() ||
      !j["edges"].is_array())
    throw ParameterError("hypergraph json: expected {\"n\": int, \"edges\": [...]}");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > kMaxVertices) throw ParameterError("hypergraph json: n out of range");
  std::vector<Triple> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) throw ParameterError("hypergraph json: edge is not a triple");
    const auto a = e[0].get<long long>(), b = e[1].get<long long>(), c = e[2].get<long long>();
    if (!(0 <= a && a < b && b < c && c < n))
      throw ParameterError("hypergraph json: edge is not ascending within [0, n)");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
  }
  require_canonical_order(edges);
  return Hypergraph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    return hypergraph_from_json_unchecked(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("hypergraph json: ") + e.what());
  }
}

Hypergraph parse_hypergraph(std::string_view document) {
  const auto first = document.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && document[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
      throw ParameterError(std::string("hypergraph json: ") + e.what());
    }
    return hypergraph_from_json(j);
  }
  return parse_text(document);
}

}  // namespace fanoturan
