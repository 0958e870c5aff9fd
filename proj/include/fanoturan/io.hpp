#pragma once

#include <string>
#include <string_view>

#include "fanoturan/hypergraph.hpp"
#include "json.hpp"

namespace fanoturan {

// Text format: a header line "n m", then m lines "a b c" (0-indexed, ascending within a line,
// lines in colexicographic order). The JSON mirror is {"n": n, "edges": [[a,b,c], ...]} in the
// same order. Parsers reject anything the writers would not produce.

std::string to_text(const Hypergraph& h);
Hypergraph parse_text(std::string_view text);

nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

/// Dispatches on the first non-blank character: '{' means JSON, anything else the text format.
Hypergraph parse_hypergraph(std::string_view document);

}  // namespace fanoturan
