#pragma once

#include <string>
#include <string_view>

#include "sepmatch/graph.hpp"

namespace sepmatch {

// graph6 reader. Accepts an optional ">>graph6<<" header and trailing
// whitespace; handles the one-byte and four-byte size forms.
// Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

// graph6 writer (no header). Throws PreconditionError above 258047 vertices.
std::string emit_graph6(const Graph& g);

}  // namespace sepmatch
