#pragma once

#include <string>
#include <string_view>

#include "subcubic/graph.hpp"

namespace subcubic {

/// graph6 text encoding (no ">>graph6<<" header). Orders up to 62 use the
/// one-byte size prefix, 63..64 the four-byte '~' form.
std::string to_graph6(const Graph& g);

/// Parses one graph6 string; throws GraphError(BadGraph6) on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace subcubic
