#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subcubic/graph.hpp"

namespace subcubic {

/// Symbolic names for the graphs the energy results refer to.
struct NamedGraph {
  enum class Kind { S1, S2, S3, S4, W, Q, K22, K23, K33, Path, Cycle, Star, CompleteBipartite };
  Kind kind;
  int a = 0;  // Path/Cycle/Star order, or first side of K_{a,b}
  int b = 0;  // second side of K_{a,b}

  friend bool operator==(const NamedGraph&, const NamedGraph&) = default;
};

/// Parses the CLI spelling (case-insensitive): s1 s2 s3 s4 w q k22 k23 k33
/// p<k> c<k> star<k> kb<a>x<b>. Throws std::invalid_argument on unknown names.
NamedGraph parse_graph_name(std::string_view text);

std::string to_string(const NamedGraph& name);

/// Deterministic construction; identical labelling on every call.
///
/// W is the 7-vertex tree obtained from Q by subdividing its spine edge:
/// spine 0-6-1, pendants 2,3 on vertex 0 and 4,5 on vertex 1. It is the only
/// hypoenergetic 7-vertex tree of maximum degree 3 (checked by the tree scan).
Graph named(const NamedGraph& name);

/// Convenience wrapper around parse_graph_name + named.
Graph named(std::string_view text);

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph star_graph(int k);  // star on k vertices
Graph complete_bipartite(int a, int b);

/// {S2, K22, Q, K33}: the connected subcubic graphs with E = n.
std::vector<NamedGraph> equality_graphs();
/// {S1, S3, S4, W, K23}: the connected subcubic graphs with E < n.
std::vector<NamedGraph> hypoenergetic_graphs();

}  // namespace subcubic
