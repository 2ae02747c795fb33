#pragma once

#include <cstdint>
#include <random>

#include "subcubic/graph.hpp"

namespace subcubic {

using Rng = std::mt19937_64;

/// Connected graph on n vertices: a random spanning tree (uniform over
/// labelled trees when no degree cap bites) plus up to `extra_edges` random
/// chords. Every vertex keeps degree <= max_degree; pass n - 1 or more for
/// no cap.
Graph random_connected_graph(Rng& rng, int n, int max_degree, int extra_edges);

/// [S, V \ S] for a random proper nonempty S of a connected graph.
EdgeCut random_edge_cut(Rng& rng, const Graph& g);

struct StarCutSample {
  Graph graph;
  EdgeCut cut;  // all edges share one endpoint; side holds that endpoint's part
};

/// Two random connected graphs of orders a and b joined by k >= 1 edges
/// from one vertex of the first to distinct vertices of the second.
StarCutSample random_star_cut(Rng& rng, int a, int b, int max_degree);

}  // namespace subcubic
