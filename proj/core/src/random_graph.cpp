#include "subcubic/random_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace subcubic {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Pruefer decoding. Returns false when some vertex would exceed the cap.
bool pruefer_tree(Rng& rng, int n, int cap, std::vector<Edge>& edges) {
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int& x : seq) {
    x = uniform(rng, 0, n - 1);
    if (++degree[static_cast<std::size_t>(x)] > cap) return false;
  }
  edges.clear();
  for (int x : seq) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(x)];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      edges.emplace_back(u, v);
      break;
    }
  }
  return true;
}

// Each new vertex hangs off a random earlier vertex with spare degree.
void attachment_tree(Rng& rng, int n, int cap, std::vector<Edge>& edges) {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  edges.clear();
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u)
      if (degree[static_cast<std::size_t>(u)] < cap) open.push_back(u);
    const int u = open[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(open.size()) - 1))];
    edges.emplace_back(u, v);
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
}

}  // namespace

Graph random_connected_graph(Rng& rng, int n, int max_degree, int extra_edges) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("order outside 1..64");
  if ((n > 2 && max_degree < 2) || (n == 2 && max_degree < 1))
    throw std::invalid_argument("degree cap admits no connected graph");
  const int cap = std::min(max_degree, n - 1);
  std::vector<Edge> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
  } else if (n > 2) {
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) ok = pruefer_tree(rng, n, cap, edges);
    if (!ok) attachment_tree(rng, n, cap, edges);
  }
  Graph tree = Graph::build(n, edges);
  std::vector<VertexSet> rows(tree.rows().begin(), tree.rows().end());
  auto deg = [&](int v) { return std::popcount(rows[static_cast<std::size_t>(v)]); };
  for (int i = 0; i < extra_edges; ++i) {
    std::vector<Edge> open;
    for (int u = 0; u < n; ++u) {
      if (deg(u) >= cap) continue;
      for (int v = u + 1; v < n; ++v)
        if (deg(v) < cap && !(rows[static_cast<std::size_t>(u)] >> v & 1)) open.emplace_back(u, v);
    }
    if (open.empty()) break;
    auto [u, v] = open[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(open.size()) - 1))];
    rows[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
    rows[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
  }
  return Graph::from_rows(n, rows);
}

EdgeCut random_edge_cut(Rng& rng, const Graph& g) {
  const int n = g.order();
  if (n < 2) throw GraphError(GraphErrc::TooFewVertices, "a single vertex has no edge cut");
  if (!is_connected(g)) throw GraphError(GraphErrc::NotConnected, "random_edge_cut needs a connected graph");
  const VertexSet all = g.all_vertices();
  VertexSet side = 0;
  while (side == 0 || side == all) {
    side = 0;
    for (int v = 0; v < n; ++v)
      if (uniform(rng, 0, 1)) side |= VertexSet{1} << v;
  }
  EdgeCut cut;
  for (auto [u, v] : g.edges())
    if (((side >> u) & 1) != ((side >> v) & 1)) cut.edges.emplace_back(u, v);
  cut.side = side;
  return cut;
}

StarCutSample random_star_cut(Rng& rng, int a, int b, int max_degree) {
  if (a < 1 || b < 1 || a + b > kMaxVertices) throw std::invalid_argument("bad part orders");
  const int extra_a = uniform(rng, 0, a);
  const int extra_b = uniform(rng, 0, b);
  const Graph g1 = random_connected_graph(rng, a, max_degree, extra_a);
  const Graph g2 = random_connected_graph(rng, b, max_degree, extra_b);

  std::vector<int> centres;
  for (int v = 0; v < a; ++v)
    if (g1.degree(v) < max_degree) centres.push_back(v);
  if (centres.empty()) centres.push_back(0);  // only when the cap is exhausted
  const int x = centres[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(centres.size()) - 1))];

  std::vector<int> targets;
  for (int v = 0; v < b; ++v)
    if (g2.degree(v) < max_degree) targets.push_back(v);
  if (targets.empty()) targets.push_back(0);
  std::shuffle(targets.begin(), targets.end(), rng);
  const int room = std::max(1, max_degree - g1.degree(x));
  const int k = uniform(rng, 1, std::min(room, static_cast<int>(targets.size())));

  Graph joined = disjoint_union(g1, g2);
  std::vector<Edge> edges = joined.edges();
  EdgeCut cut;
  for (int i = 0; i < k; ++i) {
    const Edge e{x, a + targets[static_cast<std::size_t>(i)]};
    edges.push_back(e);
    cut.edges.push_back(e);
  }
  std::sort(cut.edges.begin(), cut.edges.end());
  cut.side = (a == kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << a) - 1);
  return StarCutSample{Graph::build(a + b, edges), std::move(cut)};
}

}  // namespace subcubic
