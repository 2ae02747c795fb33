#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subcubic {

/// Hard cap on the order of a Graph; one adjacency row per 64-bit word.
inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

/// An undirected edge. Graph APIs return edges normalized with first < second.
using Edge = std::pair<int, int>;

enum class GraphErrc {
  InvalidOrder,
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  EdgeAbsent,
  NotConnected,
  NotATree,
  Acyclic,
  NotAnEdgeCut,
  TooManyComponents,
  TooFewVertices,
  BadGraph6,
};

const char* to_string(GraphErrc code);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  /// Validating constructor. Rejects out-of-range vertices, loops and
  /// duplicate edges with distinct error codes.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from adjacency rows; rows must be symmetric, loop free and
  /// confined to the low n bits.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  VertexSet row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::span<const VertexSet> rows() const noexcept { return rows_; }
  VertexSet all_vertices() const noexcept;

  bool has_edge(int u, int v) const;
  int degree(int v) const;

  /// Edges sorted lexicographically, each with first < second.
  std::vector<Edge> edges() const;

  /// Returns the graph with vertex v renamed to perm[v].
  Graph relabel(std::span<const int> perm) const;

  /// Subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(std::span<const int> vertices) const;

  /// Adds one new vertex (id n) adjacent to `neighbours`.
  Graph with_new_vertex(VertexSet neighbours) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<VertexSet> rows, int m)
      : n_(n), m_(m), rows_(std::move(rows)) {}

  int n_ = 1;
  int m_ = 0;
  std::vector<VertexSet> rows_;
};

/// An edge cut F = [S, V \ S]. `side`, when present, is a bitmask of S.
struct EdgeCut {
  std::vector<Edge> edges;
  std::optional<VertexSet> side;
};

/// A connected piece of a host graph together with its vertex map.
struct Component {
  Graph graph;
  std::vector<int> to_host;  // component vertex id -> host vertex id
};

/// G - F = G1 + G2. g1 is the part holding the smallest host vertex id.
struct Decomposition {
  Graph g1;
  Graph g2;
  std::vector<int> map1;
  std::vector<int> map2;
};

struct TreeCenter {
  enum class Kind { Vertex, Edge };
  Kind kind;
  int first;   // center vertex, or the smaller end of the center edge
  int second;  // equal to first for a center vertex
};

int max_degree(const Graph& g);
int min_degree(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);  // non-increasing

bool is_connected(const Graph& g);
std::vector<Component> components(const Graph& g);

/// m - n + 1; requires a connected graph.
int cyclomatic_number(const Graph& g);

bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);

/// Vertices whose removal disconnects a connected graph.
VertexSet cut_vertices(const Graph& g);

Graph delete_edges(const Graph& g, std::span<const Edge> f);

bool is_edge_cut(const Graph& g, std::span<const Edge> f);

/// True iff f is an edge cut [S, V\S] whose edges all meet one vertex of S.
bool is_star_cut(const Graph& g, std::span<const Edge> f);

/// Splits g along f; throws TooManyComponents when G - F has more than two
/// parts and NotAnEdgeCut when it stays connected.
Decomposition decompose_by_cut(const Graph& g, const EdgeCut& f);

/// The 2-core: repeatedly strips degree-1 vertices. Vertex ids are
/// renumbered in increasing host order; `to_host` receives the map.
Graph pruned_core(const Graph& g, std::vector<int>* to_host = nullptr);

int edge_connectivity(const Graph& g);

TreeCenter tree_center(const Graph& g);

/// Disjoint union with g2's vertices shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

}  // namespace subcubic
