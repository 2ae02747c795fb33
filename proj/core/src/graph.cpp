#include "subcubic/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <sstream>

namespace subcubic {
namespace {

VertexSet bit(int v) { return VertexSet{1} << v; }

std::string edge_name(int u, int v) {
  std::ostringstream os;
  os << "(" << u << "," << v << ")";
  return os.str();
}

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError(GraphErrc::InvalidOrder,
                     "graph order " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxVertices));
  }
}

// Vertices reachable from `start` inside `allowed`.
VertexSet reach(std::span<const VertexSet> rows, int start, VertexSet allowed) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) {
      next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> rows_without(const Graph& g, std::span<const Edge> f) {
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  for (auto [u, v] : f) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
      throw GraphError(GraphErrc::EdgeAbsent, "edge " + edge_name(u, v) + " is not in the graph");
    }
    rows[static_cast<std::size_t>(u)] &= ~bit(v);
    rows[static_cast<std::size_t>(v)] &= ~bit(u);
  }
  return rows;
}

int count_components(std::span<const VertexSet> rows, VertexSet all) {
  int parts = 0;
  VertexSet left = all;
  while (left != 0) {
    left &= ~reach(rows, std::countr_zero(left), all);
    ++parts;
  }
  return parts;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw GraphError(GraphErrc::NotConnected, std::string(what) + " requires a connected graph");
  }
}

// Maximum number of edge-disjoint s-t paths in a unit-capacity graph.
int max_flow(const Graph& g, int s, int t) {
  const int n = g.order();
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) {
    cap[u][v] = 1;
    cap[v][u] = 1;
  }
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty() && parent[t] < 0) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[t] < 0) return flow;
    for (int v = t; v != s; v = parent[v]) {
      --cap[parent[v]][v];
      ++cap[v][parent[v]];
    }
    ++flow;
  }
}

}  // namespace

const char* to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::InvalidOrder: return "invalid-order";
    case GraphErrc::VertexOutOfRange: return "vertex-out-of-range";
    case GraphErrc::DuplicateEdge: return "duplicate-edge";
    case GraphErrc::SelfLoop: return "self-loop";
    case GraphErrc::EdgeAbsent: return "edge-absent";
    case GraphErrc::NotConnected: return "not-connected";
    case GraphErrc::NotATree: return "not-a-tree";
    case GraphErrc::Acyclic: return "acyclic";
    case GraphErrc::NotAnEdgeCut: return "not-an-edge-cut";
    case GraphErrc::TooManyComponents: return "too-many-components";
    case GraphErrc::TooFewVertices: return "too-few-vertices";
    case GraphErrc::BadGraph6: return "bad-graph6";
  }
  return "unknown";
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrc::VertexOutOfRange,
                       "edge " + edge_name(u, v) + " has a vertex outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw GraphError(GraphErrc::SelfLoop, "loop at vertex " + std::to_string(u));
    }
    if (rows[static_cast<std::size_t>(u)] & bit(v)) {
      throw GraphError(GraphErrc::DuplicateEdge, "duplicate edge " + edge_name(u, v));
    }
    rows[static_cast<std::size_t>(u)] |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph(n, std::move(rows), static_cast<int>(edges.size()));
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw GraphError(GraphErrc::InvalidOrder, "row count does not match order");
  }
  const VertexSet mask = n == 64 ? ~VertexSet{0} : (bit(n) - 1);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    VertexSet r = rows[static_cast<std::size_t>(v)];
    if (r & ~mask) throw GraphError(GraphErrc::VertexOutOfRange, "row has bits beyond the order");
    if (r & bit(v)) throw GraphError(GraphErrc::SelfLoop, "loop at vertex " + std::to_string(v));
    for (VertexSet w = r; w != 0; w &= w - 1) {
      int u = std::countr_zero(w);
      if (!(rows[static_cast<std::size_t>(u)] & bit(v))) {
        throw GraphError(GraphErrc::VertexOutOfRange, "adjacency rows are not symmetric");
      }
    }
    degree_sum += std::popcount(r);
  }
  return Graph(n, std::vector<VertexSet>(rows.begin(), rows.end()), degree_sum / 2);
}

VertexSet Graph::all_vertices() const noexcept {
  return n_ == 64 ? ~VertexSet{0} : (bit(n_) - 1);
}

bool Graph::has_edge(int u, int v) const {
  return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

int Graph::degree(int v) const { return std::popcount(rows_[static_cast<std::size_t>(v)]); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    VertexSet upper = rows_[static_cast<std::size_t>(u)] & ~((bit(u) << 1) - 1);
    for (; upper != 0; upper &= upper - 1) out.emplace_back(u, std::countr_zero(upper));
  }
  return out;
}

Graph Graph::relabel(std::span<const int> perm) const {
  std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
  for (int u = 0; u < n_; ++u) {
    VertexSet r = 0;
    for (VertexSet w = rows_[static_cast<std::size_t>(u)]; w != 0; w &= w - 1) {
      r |= bit(perm[static_cast<std::size_t>(std::countr_zero(w))]);
    }
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = r;
  }
  return Graph(n_, std::move(rows), m_);
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  check_order(k);
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < k; ++i) index[static_cast<std::size_t>(vertices[static_cast<std::size_t>(i)])] = i;
  std::vector<VertexSet> rows(static_cast<std::size_t>(k), 0);
  int degree_sum = 0;
  for (int i = 0; i < k; ++i) {
    for (VertexSet w = rows_[static_cast<std::size_t>(vertices[static_cast<std::size_t>(i)])]; w != 0; w &= w - 1) {
      int j = index[static_cast<std::size_t>(std::countr_zero(w))];
      if (j >= 0) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        ++degree_sum;
      }
    }
  }
  return Graph(k, std::move(rows), degree_sum / 2);
}

Graph Graph::with_new_vertex(VertexSet neighbours) const {
  check_order(n_ + 1);
  std::vector<VertexSet> rows = rows_;
  for (VertexSet w = neighbours; w != 0; w &= w - 1) rows[static_cast<std::size_t>(std::countr_zero(w))] |= bit(n_);
  rows.push_back(neighbours);
  return Graph(n_ + 1, std::move(rows), m_ + std::popcount(neighbours));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (VertexSet r : g.rows()) best = std::max(best, std::popcount(r));
  return best;
}

int min_degree(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (VertexSet r : g.rows()) best = std::min(best, std::popcount(r));
  return best;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> seq;
  for (VertexSet r : g.rows()) seq.push_back(std::popcount(r));
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

bool is_connected(const Graph& g) {
  return reach(g.rows(), 0, g.all_vertices()) == g.all_vertices();
}

std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  VertexSet left = g.all_vertices();
  while (left != 0) {
    VertexSet part = reach(g.rows(), std::countr_zero(left), g.all_vertices());
    left &= ~part;
    std::vector<int> verts;
    for (VertexSet w = part; w != 0; w &= w - 1) verts.push_back(std::countr_zero(w));
    Graph piece = g.induced(verts);
    out.push_back(Component{std::move(piece), std::move(verts)});
  }
  return out;
}

int cyclomatic_number(const Graph& g) {
  require_connected(g, "cyclomatic_number");
  return g.size() - g.order() + 1;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (VertexSet w = g.row(u); w != 0; w &= w - 1) {
        int v = std::countr_zero(w);
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

VertexSet cut_vertices(const Graph& g) {
  VertexSet out = 0;
  const VertexSet all = g.all_vertices();
  if (g.order() <= 2) return 0;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = all & ~bit(v);
    if (reach(g.rows(), std::countr_zero(rest), rest) != rest) out |= bit(v);
  }
  return out;
}

Graph delete_edges(const Graph& g, std::span<const Edge> f) {
  std::vector<Edge> seen;
  for (auto [u, v] : f) {
    Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) {
      throw GraphError(GraphErrc::DuplicateEdge, "edge " + edge_name(u, v) + " listed twice");
    }
    seen.push_back(e);
  }
  std::vector<VertexSet> rows = rows_without(g, f);
  return Graph::from_rows(g.order(), rows);
}

bool is_edge_cut(const Graph& g, std::span<const Edge> f) {
  std::vector<VertexSet> rows = rows_without(g, f);
  if (f.empty()) return false;
  return count_components(rows, g.all_vertices()) > count_components(g.rows(), g.all_vertices());
}

bool is_star_cut(const Graph& g, std::span<const Edge> f) {
  std::vector<VertexSet> rows = rows_without(g, f);
  if (f.empty()) return false;
  auto [a, b] = f.front();
  for (int centre : {a, b}) {
    bool shared = std::all_of(f.begin(), f.end(), [&](const Edge& e) { return e.first == centre || e.second == centre; });
    if (!shared) continue;
    VertexSet side = reach(rows, centre, g.all_vertices());
    bool crosses = std::all_of(f.begin(), f.end(), [&](const Edge& e) {
      int other = e.first == centre ? e.second : e.first;
      return !(side & bit(other));
    });
    if (crosses) return true;
  }
  return false;
}

Decomposition decompose_by_cut(const Graph& g, const EdgeCut& f) {
  Graph rest = delete_edges(g, f.edges);
  std::vector<Component> parts = components(rest);
  if (parts.size() < 2) {
    throw GraphError(GraphErrc::NotAnEdgeCut, "deleting the edges leaves the graph connected");
  }
  if (parts.size() > 2) {
    throw GraphError(GraphErrc::TooManyComponents,
                     "deleting the edges leaves " + std::to_string(parts.size()) + " components");
  }
  return Decomposition{std::move(parts[0].graph), std::move(parts[1].graph), std::move(parts[0].to_host),
                       std::move(parts[1].to_host)};
}

Graph pruned_core(const Graph& g, std::vector<int>* to_host) {
  require_connected(g, "pruned_core");
  if (g.size() < g.order()) {
    throw GraphError(GraphErrc::Acyclic, "pruned_core is undefined for trees");
  }
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  VertexSet alive = g.all_vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexSet w = alive; w != 0; w &= w - 1) {
      int v = std::countr_zero(w);
      if (std::popcount(rows[static_cast<std::size_t>(v)] & alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  std::vector<int> verts;
  for (VertexSet w = alive; w != 0; w &= w - 1) verts.push_back(std::countr_zero(w));
  Graph core = g.induced(verts);
  if (to_host) *to_host = std::move(verts);
  return core;
}

int edge_connectivity(const Graph& g) {
  if (g.order() < 2) {
    throw GraphError(GraphErrc::TooFewVertices, "edge connectivity needs at least two vertices");
  }
  require_connected(g, "edge_connectivity");
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (max_degree(g) <= 3) {
    std::vector<Edge> chosen;
    // Exhaustive search; the minimum degree bounds the answer by 3.
    for (int size = 1; size <= 3; ++size) {
      std::vector<int> idx(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) idx[i] = i;
      while (size <= m) {
        chosen.clear();
        for (int i : idx) chosen.push_back(edges[i]);
        if (is_edge_cut(g, chosen)) return size;
        int k = size - 1;
        while (k >= 0 && idx[k] == m - size + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return min_degree(g);
  }
  int best = std::numeric_limits<int>::max();
  for (int t = 1; t < g.order(); ++t) best = std::min(best, max_flow(g, 0, t));
  return best;
}

TreeCenter tree_center(const Graph& g) {
  if (!is_tree(g)) throw GraphError(GraphErrc::NotATree, "tree_center requires a tree");
  VertexSet alive = g.all_vertices();
  while (std::popcount(alive) > 2) {
    VertexSet leaves = 0;
    for (VertexSet w = alive; w != 0; w &= w - 1) {
      int v = std::countr_zero(w);
      if (std::popcount(g.row(v) & alive) <= 1) leaves |= bit(v);
    }
    alive &= ~leaves;
  }
  int first = std::countr_zero(alive);
  if (std::popcount(alive) == 1) return TreeCenter{TreeCenter::Kind::Vertex, first, first};
  int second = 63 - std::countl_zero(alive);
  return TreeCenter{TreeCenter::Kind::Edge, first, second};
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  check_order(n1 + g2.order());
  std::vector<VertexSet> rows(g1.rows().begin(), g1.rows().end());
  for (VertexSet r : g2.rows()) rows.push_back(r << n1);
  return Graph::from_rows(n1 + g2.order(), rows);
}

}  // namespace subcubic
