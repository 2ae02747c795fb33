#include "subcubic/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace subcubic {
namespace {

VertexSet bit(int v) { return VertexSet{1} << v; }

using Partition = std::vector<VertexSet>;

// Splits cells by neighbour counts into each cell in turn until equitable.
void refine(const Graph& g, Partition& cells) {
  std::array<VertexSet, kMaxVertices + 1> groups{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const VertexSet splitter = cells[w];
      Partition next;
      next.reserve(cells.size() + 4);
      for (VertexSet cell : cells) {
        if (std::has_single_bit(cell)) {
          next.push_back(cell);
          continue;
        }
        int lo = kMaxVertices + 1;
        int hi = -1;
        for (VertexSet c = cell; c != 0; c &= c - 1) {
          int v = std::countr_zero(c);
          int k = std::popcount(g.row(v) & splitter);
          groups[static_cast<std::size_t>(k)] |= bit(v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) {
          groups[static_cast<std::size_t>(lo)] = 0;
          next.push_back(cell);
          continue;
        }
        for (int k = lo; k <= hi; ++k) {
          if (groups[static_cast<std::size_t>(k)] != 0) {
            next.push_back(groups[static_cast<std::size_t>(k)]);
            groups[static_cast<std::size_t>(k)] = 0;
          }
        }
        changed = true;
      }
      cells.swap(next);
    }
  }
}

std::size_t target_cell(const Partition& cells) {
  std::size_t best = cells.size();
  int best_size = kMaxVertices + 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    int size = std::popcount(cells[i]);
    if (size > 1 && size < best_size) {
      best = i;
      best_size = size;
    }
  }
  return best;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition cells{g_.all_vertices()};
    visit(cells);
  }

  const std::vector<int>& best_labels() const { return best_lab_; }
  const std::vector<std::vector<int>>& automorphisms() const { return autos_; }

 private:
  using Code = std::vector<VertexSet>;

  void visit(Partition cells) {
    refine(g_, cells);
    const std::size_t t = target_cell(cells);
    if (t == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> explored;
    std::size_t autos_seen = static_cast<std::size_t>(-1);
    UnionFind orbits(n_);
    for (VertexSet c = cells[t]; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      if (!explored.empty()) {
        if (autos_seen != autos_.size()) {
          orbits = stabiliser_orbits();
          autos_seen = autos_.size();
        }
        const int root = orbits.find(v);
        bool equivalent = std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits.find(u) == root; });
        if (equivalent) continue;
      }
      explored.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == t) {
          child.push_back(bit(v));
          child.push_back(cells[i] & ~bit(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix_.push_back(v);
      visit(std::move(child));
      prefix_.pop_back();
    }
  }

  // Orbits of the group generated by the stored automorphisms that fix the
  // current individualisation prefix pointwise.
  UnionFind stabiliser_orbits() const {
    UnionFind uf(n_);
    for (const auto& a : autos_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int p) { return a[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, a[static_cast<std::size_t>(v)]);
    }
    return uf;
  }

  void leaf(const Partition& cells) {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) lab[static_cast<std::size_t>(std::countr_zero(cells[i]))] = static_cast<int>(i);
    Code code = encode(lab);
    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_code_ = code;
      best_lab_ = lab;
      best_code_ = std::move(code);
      return;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, lab);
    } else if (code == best_code_) {
      record_automorphism(best_lab_, lab);
    } else if (code < best_code_) {
      best_lab_ = lab;
      best_code_ = std::move(code);
    }
  }

  // Row i of the relabelled graph, bits j > i, with j = i + 1 most significant.
  Code encode(const std::vector<int>& lab) const {
    Code rows(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      VertexSet r = 0;
      for (VertexSet w = g_.row(v); w != 0; w &= w - 1) r |= bit(lab[static_cast<std::size_t>(std::countr_zero(w))]);
      rows[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])] = r;
    }
    for (int i = 0; i < n_; ++i) {
      VertexSet upper = i == 63 ? 0 : rows[static_cast<std::size_t>(i)] >> (i + 1);
      VertexSet code = 0;
      for (int j = i + 1; j < n_; ++j, upper >>= 1) code = (code << 1) | (upper & 1U);
      rows[static_cast<std::size_t>(i)] = code;
    }
    return rows;
  }

  void record_automorphism(const std::vector<int>& reference, const std::vector<int>& lab) {
    std::vector<int> inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(reference[static_cast<std::size_t>(v)])] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])];
      identity = identity && gamma[static_cast<std::size_t>(v)] == v;
    }
    if (!identity) autos_.push_back(std::move(gamma));
  }

  const Graph& g_;
  int n_;
  std::vector<int> prefix_;
  std::vector<std::vector<int>> autos_;
  std::vector<int> first_lab_;
  Code first_code_;
  std::vector<int> best_lab_;
  Code best_code_;
};

CanonicalForm pack(const Graph& h) {
  CanonicalForm form;
  form.n = h.order();
  const int n = h.order();
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  form.bytes.assign((bits + 7) / 8, 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (h.has_edge(i, j)) form.bytes[k / 8] |= static_cast<std::uint8_t>(0x80U >> (k % 8));
    }
  }
  return form;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  Search search(g);
  search.run();
  CanonicalLabeling out{search.best_labels(), {}, search.automorphisms().size(), {}, g.relabel(search.best_labels())};
  UnionFind uf(g.order());
  for (const auto& a : search.automorphisms()) {
    for (int v = 0; v < g.order(); ++v) uf.unite(v, a[static_cast<std::size_t>(v)]);
  }
  out.orbits.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out.orbits[static_cast<std::size_t>(v)] = uf.find(v);
  out.form = pack(out.canonical_graph);
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.n) * 0x9e3779b97f4a7c15ULL;
  for (auto b : f.bytes) h = (h ^ b) * 0x100000001b3ULL;
  return h;
}

}  // namespace subcubic
