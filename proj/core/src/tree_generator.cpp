#include "tree_generator.hpp"

#include <stdexcept>

namespace subcubic::detail {

TreeGenerator::TreeGenerator(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("tree order outside 1..64");
  if (max_degree < 0) throw std::invalid_argument("negative degree cap");
  build_catalogue(n / 2);
}

void TreeGenerator::build_catalogue(int max_size) {
  const int slots = max_degree_ - 1;  // children of a non-root vertex
  first_of_size_.assign(static_cast<std::size_t>(max_size) + 2, 0);
  for (int s = 1; s <= max_size; ++s) {
    first_of_size_[static_cast<std::size_t>(s)] = static_cast<int>(catalogue_.size());
    std::vector<int> kids;
    // Non-increasing multisets of at most `slots` ids whose sizes sum to s - 1.
    std::function<void(int, int)> choose = [&](int remaining, int max_id) {
      if (remaining == 0) {
        catalogue_.push_back(Planted{s, kids});
        return;
      }
      if (static_cast<int>(kids.size()) == slots) return;
      for (int id = max_id; id >= 0; --id) {
        const int size = catalogue_[static_cast<std::size_t>(id)].size;
        if (size > remaining) continue;
        kids.push_back(id);
        choose(remaining - size, id);
        kids.pop_back();
      }
    };
    if (s == 1) {
      catalogue_.push_back(Planted{1, {}});
    } else if (slots > 0) {
      choose(s - 1, first_of_size_[static_cast<std::size_t>(s)] - 1);
    }
  }
  first_of_size_[static_cast<std::size_t>(max_size) + 1] = static_cast<int>(catalogue_.size());
}

void TreeGenerator::append_planted(int id, int parent, std::vector<Edge>& edges, int& next) const {
  const int me = next++;
  if (parent >= 0) edges.emplace_back(parent, me);
  for (int kid : catalogue_[static_cast<std::size_t>(id)].kids) append_planted(kid, me, edges, next);
}

void TreeGenerator::generate(const std::function<bool(std::size_t, const Graph&)>& visit) const {
  std::size_t index = 0;
  if (n_ == 1) {
    visit(index, Graph::build(1, {}));
    return;
  }
  if (max_degree_ == 0) return;
  bool stop = false;

  // Unique centroid: every branch has at most (n - 1) / 2 vertices.
  const int branch_limit = (n_ - 1) / 2;
  const int limit_id = first_of_size_[static_cast<std::size_t>(std::min(branch_limit, n_ / 2)) + 1] - 1;
  std::vector<int> kids;
  std::function<void(int, int)> choose = [&](int remaining, int max_id) {
    if (stop) return;
    if (remaining == 0) {
      std::vector<Edge> edges;
      int next = 1;
      for (int kid : kids) append_planted(kid, 0, edges, next);
      if (!visit(index++, Graph::build(n_, edges))) stop = true;
      return;
    }
    if (static_cast<int>(kids.size()) == max_degree_) return;
    for (int id = max_id; id >= 0 && !stop; --id) {
      const int size = catalogue_[static_cast<std::size_t>(id)].size;
      if (size > remaining) continue;
      kids.push_back(id);
      choose(remaining - size, id);
      kids.pop_back();
    }
  };
  if (branch_limit >= 1) choose(n_ - 1, limit_id);

  // Central edge: two planted trees of order n / 2.
  if (n_ % 2 == 0 && !stop) {
    const int half = n_ / 2;
    const int lo = first_of_size_[static_cast<std::size_t>(half)];
    const int hi = first_of_size_[static_cast<std::size_t>(half) + 1];
    for (int a = hi - 1; a >= lo && !stop; --a) {
      for (int b = a; b >= lo && !stop; --b) {
        std::vector<Edge> edges;
        int next = 0;
        append_planted(a, -1, edges, next);
        const int other = next;
        append_planted(b, -1, edges, next);
        edges.emplace_back(0, other);
        if (!visit(index++, Graph::build(n_, edges))) stop = true;
      }
    }
  }
}

}  // namespace subcubic::detail
