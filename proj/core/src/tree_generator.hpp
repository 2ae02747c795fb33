#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "subcubic/graph.hpp"

namespace subcubic::detail {

/// Free trees with a degree cap, rooted at their centroid (or centroid
/// edge). Every isomorphism class is produced exactly once because each
/// rooted piece is drawn from a catalogue of pairwise non-isomorphic
/// planted trees and children are chosen as non-increasing multisets.
class TreeGenerator {
 public:
  TreeGenerator(int n, int max_degree);

  /// Calls visit(sequence_index, tree) for every tree; stops early when
  /// visit returns false.
  void generate(const std::function<bool(std::size_t, const Graph&)>& visit) const;

 private:
  struct Planted {
    int size;
    std::vector<int> kids;  // catalogue ids, non-increasing
  };

  void build_catalogue(int max_size);
  void append_planted(int id, int parent, std::vector<Edge>& edges, int& next) const;

  int n_;
  int max_degree_;
  std::vector<Planted> catalogue_;
  std::vector<int> first_of_size_;  // catalogue ids of size s are [first_of_size_[s], first_of_size_[s+1])
};

}  // namespace subcubic::detail
