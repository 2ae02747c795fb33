#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "subcubic/graph.hpp"

namespace subcubic {

/// Packed upper-triangle adjacency bits (row-major, most significant bit
/// first) of the canonically relabelled graph. Equal iff isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  std::string hex() const;
};

struct CanonicalLabeling {
  std::vector<int> labels;  // labels[v] = canonical position of vertex v
  std::vector<int> orbits;  // smallest vertex of v's automorphism orbit
  std::size_t generators = 0;
  CanonicalForm form;
  Graph canonical_graph;  // g.relabel(labels)
};

/// Canonical labelling by equitable partition refinement and a search over
/// individualisations, pruned with the automorphisms found along the way.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

}  // namespace subcubic
