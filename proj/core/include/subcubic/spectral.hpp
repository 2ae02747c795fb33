#pragma once

#include <vector>

#include "subcubic/graph.hpp"
#include "subcubic/tolerances.hpp"

namespace subcubic {

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double energy = 0.0;
  int n = 0;
  int m = 0;
};

/// Adjacency spectrum via cyclic Jacobi rotations on a dense copy of A(G).
Spectrum eigenvalues(const Graph& g);

/// Sum of absolute eigenvalues.
double energy(const Graph& g);

/// True iff no pair of vertices has two or more common neighbours.
bool is_quadrangle_free(const Graph& g);

/// Eigenvalues of an arbitrary dense symmetric matrix (row-major, n x n).
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n,
                                          const Tolerances& tol = kTolerances);

}  // namespace subcubic
