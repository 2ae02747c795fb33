#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "subcubic/catalog.hpp"
#include "subcubic/random_graph.hpp"
#include "subcubic/spectral.hpp"
#include "subcubic/tolerances.hpp"

using namespace subcubic;

namespace {

void expect_spectrum(const Graph& g, std::vector<double> expected) {
  std::sort(expected.begin(), expected.end(), std::greater<>());
  const Spectrum s = eigenvalues(g);
  ASSERT_EQ(s.eigenvalues.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(s.eigenvalues[i], expected[i], 1e-12) << i;
}

}  // namespace

TEST(Spectral, SmallSpectra) {
  expect_spectrum(named("s2"), {1, -1});
  expect_spectrum(named("k22"), {2, 0, 0, -2});
  expect_spectrum(named("c4"), {2, 0, 0, -2});
  expect_spectrum(Graph::build(1, {}), {0});
}

TEST(Spectral, ClosedForms) {
  for (int k = 1; k <= 20; ++k) expect_spectrum(named("p" + std::to_string(k)), oracle::path_spectrum(k));
  for (int k = 3; k <= 20; ++k) expect_spectrum(named("c" + std::to_string(k)), oracle::cycle_spectrum(k));
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      expect_spectrum(complete_bipartite(a, b), oracle::complete_bipartite_spectrum(a, b));
}

TEST(Spectral, Energies) {
  EXPECT_NEAR(energy(named("k33")), 6.0, 1e-12);
  EXPECT_EQ(energy(Graph::build(1, {})), 0.0);
  EXPECT_NEAR(energy(named("k23")), 2 * std::sqrt(6.0), 1e-12);
  EXPECT_LT(energy(named("k23")), 5.0);
}

TEST(Spectral, InvariantsOnRandomGraphs) {
  const Tolerances tol;
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 30;
    const Graph g = random_connected_graph(rng, n, t % 2 ? 3 : n - 1, t % 12);
    const Spectrum s = eigenvalues(g);
    EXPECT_EQ(s.n, n);
    EXPECT_EQ(s.m, g.size());
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>()));
    double sum = 0, squares = 0, positive = 0;
    for (double x : s.eigenvalues) {
      sum += x;
      squares += x * x;
      if (x > 0) positive += x;
    }
    EXPECT_LE(std::abs(sum), tol.trace);
    EXPECT_LE(std::abs(squares - 2 * g.size()), tol.frobenius);
    EXPECT_GE(s.energy, 0.0);
    EXPECT_NEAR(s.energy, 2 * positive, tol.energy);
  }
}

TEST(Spectral, EnergyInvariantUnderRelabelling) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected_graph(rng, 2 + t % 15, 3, t % 5);
    EXPECT_NEAR(energy(g), energy(oracle::permuted(g, t)), 1e-11);
  }
}

TEST(Spectral, QuadrangleFree) {
  EXPECT_FALSE(is_quadrangle_free(named("k23")));
  EXPECT_FALSE(is_quadrangle_free(named("c4")));
  EXPECT_TRUE(is_quadrangle_free(named("c5")));
  EXPECT_TRUE(is_quadrangle_free(named("q")));
  EXPECT_TRUE(is_quadrangle_free(Graph::build(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(Spectral, SymmetricSolverDiagonal) {
  const std::vector<double> diag{3, 0, 0, 0, -1, 0, 0, 0, 2};
  const auto ev = symmetric_eigenvalues(diag, 3);
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(ev[0], 3, 1e-15);
  EXPECT_NEAR(ev[1], 2, 1e-15);
  EXPECT_NEAR(ev[2], -1, 1e-15);
}
