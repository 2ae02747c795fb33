#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "subcubic/catalog.hpp"
#include "subcubic/exact.hpp"
#include "subcubic/random_graph.hpp"
#include "subcubic/spectral.hpp"

using namespace subcubic;

TEST(Exact, BareissSmall) {
  std::vector<mpz_class> m{2, 1, 1, 3};
  EXPECT_EQ(bareiss_determinant(m, 2), 5);
  std::vector<mpz_class> z{0, 1, 1, 0};
  EXPECT_EQ(bareiss_determinant(z, 2), -1);
  std::vector<mpz_class> sing{1, 2, 2, 4};
  EXPECT_EQ(bareiss_determinant(sing, 2), 0);
}

TEST(Exact, CharPolyMatchesFaddeevLeVerrier) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 14;
    const Graph g = random_connected_graph(rng, n, t % 3 ? 3 : n - 1, t % 7);
    EXPECT_EQ(char_poly(g).coefficients, oracle::faddeev_leverrier(g)) << t;
  }
}

TEST(Exact, CharPolyOfTreesIsMatchingPolynomial) {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_connected_graph(rng, 1 + t % 20, 3, 0);
    EXPECT_EQ(char_poly(g).coefficients, oracle::matching_polynomial(g)) << t;
  }
}

TEST(Exact, CharPolyCoefficientsForSubcubic) {
  // c_{n-1} = 0, c_{n-2} = -m, c_{n-3} = -2 * triangles.
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected_graph(rng, 3 + t % 12, 3, t % 4);
    const CharPoly p = char_poly(g);
    const int n = g.order();
    int triangles = 0;
    for (const auto& [u, v] : g.edges())
      for (int w = v + 1; w < n; ++w) triangles += g.has_edge(u, w) && g.has_edge(v, w);
    EXPECT_EQ(p[n], 1);
    EXPECT_EQ(p[n - 1], 0);
    EXPECT_EQ(p[n - 2], -g.size());
    EXPECT_EQ(p[n - 3], -2 * triangles);
  }
}

TEST(Exact, IsolatedRootsContainEigenvalues) {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected_graph(rng, 1 + t % 16, 3, t % 5);
    const CharPoly p = char_poly(g);
    const RootIntervals roots = isolate_roots(p);
    int total = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      total += roots[i].multiplicity;
      EXPECT_LE(roots[i].lo, roots[i].hi);
      if (i) EXPECT_LE(roots[i - 1].hi, roots[i].lo);
    }
    EXPECT_EQ(total, g.order());
    const auto ev = eigenvalues(g).eigenvalues;
    for (double x : ev) {
      bool inside = false;
      for (const auto& r : roots) {
        const double lo = r.lo.get_d() - 1e-9, hi = r.hi.get_d() + 1e-9;
        inside |= lo <= x && x <= hi;
      }
      EXPECT_TRUE(inside) << x;
    }
  }
}

TEST(Exact, IsolateRejectsConstant) {
  CharPoly c{{mpz_class(1)}};
  EXPECT_THROW(isolate_roots(c), std::invalid_argument);
}

TEST(Exact, EnergyBoundEnclosesFloat) {
  Rng rng(25);
  const mpq_class width(1, 1 << 30);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_connected_graph(rng, 2 + t % 16, 3, t % 5);
    const EnergyBound b = energy_bound(g, width);
    EXPECT_LE(b.width(), width);
    const double e = energy(g);
    EXPECT_LE(b.lo.get_d() - 1e-9, e);
    EXPECT_GE(b.hi.get_d() + 1e-9, e);
  }
}

TEST(Exact, RefinerShrinks) {
  RootRefiner r(char_poly(named("p7")));
  const mpq_class w0 = r.energy().width();
  for (int i = 0; i < 20; ++i) r.refine_once();
  EXPECT_LT(r.energy().width(), w0);
  r.refine_roots(mpq_class(1, 1000000));
  for (const auto& root : r.intervals()) EXPECT_LE(root.hi - root.lo, mpq_class(1, 1000000));
}

TEST(Exact, Factorizations) {
  const auto k33 = factor_quadratic_shape(char_poly(named("k33")));
  ASSERT_TRUE(k33);
  EXPECT_EQ(k33->to_string(), "x^4*(x^2-9)");
  EXPECT_EQ(*k33->integer_energy(), 6);
  const auto q = factor_quadratic_shape(char_poly(named("q")));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->to_string(), "x^2*(x^2-1)*(x^2-4)");
  const auto k23 = factor_quadratic_shape(char_poly(named("k23")));
  ASSERT_TRUE(k23);
  EXPECT_FALSE(k23->integer_energy());
  EXPECT_FALSE(factor_quadratic_shape(char_poly(named("c5"))));
}

TEST(Exact, DecideEnergy) {
  EXPECT_EQ(decide_energy_vs_integer(named("k33"), 6), Comparison::Equal);
  EXPECT_EQ(decide_energy_vs_integer(named("k33"), 5), Comparison::Greater);
  EXPECT_EQ(decide_energy_vs_integer(named("k33"), 7), Comparison::Less);
  EXPECT_EQ(decide_energy_vs_integer(named("c4"), 4), Comparison::Equal);
  EXPECT_EQ(decide_energy_vs_integer(named("s4"), 4), Comparison::Less);
  EXPECT_EQ(decide_energy_vs_integer(named("p4"), 4), Comparison::Greater);
  const EnergyDecision d = decide_energy(char_poly(named("s2")), 2);
  EXPECT_EQ(d.verdict, Comparison::Equal);
  ASSERT_TRUE(d.factorization);
  EXPECT_EQ(d.factorization->to_string(), "(x^2-1)");
}
