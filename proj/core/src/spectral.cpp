#include "subcubic/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

namespace subcubic {

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, const Tolerances& tol) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (std::sqrt(off) < tol.jacobi_offdiag) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

Spectrum eigenvalues(const Graph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n * n), 0.0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u * n + v)] = 1.0;
    a[static_cast<std::size_t>(v * n + u)] = 1.0;
  }
  Spectrum s;
  s.n = n;
  s.m = g.size();
  s.eigenvalues = symmetric_eigenvalues(std::move(a), n);
  for (double x : s.eigenvalues) s.energy += std::fabs(x);
  return s;
}

double energy(const Graph& g) { return eigenvalues(g).energy; }

bool is_quadrangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (std::popcount(g.row(u) & g.row(v)) >= 2) return false;
    }
  }
  return true;
}

}  // namespace subcubic
