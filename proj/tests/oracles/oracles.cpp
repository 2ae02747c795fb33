#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

namespace oracle {

std::vector<mpz_class> faddeev_leverrier(const Graph& g) {
  const int n = g.order();
  using Matrix = std::vector<std::vector<mpq_class>>;
  Matrix a(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = g.has_edge(i, j) ? 1 : 0;

  std::vector<mpq_class> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<mpq_class>(n, 0));
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Matrix next(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (int t = 0; t < n; ++t) s += a[i][t] * m[t][j];
        next[i][j] = s;
      }
    for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    mpq_class trace = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) trace += a[i][t] * m[t][i];
    c[n - k] = -trace / k;
  }
  std::vector<mpz_class> out;
  for (const auto& q : c) out.push_back(q.get_num());
  return out;
}

namespace {

// k-matchings of the edge list from index i on, avoiding `used` vertices.
void count_matchings(const std::vector<subcubic::Edge>& edges, std::size_t i, std::uint64_t used, int k,
                     std::vector<mpz_class>& counts) {
  if (i == edges.size()) {
    ++counts[k];
    return;
  }
  count_matchings(edges, i + 1, used, k, counts);
  const auto [u, v] = edges[i];
  const std::uint64_t bits = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  if (!(used & bits)) count_matchings(edges, i + 1, used | bits, k + 1, counts);
}

bool extend(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<bool>& taken, int v) {
  const int n = a.order();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (taken[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[u], w);
    if (!ok) continue;
    map[v] = w;
    taken[w] = true;
    if (extend(a, b, map, taken, v + 1)) return true;
    taken[w] = false;
  }
  return false;
}

}  // namespace

std::vector<mpz_class> matching_polynomial(const Graph& g) {
  const int n = g.order();
  std::vector<mpz_class> counts(n / 2 + 1, 0);
  count_matchings(g.edges(), 0, 0, 0, counts);
  std::vector<mpz_class> poly(n + 1, 0);
  for (int k = 0; 2 * k <= n; ++k) poly[n - 2 * k] = (k % 2 ? -1 : 1) * counts[k];
  return poly;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.order(), -1);
  std::vector<bool> taken(a.order(), false);
  return extend(a, b, map, taken, 0);
}

std::vector<Graph> classes_by_brute_force(int n, const std::function<bool(const Graph&)>& keep) {
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::map<std::vector<int>, std::vector<Graph>> buckets;  // degree sequence -> representatives
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<subcubic::Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) edges.push_back(slots[s]);
    const Graph g = Graph::build(n, edges);
    if (!keep(g)) continue;
    std::vector<int> deg;
    for (int v = 0; v < n; ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    auto& reps = buckets[deg];
    if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return isomorphic(r, g); })) reps.push_back(g);
  }
  std::vector<Graph> out;
  for (auto& [deg, reps] : buckets)
    for (auto& r : reps) out.push_back(r);
  return out;
}

std::vector<double> path_spectrum(int k) {
  std::vector<double> s;
  for (int j = 1; j <= k; ++j) s.push_back(2 * std::cos(j * std::numbers::pi / (k + 1)));
  return s;
}

std::vector<double> cycle_spectrum(int k) {
  std::vector<double> s;
  for (int j = 0; j < k; ++j) s.push_back(2 * std::cos(2 * j * std::numbers::pi / k));
  return s;
}

std::vector<double> complete_bipartite_spectrum(int a, int b) {
  std::vector<double> s(a + b, 0.0);
  s[0] = std::sqrt(double(a) * b);
  s[1] = -s[0];
  return s;
}

double energy_of(const std::vector<double>& spectrum) {
  double e = 0;
  for (double x : spectrum) e += std::abs(x);
  return e;
}

Graph permuted(const Graph& g, std::uint64_t seed) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

}  // namespace oracle
