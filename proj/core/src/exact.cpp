#include "subcubic/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace subcubic {
namespace {

mpq_class abs_lower(const RootInterval& r) {
  if (r.lo >= 0) return r.lo;
  if (r.hi <= 0) return -r.hi;
  return 0;
}

mpq_class abs_upper(const RootInterval& r) {
  mpq_class a = abs(r.lo);
  mpq_class b = abs(r.hi);
  return a > b ? a : b;
}

IntPoly square_free_product(const std::vector<poly::SquareFreeFactor>& factors) {
  RatPoly acc{mpq_class(1)};
  for (const auto& f : factors) acc = poly::multiply(acc, poly::to_rational(f.factor));
  return poly::primitive_part(acc);
}

// Divides a monic integer polynomial by (y - d) when d is a root.
bool divide_out_root(IntPoly& r, const mpz_class& d) {
  mpz_class acc = 0;
  for (auto it = r.rbegin(); it != r.rend(); ++it) acc = acc * d + *it;
  if (acc != 0) return false;
  IntPoly q(r.size() - 1);
  mpz_class carry = 0;
  for (std::size_t i = r.size() - 1; i >= 1; --i) {
    carry = carry * d + r[i];
    q[i - 1] = carry;
  }
  r = std::move(q);
  return true;
}

}  // namespace

mpz_class bareiss_determinant(std::vector<mpz_class> a, int n) {
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i * n + j)]; };
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

CharPoly char_poly(const Graph& g) {
  const int n = g.order();
  std::vector<long> points;
  points.push_back(0);
  for (long k = 1; static_cast<int>(points.size()) < n + 1; ++k) {
    points.push_back(k);
    if (static_cast<int>(points.size()) < n + 1) points.push_back(-k);
  }
  std::vector<mpq_class> newton;
  for (long x : points) {
    std::vector<mpz_class> m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          m[static_cast<std::size_t>(i * n + j)] = x;
        } else if (g.has_edge(i, j)) {
          m[static_cast<std::size_t>(i * n + j)] = -1;
        }
      }
    }
    newton.emplace_back(bareiss_determinant(std::move(m), n));
  }
  // Divided differences in place.
  for (int level = 1; level <= n; ++level) {
    for (int i = n; i >= level; --i) {
      newton[static_cast<std::size_t>(i)] =
          (newton[static_cast<std::size_t>(i)] - newton[static_cast<std::size_t>(i - 1)]) /
          mpq_class(points[static_cast<std::size_t>(i)] - points[static_cast<std::size_t>(i - level)]);
    }
  }
  RatPoly p{newton[static_cast<std::size_t>(n)]};
  for (int i = n - 1; i >= 0; --i) {
    p = poly::multiply(p, RatPoly{mpq_class(-points[static_cast<std::size_t>(i)]), mpq_class(1)});
    if (p.empty()) p.push_back(0);
    p[0] += newton[static_cast<std::size_t>(i)];
  }
  CharPoly out;
  out.coefficients.resize(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    const mpq_class& c = i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : mpq_class(0);
    if (c.get_den() != 1) throw std::logic_error("char_poly: non-integral interpolation");
    out.coefficients[static_cast<std::size_t>(i)] = c.get_num();
  }
  return out;
}

RootIntervals isolate_roots(const CharPoly& p) {
  IntPoly coeffs = p.coefficients;
  poly::trim(coeffs);
  if (poly::degree(coeffs) < 1) throw std::invalid_argument("isolate_roots: polynomial must have degree >= 1");

  const auto factors = poly::square_free_decomposition(coeffs);
  const IntPoly sqf = square_free_product(factors);
  const poly::SturmSequence sturm(sqf);
  const mpz_class bound = poly::root_bound(sqf);

  RootIntervals roots;
  struct Pending {
    mpq_class a, b;
    int count;
  };
  std::vector<Pending> stack;
  stack.push_back({mpq_class(-bound), mpq_class(bound), sturm.count_roots(-bound, bound)});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      if (poly::sign_at(sqf, cur.b) == 0) {
        roots.push_back({cur.b, cur.b, 1});
      } else {
        roots.push_back({cur.a, cur.b, 1});
      }
      continue;
    }
    mpq_class mid = (cur.a + cur.b) / 2;
    int left = sturm.count_roots(cur.a, mid);
    // Right half first so the left half is processed next (ascending output).
    stack.push_back({mid, cur.b, cur.count - left});
    stack.push_back({cur.a, mid, left});
  }

  if (factors.size() > 1 || (factors.size() == 1 && factors.front().multiplicity != 1)) {
    std::vector<poly::SturmSequence> chains;
    for (const auto& f : factors) chains.emplace_back(f.factor);
    for (auto& r : roots) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        const IntPoly& f = factors[k].factor;
        bool here = r.is_exact() ? poly::sign_at(f, r.lo) == 0
                                 : chains[k].count_roots(r.lo, r.hi) - (poly::sign_at(f, r.hi) == 0 ? 1 : 0) > 0;
        if (here) {
          r.multiplicity = factors[k].multiplicity;
          break;
        }
      }
    }
  }
  return roots;
}

RootRefiner::RootRefiner(const CharPoly& p) {
  IntPoly coeffs = p.coefficients;
  poly::trim(coeffs);
  if (poly::degree(coeffs) < 1) {
    throw std::invalid_argument("RootRefiner: polynomial must have degree >= 1");
  }
  square_free_ = square_free_product(poly::square_free_decomposition(coeffs));
  square_free_derivative_ = poly::derivative(square_free_);
  roots_ = isolate_roots(p);
}

int RootRefiner::sign_right_of(const mpq_class& x) const {
  int s = poly::sign_at(square_free_, x);
  return s != 0 ? s : poly::sign_at(square_free_derivative_, x);
}

void RootRefiner::bisect(std::size_t index) {
  RootInterval& r = roots_[index];
  if (r.is_exact()) return;
  mpq_class mid = (r.lo + r.hi) / 2;
  int s = poly::sign_at(square_free_, mid);
  if (s == 0) {
    r.lo = mid;
    r.hi = mid;
  } else if (s == sign_right_of(r.lo)) {
    r.lo = mid;
  } else {
    r.hi = mid;
  }
}

EnergyBound RootRefiner::energy() const {
  EnergyBound b{0, 0};
  for (const auto& r : roots_) {
    b.lo += r.multiplicity * abs_lower(r);
    b.hi += r.multiplicity * abs_upper(r);
  }
  return b;
}

bool RootRefiner::refine_once() {
  std::size_t best = roots_.size();
  mpq_class widest = 0;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    mpq_class w = roots_[i].multiplicity * (roots_[i].hi - roots_[i].lo);
    if (w > widest) {
      widest = w;
      best = i;
    }
  }
  if (best == roots_.size()) return false;
  bisect(best);
  return true;
}

EnergyBound RootRefiner::refine_energy(const mpq_class& width) {
  EnergyBound b = energy();
  while (b.width() > width && refine_once()) b = energy();
  return b;
}

void RootRefiner::refine_roots(const mpq_class& width) {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    while (roots_[i].hi - roots_[i].lo > width) bisect(i);
  }
}

EnergyBound energy_bound(const CharPoly& p, const mpq_class& width) {
  if (width <= 0) throw std::invalid_argument("energy_bound: width must be positive");
  return RootRefiner(p).refine_energy(width);
}

EnergyBound energy_bound(const Graph& g, const mpq_class& width) { return energy_bound(char_poly(g), width); }

std::optional<mpz_class> QuadraticFactorization::integer_energy() const {
  mpz_class total = 0;
  for (const auto& [d, m] : factors) {
    if (!mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    total += 2 * m * root;
  }
  return total;
}

std::string QuadraticFactorization::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (zero_multiplicity > 0) {
    os << "x";
    if (zero_multiplicity > 1) os << "^" << zero_multiplicity;
    first = false;
  }
  for (const auto& [d, m] : factors) {
    if (!first) os << "*";
    os << "(x^2-" << d.get_str() << ")";
    if (m > 1) os << "^" << m;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::optional<QuadraticFactorization> factor_quadratic_shape(const CharPoly& p) {
  IntPoly q = p.coefficients;
  poly::trim(q);
  if (q.empty() || q.back() != 1) return std::nullopt;
  QuadraticFactorization out;
  while (q.size() > 1 && q.front() == 0) {
    q.erase(q.begin());
    ++out.zero_multiplicity;
  }
  if (poly::degree(q) % 2 != 0) return std::nullopt;
  IntPoly r;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i % 2 == 1) {
      if (q[i] != 0) return std::nullopt;
    } else {
      r.push_back(q[i]);
    }
  }
  // Every root of r is a squared eigenvalue, hence at most (n - 1)^2, and
  // an integer root divides the constant term.
  const long n = p.degree();
  const mpz_class limit = std::min(mpz_class((n - 1) * (n - 1)), poly::root_bound(r));
  for (mpz_class d = 1; d <= limit && r.size() > 1; ++d) {
    if (!mpz_divisible_p(r.front().get_mpz_t(), d.get_mpz_t())) continue;
    int mult = 0;
    while (r.size() > 1 && divide_out_root(r, d)) ++mult;
    if (mult > 0) out.factors.emplace_back(d, mult);
  }
  if (r.size() != 1) return std::nullopt;
  return out;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
    case Comparison::Unresolved: return "unresolved";
  }
  return "unresolved";
}

EnergyDecision decide_energy(const CharPoly& p, long t, const Tolerances& tol) {
  EnergyDecision out;
  const mpq_class target(t);
  mpq_class floor_width = 1;
  floor_width /= mpz_class(mpz_class(1) << tol.exact_refinement_bits);

  RootRefiner refiner(p);
  for (;;) {
    out.bound = refiner.energy();
    if (out.bound.lo > target) {
      out.verdict = Comparison::Greater;
      return out;
    }
    if (out.bound.hi < target) {
      out.verdict = Comparison::Less;
      return out;
    }
    if (out.bound.width() <= floor_width || !refiner.refine_once()) break;
  }
  out.factorization = factor_quadratic_shape(p);
  if (out.factorization) {
    if (auto e = out.factorization->integer_energy()) {
      out.verdict = *e == t ? Comparison::Equal : (*e < t ? Comparison::Less : Comparison::Greater);
      return out;
    }
  }
  out.verdict = Comparison::Unresolved;
  return out;
}

Comparison decide_energy_vs_integer(const Graph& g, long t) {
  if (t < 0) throw std::invalid_argument("decide_energy_vs_integer: t must be >= 0");
  return decide_energy(char_poly(g), t).verdict;
}

}  // namespace subcubic
