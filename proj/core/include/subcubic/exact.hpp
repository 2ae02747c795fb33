#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "subcubic/graph.hpp"
#include "subcubic/poly.hpp"
#include "subcubic/tolerances.hpp"

namespace subcubic {

/// det(xI - A) with exact integer coefficients c_0..c_n (c_n = 1).
struct CharPoly {
  IntPoly coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const mpz_class& operator[](int i) const { return coefficients[static_cast<std::size_t>(i)]; }
  std::string to_string() const { return poly::to_string(coefficients); }
};

/// Fraction-free (Bareiss) determinant of a row-major n x n integer matrix.
mpz_class bareiss_determinant(std::vector<mpz_class> matrix, int n);

/// Evaluates det(xI - A) at n + 1 integer points and interpolates.
CharPoly char_poly(const Graph& g);

/// One real root. lo == hi means the root is exactly lo; otherwise the root
/// lies in the open interval (lo, hi) and nowhere else is there a root of
/// the same polynomial inside it.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
};

using RootIntervals = std::vector<RootInterval>;  // ascending, disjoint

/// Sturm isolation of the distinct roots of the square-free part, with
/// multiplicities from the square-free decomposition. Throws
/// std::invalid_argument for a zero or constant polynomial.
RootIntervals isolate_roots(const CharPoly& p);

/// Rational enclosure lo <= E(G) <= hi.
struct EnergyBound {
  mpq_class lo;
  mpq_class hi;

  mpq_class width() const { return hi - lo; }
};

/// Incrementally refinable root isolation of one characteristic polynomial.
class RootRefiner {
 public:
  explicit RootRefiner(const CharPoly& p);

  const RootIntervals& intervals() const { return roots_; }

  EnergyBound energy() const;

  /// Bisects the interval contributing the most width; returns false when
  /// every root is already exact.
  bool refine_once();

  /// Refines until the energy enclosure is no wider than `width`.
  EnergyBound refine_energy(const mpq_class& width);

  /// Refines until every root interval is no wider than `width`.
  void refine_roots(const mpq_class& width);

 private:
  void bisect(std::size_t index);
  int sign_right_of(const mpq_class& x) const;

  IntPoly square_free_;
  IntPoly square_free_derivative_;
  RootIntervals roots_;
};

EnergyBound energy_bound(const CharPoly& p, const mpq_class& width);
EnergyBound energy_bound(const Graph& g, const mpq_class& width);

/// Characteristic polynomials of the form x^k * prod (x^2 - d_i)^(m_i).
struct QuadraticFactorization {
  int zero_multiplicity = 0;
  std::vector<std::pair<mpz_class, int>> factors;  // (d_i, m_i), d_i > 0 ascending

  /// E = sum 2 m_i sqrt(d_i); an integer iff every d_i is a perfect square.
  std::optional<mpz_class> integer_energy() const;
  std::string to_string() const;
};

std::optional<QuadraticFactorization> factor_quadratic_shape(const CharPoly& p);

enum class Comparison { Less, Equal, Greater, Unresolved };

const char* to_string(Comparison c);

struct EnergyDecision {
  Comparison verdict = Comparison::Unresolved;
  EnergyBound bound;
  std::optional<QuadraticFactorization> factorization;
};

/// Compares E with the integer t: interval refinement down to
/// 2^-exact_refinement_bits, then exact confirmation through the
/// x^k * prod (x^2 - d) factor shape. Anything else is Unresolved.
EnergyDecision decide_energy(const CharPoly& p, long t, const Tolerances& tol = kTolerances);

Comparison decide_energy_vs_integer(const Graph& g, long t);

}  // namespace subcubic
