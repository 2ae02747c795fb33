#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace subcubic {

/// Dense univariate polynomial; coefficient i multiplies x^i. The zero
/// polynomial is the empty vector.
using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

namespace poly {

int degree(const IntPoly& p);  // -1 for the zero polynomial
int degree(const RatPoly& p);
void trim(IntPoly& p);
void trim(RatPoly& p);

RatPoly to_rational(const IntPoly& p);

/// Positive rational multiple of p with coprime integer coefficients.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

IntPoly derivative(const IntPoly& p);
RatPoly derivative(const RatPoly& p);

RatPoly subtract(const RatPoly& a, const RatPoly& b);
RatPoly multiply(const RatPoly& a, const RatPoly& b);

/// Euclidean division over Q; returns {quotient, remainder}.
std::pair<RatPoly, RatPoly> divide(const RatPoly& a, const RatPoly& b);
RatPoly exact_quotient(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q.
RatPoly gcd(RatPoly a, RatPoly b);

mpq_class evaluate(const IntPoly& p, const mpq_class& x);

/// Sign of p(x) computed with integers only.
int sign_at(const IntPoly& p, const mpq_class& x);

struct SquareFreeFactor {
  IntPoly factor;  // primitive, positive leading coefficient, degree >= 1
  int multiplicity;
};

/// Yun's square-free decomposition: p = c * prod factor_i^multiplicity_i.
std::vector<SquareFreeFactor> square_free_decomposition(const IntPoly& p);

/// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  int sign_changes(const mpq_class& x) const;

  /// Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;

  const IntPoly& base() const { return chain_.front(); }

 private:
  std::vector<IntPoly> chain_;
};

/// Smallest power of two strictly greater than the modulus of every root.
mpz_class root_bound(const IntPoly& p);

/// Human-readable form, highest power first, e.g. "x^6 - 5x^4 + 4x^2".
std::string to_string(const IntPoly& p);

}  // namespace poly

/// Exact decimal expansion when the denominator divides a power of ten,
/// otherwise "p/q".
std::string to_decimal_string(const mpq_class& value);

/// Inverse of to_decimal_string; accepts "[-]d[.d]" and "p/q".
mpq_class parse_rational(std::string_view text);

}  // namespace subcubic
