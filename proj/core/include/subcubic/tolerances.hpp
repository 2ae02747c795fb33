#pragma once

namespace subcubic {

/// Every floating-point threshold used by the library. Reports echo the
/// active values so that results can be reproduced.
struct Tolerances {
  double trace = 1e-10;         // |sum lambda_i|
  double frobenius = 1e-9;      // |sum lambda_i^2 - 2m|
  double energy = 1e-10;        // energy vs. twice the positive part
  double filter_band = 1e-7;    // |E - n| below this goes to exact arithmetic
  double jacobi_offdiag = 1e-13;
  int jacobi_max_sweeps = 64;
  double monotonicity_slack = 1e-9;  // E(G - F) <= E(G) + slack
  double strict_gap = 1e-7;          // star-cut drops below this are escalated
  double odd_integer_band = 1e-6;    // energies this close to an odd integer are checked exactly
  double interval_confirm_width = 1e-12;
  int exact_refinement_bits = 128;   // 2^-bits floor before Unresolved
};

inline constexpr Tolerances kTolerances{};

}  // namespace subcubic
