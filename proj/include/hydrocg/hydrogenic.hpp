#pragma once

// Exact hydrogenic radial functions R_{nl}(r) and radial integrals of
// integer powers of r.  Lengths are in Bohr radii; Z is explicit.

#include "hydrocg/exactnum.hpp"

#include <vector>

namespace hydrocg::hydrogenic {

using exactnum::PhasedSurd;
using exactnum::Rational;

struct RadialState {
  int n{1};
  int l{0};
  Rational Z{1};
};

/// R(r) = norm * sum_i coeffs[i] r^(l+i) * exp(-rate r).  Positive as r -> 0+.
struct RadialFunction {
  int l{0};
  PhasedSurd norm;
  std::vector<Rational> coeffs;
  Rational rate;
};

RadialFunction radial_function(const RadialState& s);

/// Integral of R_a(r) r^k R_b(r) r^2 over (0, inf); the two functions may
/// have different rates.  Throws DomainError if the integral diverges.
PhasedSurd radial_integral(const RadialFunction& a, const RadialFunction& b, int k);

/// <n l | r^k | n lp>.
PhasedSurd me_power(int n, int l, int lp, int k, const Rational& Z = 1);

/// Closed form of <n l | r^-4 | n l>; requires l >= 1.
Rational expectation_rm4(int n, int l, const Rational& Z = 1);

/// True iff 2 <= k <= |lp - l| + 1, the range where <n l|r^-k|n lp> vanishes.
bool ps_zero_predicted(int l, int lp, int k);

/// Kramers-Pasternack three-term recursion between <r^k>, <r^(k-1)>,
/// <r^(k-2)> at Z = 1, all computed by me_power.
bool kramers_check(int n, int l, int k);

}  // namespace hydrocg::hydrogenic
