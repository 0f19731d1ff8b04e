#pragma once

// Wigner 3j and Clebsch-Gordan coefficients: exact physical values, and
// coefficients continued to projections n beyond the momenta.

#include "hydrocg/exactnum.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace hydrocg::wigner {

using exactnum::PhasedSurd;

/// j = doubled/2.
struct AngMomentum {
  int doubled{0};

  static AngMomentum integer(int j) { return {2 * j}; }
  static AngMomentum half(int twice_j) { return {twice_j}; }
  bool is_integer() const { return doubled % 2 == 0; }
  friend bool operator==(AngMomentum, AngMomentum) = default;
};

/// (j1 j2 j3; m1 m2 m3) with every m also doubled.
struct ThreeJArgs {
  AngMomentum j1, j2, j3;
  int m1{0}, m2{0}, m3{0};
};

/// Arguments of the continued C_{lp n, (k+1) 0}^{l n}.
struct StretchedArgs {
  int l{0};
  int lp{0};
  int n{1};
  int k{0};
};

bool triangle_ok(AngMomentum j1, AngMomentum j2, AngMomentum j3);
inline bool triangle_ok(int j1, int j2, int j3) {
  return triangle_ok(AngMomentum::integer(j1), AngMomentum::integer(j2), AngMomentum::integer(j3));
}

/// Exact 3j symbol by the Racah single sum.  Throws DomainError if any
/// |m| exceeds its j or a j/m parity mismatches.
PhasedSurd three_j(const ThreeJArgs& args);

/// C_{j1 m1, j2 m2}^{j m} = (-1)^(j1-j2+m) sqrt(2j+1) (j1 j2 j; m1 m2 -m), doubled arguments.
PhasedSurd clebsch_gordan(AngMomentum j1, int m1, AngMomentum j2, int m2, AngMomentum j, int m);

/// Closed form of (j K jp; -m 0 m) for K <= 2, evaluated at m = n with the
/// m-polynomial, the phase and each linear radical factor continued
/// literally.
PhasedSurd stretched_three_j_poly(int j, int K, int jp, int n);

/// (lp K l; -n 0 n) as the eps -> 0 limit of the Racah sum with
/// m1 = -n+eps, m3 = n-eps.  Valid for n >= max(l,lp)+1 and also for the
/// physical range n <= min(l,lp).  Zero when the triad violates the
/// triangle condition.
PhasedSurd regularized_three_j(int lp, int K, int l, int n);

/// C_{lp n, K 0}^{l n} continued to n > l, lp.
PhasedSurd continued_clebsch_gordan(int lp, int K, int l, int n);

struct CgProduct {
  PhasedSurd f;        ///< f^k_{l,lp}
  PhasedSurd c;        ///< continued C (after the negative-k transform, if any)
  PhasedSurd product;  ///< f * c
};

/// f^k_{l lp} * C_{lp n, (k+1) 0}^{l n}.  For k+1 < 0 the coefficient is
/// replaced by (-1)^(l-lp) C_{lp n, -(k+2) 0}^{l n}.
CgProduct regularized_cg_parts(const StretchedArgs& args);
PhasedSurd regularized_cg_product(const StretchedArgs& args);

struct NumericEstimate {
  std::complex<long double> value;
  long double error_bound{0};
  bool converged{false};
  std::string failure;  ///< set when !converged
};

/// Default eps ladder: 1/16, 1/32, ..., 1/2048.
std::vector<long double> default_epsilons();

/// Finite-eps evaluation of the deformed Racah sum in extended precision,
/// extrapolated to eps = 0 by Neville's algorithm.  Never throws for
/// numeric trouble; it reports converged = false instead.
NumericEstimate numeric_eps_oracle(int lp, int K, int l, int n,
                                   std::span<const long double> epsilons);

}  // namespace hydrocg::wigner
