#pragma once

#include "hydrocg/exactnum.hpp"

#include <array>

namespace hydrocg::hypergeom {

using exactnum::PhasedSurd;
using exactnum::Rational;

/// Parameters of 3F2(a1,a2,a3; b1,b2; 1).  The series must terminate:
/// some a_i is a nonpositive integer, and no b_j vanishes before it does.
struct F32Params {
  std::array<Rational, 3> a;
  std::array<Rational, 2> b;
};

/// Index of the last nonzero term, or throws DomainError naming the
/// offending parameter.
long long termination_index(const F32Params& p);

/// Exact sum of the terminating series at unit argument.
Rational f3f2_terminating(const F32Params& p);

/// (l+lp-k, l-lp-k-1, -k-1; n+l-k, -2k-2)
F32Params vk_parameters(long long n, long long l, long long lp, long long k);

/// sqrt[(k+1-D)!(k+1+D)!(l+lp+k+2)! / ((k+1)!^2 (l+lp-k-1)!)],  D = l-lp >= 0.
/// For k <= -2 the factorials of negative arguments are taken pairwise as
/// (-a)!/(-b)! limits.  Throws DomainError outside the finite regime.
PhasedSurd vk_f(long long l, long long lp, long long k);

}  // namespace hydrocg::hypergeom
