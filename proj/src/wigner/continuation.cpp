#include "hydrocg/hypergeom.hpp"
#include "hydrocg/wigner.hpp"

#include <algorithm>
#include <array>

namespace hydrocg::wigner {

using exactnum::DomainError;
using exactnum::EpsLeading;
using exactnum::EpsSum;
using exactnum::factorial;
using exactnum::gamma_eps;
using exactnum::Integer;
using exactnum::parity_sign;
using exactnum::Rational;
using exactnum::surd_sqrt;

namespace {

PhasedSurd root(long long v) { return surd_sqrt(Rational(v)); }

// (J lo K; M -M 0) with J = lo + d, from the standard closed forms.  Each
// m-dependent linear factor sits under its own radical.
PhasedSurd table_form(long long jj, long long d, int K, long long M) {
  const long long s = parity_sign(jj - M);
  switch (K * 3 + static_cast<int>(d)) {
    case 0:  // K=0, d=0
      return PhasedSurd(s) / root(2 * jj + 1);
    case 3:  // K=1, d=0
      return PhasedSurd(s * 2 * M) / root(2 * jj * (2 * jj + 1) * (2 * jj + 2));
    case 4:  // K=1, d=1
      return PhasedSurd(-s) * root(2) * root(jj + M + 1) * root(jj - M + 1) /
             root((2 * jj + 3) * (2 * jj + 2) * (2 * jj + 1));
    case 6:  // K=2, d=0
      return PhasedSurd(s * 2 * (3 * M * M - jj * (jj + 1))) /
             root((2 * jj + 3) * (2 * jj + 2) * (2 * jj + 1) * (2 * jj) * (2 * jj - 1));
    case 7:  // K=2, d=1
      return PhasedSurd(-s * 2 * M) * root(6) * root(jj + M + 1) * root(jj - M + 1) /
             root((2 * jj + 4) * (2 * jj + 3) * (2 * jj + 2) * (2 * jj + 1) * (2 * jj));
    case 8:  // K=2, d=2
      return PhasedSurd(s) * root(6) * root(jj + M + 2) * root(jj + M + 1) * root(jj - M + 2) *
             root(jj - M + 1) /
             root((2 * jj + 5) * (2 * jj + 4) * (2 * jj + 3) * (2 * jj + 2) * (2 * jj + 1));
    default:
      throw DomainError("no closed form for this (K, j-j') pattern");
  }
}

}  // namespace

PhasedSurd stretched_three_j_poly(int j, int K, int jp, int n) {
  if (K < 0 || K > 2) throw DomainError("stretched_three_j_poly supports K in {0,1,2} only");
  if (!triangle_ok(j, K, jp)) throw DomainError("stretched_three_j_poly: triad violates the triangle");
  // Permute (j K jp; -m 0 m) into (J lo K; M -M 0).
  if (jp >= j) return table_form(j, jp - j, K, n);  // cyclic, M = m
  // swap of the last two columns, M = -m
  return PhasedSurd(parity_sign(j + K + jp)) * table_form(jp, j - jp, K, -static_cast<long long>(n));
}

PhasedSurd regularized_three_j(int lp, int K, int l, int n) {
  if (lp < 0 || K < 0 || l < 0 || n < 0) throw DomainError("regularized_three_j: negative argument");
  const int lo = std::min(l, lp), hi = std::max(l, lp);
  if (n > lo && n <= hi)
    throw DomainError("regularized_three_j: n must satisfy n <= min(l,lp) or n >= max(l,lp)+1");
  if (!triangle_ok(lp, K, l)) return {};

  // Projections m1 = -x, m3 = x with x = n - eps.  Gamma(a + 1 - x) is
  // gamma_eps(a + 1 - n, +1); Gamma(a + 1 + x) is gamma_eps(a + 1 + n, -1).
  //
  // sqrt(Gamma(lp+1-x) Gamma(l+1-x)) is continued as
  //   Gamma(lo+1-x) * prod_{t=lo}^{hi-1} sqrt(Gamma(t+2-x)/Gamma(t+1-x)),
  // each linear factor under its own principal root.
  std::vector<EpsLeading> pre;
  pre.push_back(gamma_eps(lo + 1 - n));
  for (int t = lo; t < hi; ++t) {
    const EpsLeading step = eps_mul(gamma_eps(t + 2 - n), eps_inv(gamma_eps(t + 1 - n)));
    pre.push_back(eps_sqrt(step));
  }
  const std::array<EpsLeading, 3> finite{gamma_eps(lp + 1 + n, -1), gamma_eps(l + 1 + n, -1),
                                         EpsLeading::constant(Rational(factorial(K) * factorial(K)))};
  pre.push_back(eps_sqrt(eps_mul(finite)));
  const EpsLeading prefactor = eps_mul(pre);

  EpsSum sum;
  const int zmin = std::max(0, lp - l);
  const int zmax = std::min(lp + K - l, K);
  for (int z = zmin; z <= zmax; ++z) {
    const Integer plain = factorial(z) * factorial(lp + K - l - z) * factorial(K - z) * factorial(l - lp + z);
    const std::array<EpsLeading, 3> parts{
        EpsLeading::constant(Rational(Integer(parity_sign(z)), plain)),
        eps_inv(gamma_eps(lp + n - z + 1, -1)),  // (j1 - m1 - z)!
        eps_inv(gamma_eps(l - K - n + z + 1)),   // (j3 - j2 + m1 + z)!
    };
    sum.add(eps_mul(parts));
  }

  const PhasedSurd limit = exactnum::limit_of_product(prefactor, sum);
  if (limit.is_zero()) return {};
  const Rational triangle(factorial(lp + K - l) * factorial(lp - K + l) * factorial(-lp + K + l),
                          factorial(lp + K + l + 1));
  return PhasedSurd(parity_sign(lp - K - n)) * surd_sqrt(triangle) * limit;
}

PhasedSurd continued_clebsch_gordan(int lp, int K, int l, int n) {
  // (lp K l; n 0 -n) = (-1)^(lp+K+l) (lp K l; -n 0 n)
  const PhasedSurd tj = regularized_three_j(lp, K, l, n);
  return PhasedSurd(parity_sign(lp - K + n) * parity_sign(lp + K + l)) * surd_sqrt(Rational(2 * l + 1)) * tj;
}

CgProduct regularized_cg_parts(const StretchedArgs& args) {
  const auto [l, lp, n, k] = args;
  if (l < lp) throw DomainError("regularized_cg_product requires l >= lp");
  if (lp < 0 || n < l + 1) throw DomainError("regularized_cg_product requires n >= l+1 > lp");
  CgProduct out;
  if (k + 1 >= 0) {
    if (!triangle_ok(lp, k + 1, l)) throw DomainError("triad (lp, k+1, l) violates the triangle");
    out.c = continued_clebsch_gordan(lp, k + 1, l, n);
  } else {
    const int K = -(k + 2);
    if (!triangle_ok(lp, K, l)) throw DomainError("triad (lp, -(k+2), l) violates the triangle");
    out.c = PhasedSurd(parity_sign(l - lp)) * continued_clebsch_gordan(lp, K, l, n);
  }
  out.f = hypergeom::vk_f(l, lp, k);
  out.product = out.f * out.c;
  return out;
}

PhasedSurd regularized_cg_product(const StretchedArgs& args) { return regularized_cg_parts(args).product; }

}  // namespace hydrocg::wigner
