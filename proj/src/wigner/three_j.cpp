#include "hydrocg/wigner.hpp"

#include <algorithm>
#include <cstdlib>

namespace hydrocg::wigner {

using exactnum::DomainError;
using exactnum::factorial;
using exactnum::Integer;
using exactnum::parity_sign;
using exactnum::Rational;

bool triangle_ok(AngMomentum j1, AngMomentum j2, AngMomentum j3) {
  const int a = j1.doubled, b = j2.doubled, c = j3.doubled;
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

namespace {

void check_projection(AngMomentum j, int m, const char* which) {
  if (j.doubled < 0) throw DomainError(std::string("negative angular momentum ") + which);
  if ((j.doubled + m) % 2 != 0)
    throw DomainError(std::string("projection ") + which + " has the wrong parity for its momentum");
  if (std::abs(m) > j.doubled)
    throw DomainError(std::string("projection ") + which +
                      " exceeds its momentum (nonphysical; use regularized_three_j)");
}

}  // namespace

PhasedSurd three_j(const ThreeJArgs& args) {
  check_projection(args.j1, args.m1, "m1");
  check_projection(args.j2, args.m2, "m2");
  check_projection(args.j3, args.m3, "m3");
  if (args.m1 + args.m2 + args.m3 != 0) return {};
  if (!triangle_ok(args.j1, args.j2, args.j3)) return {};

  // Everything below is an ordinary integer (j's and m's undoubled).
  const long long j1 = args.j1.doubled, j2 = args.j2.doubled, j3 = args.j3.doubled;
  const long long m1 = args.m1, m2 = args.m2, m3 = args.m3;
  const long long a = (j1 + j2 - j3) / 2, b = (j1 - j2 + j3) / 2, c = (-j1 + j2 + j3) / 2;
  const long long total = (j1 + j2 + j3) / 2;
  const long long j1p = (j1 + m1) / 2, j1m = (j1 - m1) / 2;
  const long long j2p = (j2 + m2) / 2, j2m = (j2 - m2) / 2;
  const long long j3p = (j3 + m3) / 2, j3m = (j3 - m3) / 2;
  const long long s1 = (j3 - j2 + m1) / 2;  // j3 - j2 + m1
  const long long s2 = (j3 - j1 - m2) / 2;  // j3 - j1 - m2

  const long long zmin = std::max({0LL, -s1, -s2});
  const long long zmax = std::min({a, j1m, j2p});
  Rational sum = 0;
  for (long long z = zmin; z <= zmax; ++z) {
    const Integer den = factorial(z) * factorial(a - z) * factorial(j1m - z) * factorial(j2p - z) *
                        factorial(s1 + z) * factorial(s2 + z);
    sum += Rational(Integer(parity_sign(z)), den);
  }
  if (sum == 0) return {};

  const Rational radicand(factorial(a) * factorial(b) * factorial(c) * factorial(j1p) *
                              factorial(j1m) * factorial(j2p) * factorial(j2m) * factorial(j3p) *
                              factorial(j3m),
                          factorial(total + 1));
  const long long phase = (j1 - j2 - m3) / 2;
  return exactnum::surd_sqrt(radicand) * PhasedSurd(sum * parity_sign(phase));
}

PhasedSurd clebsch_gordan(AngMomentum j1, int m1, AngMomentum j2, int m2, AngMomentum j, int m) {
  const PhasedSurd tj = three_j({j1, j2, j, m1, m2, -m});
  if (tj.is_zero()) return {};
  // m = m1 + m2 here, so j1 - j2 + m = (j1+m1) - (j2-m2) is an integer.
  const int phase = (j1.doubled - j2.doubled + m) / 2;
  return PhasedSurd(parity_sign(phase)) * exactnum::surd_sqrt(Rational(j.doubled + 1)) * tj;
}

}  // namespace hydrocg::wigner
