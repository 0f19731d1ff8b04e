#pragma once

// Generators and floating-point reference implementations shared by the
// test binaries.  The references are written from textbook formulas and
// share no code with the library.

#include "hydrocg/exactnum.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <complex>
#include <random>

namespace testsupport {

using hydrocg::exactnum::Integer;
using hydrocg::exactnum::PhasedSurd;
using hydrocg::exactnum::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20201105);
  return g;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline Rational random_rational(long long span = 60) {
  long long num = uniform(-span, span);
  long long den = uniform(1, span);
  return Rational(Integer(num), Integer(den));
}

inline PhasedSurd random_surd(long long span = 60) {
  Rational c = random_rational(span);
  if (c == 0) return PhasedSurd();
  return PhasedSurd::make(c, Integer(uniform(1, 200)), uniform(0, 1) == 1);
}

inline std::complex<double> to_complex(const PhasedSurd& x) {
  const double v = static_cast<double>(x.magnitude_ld());
  return x.imaginary() ? std::complex<double>(0, v) : std::complex<double>(v, 0);
}

inline double fact(int m) { return std::tgamma(m + 1.0); }

// Racah formula in double precision, integer or half-integer arguments
// given doubled.
inline double racah_3j(int dj1, int dj2, int dj3, int dm1, int dm2, int dm3) {
  if (dm1 + dm2 + dm3 != 0) return 0;
  if (std::abs(dm1) > dj1 || std::abs(dm2) > dj2 || std::abs(dm3) > dj3) return 0;
  if (dj3 < std::abs(dj1 - dj2) || dj3 > dj1 + dj2 || (dj1 + dj2 + dj3) % 2) return 0;
  auto h = [](int d) { return d / 2; };
  const int a = h(dj1 + dj2 - dj3), b = h(dj1 - dj2 + dj3), c = h(-dj1 + dj2 + dj3);
  const double tri = fact(a) * fact(b) * fact(c) / fact(h(dj1 + dj2 + dj3) + 1);
  const double pre = std::sqrt(tri * fact(h(dj1 + dm1)) * fact(h(dj1 - dm1)) * fact(h(dj2 + dm2)) *
                               fact(h(dj2 - dm2)) * fact(h(dj3 + dm3)) * fact(h(dj3 - dm3)));
  double sum = 0;
  for (int z = 0; z <= a + b + c; ++z) {
    const int d[6] = {z, a - z, h(dj1 - dm1) - z, h(dj2 + dm2) - z, h(dj3 - dj2 + dm1) + z,
                      h(dj3 - dj1 - dm2) + z};
    bool ok = true;
    double den = 1;
    for (int x : d) {
      if (x < 0) ok = false;
      else den *= fact(x);
    }
    if (ok) sum += (z % 2 ? -1.0 : 1.0) / den;
  }
  const int phase = h(dj1 - dj2 - dm3);
  return (phase % 2 ? -1.0 : 1.0) * pre * sum;
}

// R_{nl}(r) / r^l from the associated Laguerre polynomial, positive at the
// origin.  The r^l factor is left out so integrands can combine powers.
inline double radial_wave_reduced(int n, int l, double Z, double r) {
  const double rho = 2 * Z * r / n;
  if (rho > 600) return 0;  // beyond this the tail is below double range
  const double norm = std::sqrt(std::pow(2 * Z / n, 3) * fact(n - l - 1) / (2.0 * n * fact(n + l)));
  return norm * std::pow(2 * Z / n, l) * std::exp(-rho / 2) * std::assoc_laguerre(n - l - 1, 2 * l + 1, rho);
}

inline double radial_quadrature(int n, int l, int np, int lp, int k, double Z = 1) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double r) {
    const double a = radial_wave_reduced(n, l, Z, r), b = radial_wave_reduced(np, lp, Z, r);
    return a == 0 || b == 0 ? 0.0 : a * b * std::pow(r, l + lp + k + 2);
  };
  return integrator.integrate(f);
}

inline bool close(double a, double b, double rel = 1e-9, double abs_tol = 1e-12) {
  return std::fabs(a - b) <= abs_tol + rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace testsupport
