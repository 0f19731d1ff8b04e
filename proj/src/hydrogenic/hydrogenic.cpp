#include "hydrocg/hydrogenic.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hydrocg::hydrogenic {

using exactnum::binomial;
using exactnum::DomainError;
using exactnum::factorial;
using exactnum::Integer;

namespace {

Rational rpow(const Rational& base, long long e) {
  Rational out = 1;
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (long long i = 0; i < std::llabs(e); ++i) out *= b;
  return out;
}

void validate(const RadialState& s) {
  if (s.n < 1) throw DomainError("principal quantum number must be >= 1");
  if (s.l < 0 || s.l > s.n - 1) throw DomainError("orbital quantum number must satisfy 0 <= l <= n-1");
  if (s.Z <= 0) throw DomainError("nuclear charge must be positive");
}

// sum_{i,j} a_i b_j  int_0^inf r^(base+i+j) e^(-rate r) dr
Rational polynomial_moment(const std::vector<Rational>& a, const std::vector<Rational>& b, int base,
                           const Rational& rate) {
  Rational sum = 0;
  const Rational inv_rate = 1 / rate;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const long long m = base + static_cast<long long>(i + j);
      sum += a[i] * b[j] * Rational(factorial(m)) * rpow(inv_rate, m + 1);
    }
  }
  return sum;
}

}  // namespace

RadialFunction radial_function(const RadialState& s) {
  validate(s);
  // R = N rho^l L^{2l+1}_{n-l-1}(rho) e^{-rho/2},  rho = 2 Z r / n
  RadialFunction out;
  out.l = s.l;
  out.rate = s.Z / s.n;
  const Rational scale = 2 * s.Z / s.n;
  const int p = s.n - s.l - 1;
  for (int i = 0; i <= p; ++i) {
    Rational c(binomial(s.n + s.l, p - i), factorial(i));
    if (i % 2) c = -c;
    out.coeffs.push_back(c * rpow(scale, s.l + i));
  }
  const Rational self = polynomial_moment(out.coeffs, out.coeffs, 2 * s.l + 2, 2 * out.rate);
  out.norm = exactnum::surd_sqrt(1 / self);
  return out;
}

PhasedSurd radial_integral(const RadialFunction& a, const RadialFunction& b, int k) {
  const int base = a.l + b.l + 2 + k;
  if (base < 0)
    throw DomainError("radial integral diverges at the origin (l+lp+2+k = " + std::to_string(base) + ")");
  const Rational moment = polynomial_moment(a.coeffs, b.coeffs, base, a.rate + b.rate);
  return a.norm * b.norm * PhasedSurd(moment);
}

PhasedSurd me_power(int n, int l, int lp, int k, const Rational& Z) {
  const RadialFunction a = radial_function({n, l, Z});
  const RadialFunction b = radial_function({n, lp, Z});
  return radial_integral(a, b, k);
}

Rational expectation_rm4(int n, int l, const Rational& Z) {
  validate({n, l, Z});
  if (l == 0) throw DomainError("<r^-4> diverges for l = 0");
  const Rational ll(l);
  const Rational den = (ll + Rational(3, 2)) * (ll + 1) * (ll + Rational(1, 2)) * ll * (ll - Rational(1, 2));
  const Rational z4 = Z * Z * Z * Z;
  return z4 / (2 * rpow(Rational(n), 5)) * Rational(3LL * n * n - static_cast<long long>(l) * (l + 1)) / den;
}

bool ps_zero_predicted(int l, int lp, int k) {
  if (k < 2) throw DomainError("the selection rule is stated for k >= 2");
  return k <= std::abs(lp - l) + 1;
}

bool kramers_check(int n, int l, int k) {
  if (k < -2 * l) throw DomainError("Kramers recursion needs k >= -2l for every member to converge");
  const auto expect = [&](int power) {
    const PhasedSurd v = me_power(n, l, l, power);
    if (v.radicand() != 1 || v.imaginary()) throw std::logic_error("diagonal element is not rational");
    return v.coef();
  };
  const Rational lhs = Rational(Integer(k + 1), Integer(n) * n) * expect(k) - Rational(2 * k + 1) * expect(k - 1) +
                       Rational(k, 4) * Rational((2 * l + 1) * (2 * l + 1) - k * k) * expect(k - 2);
  return lhs == 0;
}

}  // namespace hydrocg::hydrogenic
