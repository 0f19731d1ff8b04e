#include "hydrocg/cli.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>

namespace hydrocg::cli {

using exactnum::Integer;
using exactnum::Rational;

namespace {

constexpr int kDigits = 15;

Integer pow10(int e) {
  Integer out = 1;
  for (int i = 0; i < e; ++i) out *= 10;
  return out;
}

// v^2 * 10^(2s) for a signed shift s.
Rational scaled_square(const Rational& square, int shift) {
  const Integer p = pow10(2 * std::abs(shift));
  return shift >= 0 ? Rational(square * p) : Rational(square / p);
}

// floor(sqrt(q)) for q >= 0
Integer floor_sqrt(const Rational& q) {
  const Integer whole = exactnum::numerator(q) / exactnum::denominator(q);
  return boost::multiprecision::sqrt(whole);
}

}  // namespace

std::string render_decimal(const exactnum::PhasedSurd& x) {
  std::string sign = x.sign() < 0 ? "-" : "";
  std::string suffix = x.imaginary() ? "*i" : "";
  if (x.is_zero()) return "0." + std::string(kDigits - 1, '0');

  const Rational square = x.coef() * x.coef() * x.radicand();  // |value|^2
  // exponent estimate, corrected below
  int e = static_cast<int>(std::floor(std::log10(std::fabs(x.magnitude_ld()))));
  const Integer lo = pow10(kDigits - 1), hi = pow10(kDigits);
  Integer m;
  Rational y;
  for (;;) {
    y = scaled_square(square, kDigits - 1 - e);
    m = floor_sqrt(y);
    if (m >= hi) {
      ++e;
    } else if (m < lo) {
      --e;
    } else {
      break;
    }
  }
  // round half to even: compare y with (m + 1/2)^2
  const Rational half_sq = Rational((2 * m + 1) * (2 * m + 1), 4);
  if (y > half_sq || (y == half_sq && m % 2 == 1)) ++m;
  if (m == hi) {
    m = lo;
    ++e;
  }

  const std::string digits = m.str();
  std::string body;
  if (e >= 0 && e < kDigits) {
    body = digits.substr(0, e + 1);
    if (e + 1 < kDigits) body += "." + digits.substr(e + 1);
  } else if (e < 0 && e >= -5) {
    body = "0." + std::string(-e - 1, '0') + digits;
  } else {
    body = digits.substr(0, 1) + "." + digits.substr(1) + "e" + (e < 0 ? "-" : "+") +
           (std::abs(e) < 10 ? "0" : "") + std::to_string(std::abs(e));
  }
  return sign + body + suffix;
}

}  // namespace hydrocg::cli
