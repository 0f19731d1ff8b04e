#include "hydrocg/hypergeom.hpp"

#include <optional>
#include <string>

namespace hydrocg::hypergeom {

using exactnum::DomainError;
using exactnum::factorial;
using exactnum::Integer;

namespace {

// -q if q is a nonpositive integer.
std::optional<long long> nonpositive_integer_magnitude(const Rational& q) {
  if (exactnum::denominator(q) != 1 || q > 0) return std::nullopt;
  return static_cast<long long>(-exactnum::numerator(q));
}

}  // namespace

long long termination_index(const F32Params& p) {
  std::optional<long long> t;
  for (const auto& a : p.a) {
    if (auto m = nonpositive_integer_magnitude(a)) t = t ? std::min(*t, *m) : *m;
  }
  if (!t)
    throw DomainError("3F2 does not terminate: no numerator parameter is a nonpositive integer");
  for (std::size_t j = 0; j < p.b.size(); ++j) {
    if (auto m = nonpositive_integer_magnitude(p.b[j]); m && *m < *t)
      throw DomainError("3F2 denominator parameter b" + std::to_string(j + 1) + " = " +
                        exactnum::to_string(p.b[j]) + " vanishes before termination at index " +
                        std::to_string(*t));
  }
  return *t;
}

Rational f3f2_terminating(const F32Params& p) {
  const long long last = termination_index(p);
  Rational sum = 0, term = 1;
  for (long long j = 0; j <= last; ++j) {
    sum += term;
    if (j == last) break;
    // ratio of consecutive terms
    term *= (p.a[0] + j) * (p.a[1] + j) * (p.a[2] + j);
    term /= (p.b[0] + j) * (p.b[1] + j) * Rational(j + 1);
  }
  return sum;
}

F32Params vk_parameters(long long n, long long l, long long lp, long long k) {
  return {{Rational(l + lp - k), Rational(l - lp - k - 1), Rational(-k - 1)},
          {Rational(n + l - k), Rational(-2 * k - 2)}};
}

PhasedSurd vk_f(long long l, long long lp, long long k) {
  const long long delta = l - lp;
  if (delta < 0) throw DomainError("vk_f requires l >= lp");
  if (l + lp + k + 2 < 0) throw DomainError("vk_f: (l+lp+k+2)! has a negative argument");
  Rational square;
  if (k >= -1) {
    if (k + 1 - delta < 0) throw DomainError("vk_f: l-lp exceeds k+1");
    if (l + lp - k - 1 < 0)
      throw DomainError("vk_f: (l+lp-k-1)! has a negative argument (outside the finite regime)");
    const Integer kf = factorial(k + 1);
    square = Rational(factorial(k + 1 - delta) * factorial(k + 1 + delta) * factorial(l + lp + k + 2),
                      kf * kf * factorial(l + lp - k - 1));
  } else {
    // (k+1-D)!/(k+1)! and (k+1+D)!/(k+1)! as (-a)!/(-b)! with b = -(k+1)
    const long long b = -(k + 1);
    if (b - delta < 1)
      throw DomainError("vk_f: l-lp exceeds -(k+2), the transformed coupling violates the triangle");
    square = exactnum::neg_factorial_ratio(b + delta, b) * exactnum::neg_factorial_ratio(b - delta, b) *
             Rational(factorial(l + lp + k + 2), factorial(l + lp - k - 1));
  }
  return exactnum::surd_sqrt(square);
}

}  // namespace hydrocg::hypergeom
