#include "hydrocg/exactnum.hpp"

#include <boost/multiprecision/integer.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

namespace hydrocg::exactnum {

namespace {

constexpr unsigned kSieveLimit = 1u << 16;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<unsigned> out;
    for (unsigned p = 2; p <= kSieveLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = static_cast<unsigned long>(p) * p; q <= kSieveLimit; q += p)
        composite[q] = true;
    }
    return out;
  }();
  return primes;
}

bool is_probable_prime(const Integer& n) {
  return boost::multiprecision::miller_rabin_test(n, 32);
}

// Brent's variant of Pollard rho; n is odd, composite and not a square.
Integer pollard_rho(const Integer& n) {
  for (Integer c = 1;; ++c) {
    Integer y = 2, x = 2, q = 1, g = 1, ys;
    const auto f = [&](const Integer& v) { return (v * v + c) % n; };
    std::size_t r = 1;
    constexpr std::size_t batch = 64;
    while (g == 1) {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      for (std::size_t k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (std::size_t i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = (q * boost::multiprecision::abs(x - y)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = boost::multiprecision::gcd(boost::multiprecision::abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root == n) {
    std::map<Integer, unsigned> sub;
    factor_large(root, sub);
    for (const auto& [p, e] : sub) out[p] += 2 * e;
    return;
  }
  Integer d = pollard_rho(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

SquarefreeSplit squarefree_split(const Integer& m) {
  if (m <= 0) throw DomainError("squarefree_split: argument must be positive");
  Integer rem = m;
  Integer outer = 1, inner = 1;
  for (unsigned p : small_primes()) {
    if (rem == 1) break;
    if (Integer(p) * p > rem) break;
    unsigned e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) outer *= p;
    if (e % 2) inner *= p;
  }
  if (rem > 1) {
    // rem has no factor below the sieve limit, or is itself a small prime.
    const Integer limit = Integer(kSieveLimit) * kSieveLimit;
    if (rem < limit) {
      inner *= rem;
    } else {
      std::map<Integer, unsigned> factors;
      factor_large(rem, factors);
      for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i < e / 2; ++i) outer *= p;
        if (e % 2) inner *= p;
      }
    }
  }
  return {outer, inner};
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

PhasedSurd PhasedSurd::make(const Rational& coef, const Integer& radicand, bool imaginary) {
  if (radicand <= 0) throw DomainError("surd radicand must be positive");
  PhasedSurd out;
  if (coef == 0) return out;
  auto [outer, inner] = squarefree_split(radicand);
  out.coef_ = coef * outer;
  out.radicand_ = inner;
  out.imaginary_ = imaginary;
  return out;
}

bool PhasedSurd::is_canonical() const {
  if (radicand_ < 1) return false;
  if (coef_ == 0) return radicand_ == 1 && !imaginary_;
  return squarefree_split(radicand_).outer == 1;
}

Rational PhasedSurd::square() const {
  Rational s = coef_ * coef_ * radicand_;
  return imaginary_ ? -s : s;
}

PhasedSurd PhasedSurd::operator-() const {
  PhasedSurd out = *this;
  out.coef_ = -out.coef_;
  return out;
}

PhasedSurd operator*(const PhasedSurd& x, const PhasedSurd& y) {
  PhasedSurd out;
  if (x.is_zero() || y.is_zero()) return out;
  // Squarefree a, b: a*b = g^2 * (a/g)(b/g) with the cofactor squarefree.
  Integer g = boost::multiprecision::gcd(x.radicand_, y.radicand_);
  out.coef_ = x.coef_ * y.coef_ * g;
  out.radicand_ = (x.radicand_ / g) * (y.radicand_ / g);
  if (x.imaginary_ && y.imaginary_) {
    out.coef_ = -out.coef_;
    out.imaginary_ = false;
  } else {
    out.imaginary_ = x.imaginary_ || y.imaginary_;
  }
  return out;
}

PhasedSurd PhasedSurd::reciprocal() const {
  if (is_zero()) throw DomainError("division by zero surd");
  PhasedSurd out;
  out.coef_ = 1 / (coef_ * radicand_);
  out.radicand_ = radicand_;
  out.imaginary_ = imaginary_;
  if (imaginary_) out.coef_ = -out.coef_;  // 1/i = -i
  return out;
}

PhasedSurd operator/(const PhasedSurd& x, const PhasedSurd& y) { return x * y.reciprocal(); }

PhasedSurd operator+(const PhasedSurd& x, const PhasedSurd& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.radicand_ != y.radicand_ || x.imaginary_ != y.imaginary_)
    throw IncompatibleSurdError("cannot add unlike surds " + render(x) + " and " + render(y));
  PhasedSurd out;
  Rational c = x.coef_ + y.coef_;
  if (c == 0) return out;
  out.coef_ = c;
  out.radicand_ = x.radicand_;
  out.imaginary_ = x.imaginary_;
  return out;
}

long double PhasedSurd::magnitude_ld() const {
  const long double c = coef_.convert_to<long double>();
  return c * std::sqrt(radicand_.convert_to<long double>());
}

PhasedSurd surd_mul(const PhasedSurd& x, const PhasedSurd& y) { return x * y; }
PhasedSurd surd_add(const PhasedSurd& x, const PhasedSurd& y) { return x + y; }

PhasedSurd surd_sqrt(const Rational& q) {
  if (q == 0) return {};
  const bool neg = q < 0;
  const Rational a = neg ? Rational(-q) : q;
  // sqrt(p/d) = sqrt(p*d)/d
  const Integer d = denominator(a);
  return PhasedSurd::make(Rational(1, d), numerator(a) * d, neg);
}

PhasedSurd i_power(long long power) {
  switch (((power % 4) + 4) % 4) {
    case 0: return PhasedSurd(1);
    case 1: return PhasedSurd::make(1, 1, true);
    case 2: return PhasedSurd(-1);
    default: return PhasedSurd::make(-1, 1, true);
  }
}

}  // namespace hydrocg::exactnum
