#pragma once

// Exact scalar arithmetic: rationals, canonical surds c*sqrt(d)*i^u,
// factorials and leading Laurent terms of epsilon-deformed Gamma products.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hydrocg::exactnum {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const Integer& num, const Integer& den = 1);
inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string to_string(const Rational& q);

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct IncompatibleSurdError : std::logic_error {
  using std::logic_error::logic_error;
};

// A pole survived to the epsilon limit.
struct DivergenceError : std::runtime_error {
  DivergenceError(const std::string& what, int doubled_order)
      : std::runtime_error(what), doubled_order(doubled_order) {}
  int doubled_order;
};

// Leading-order terms cancelled where only a higher-order term could
// decide the limit.
struct CancellationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

////////////////////////////////////////////////////////////////
// PhasedSurd
////////////////////////////////////////////////////////////////

/// Exact value coef * sqrt(radicand) * (imaginary ? i : 1) with a
/// squarefree radicand.  Every value has exactly one representation;
/// zero is 0*sqrt(1) with no phase.
class PhasedSurd {
 public:
  PhasedSurd() = default;
  PhasedSurd(const Rational& q) : coef_(q) {}  // NOLINT: implicit by design of the algebra
  PhasedSurd(long long v) : coef_(v) {}        // NOLINT

  /// Canonicalizes an arbitrary positive radicand (squares are pulled
  /// into the coefficient).
  static PhasedSurd make(const Rational& coef, const Integer& radicand, bool imaginary);

  const Rational& coef() const { return coef_; }
  const Integer& radicand() const { return radicand_; }
  bool imaginary() const { return imaginary_; }

  bool is_zero() const { return coef_ == 0; }
  bool is_real() const { return !imaginary_; }
  int sign() const { return coef_ < 0 ? -1 : (coef_ > 0 ? 1 : 0); }

  /// value^2 as a rational (i^2 = -1 is folded in).
  Rational square() const;

  PhasedSurd operator-() const;
  friend PhasedSurd operator*(const PhasedSurd& x, const PhasedSurd& y);
  friend PhasedSurd operator/(const PhasedSurd& x, const PhasedSurd& y);
  friend PhasedSurd operator+(const PhasedSurd& x, const PhasedSurd& y);
  friend PhasedSurd operator-(const PhasedSurd& x, const PhasedSurd& y) { return x + (-y); }
  PhasedSurd& operator*=(const PhasedSurd& y) { return *this = *this * y; }
  PhasedSurd& operator+=(const PhasedSurd& y) { return *this = *this + y; }

  friend bool operator==(const PhasedSurd&, const PhasedSurd&) = default;

  PhasedSurd reciprocal() const;

  /// Approximate value for display or numeric cross-checks; the
  /// imaginary flag is not applied.
  long double magnitude_ld() const;

  /// True if the fields already satisfy the canonical-form invariants.
  bool is_canonical() const;

 private:
  Rational coef_{0};
  Integer radicand_{1};
  bool imaginary_{false};
};

PhasedSurd surd_mul(const PhasedSurd& x, const PhasedSurd& y);
PhasedSurd surd_add(const PhasedSurd& x, const PhasedSurd& y);
/// Principal square root; negative input gives an imaginary result.
PhasedSurd surd_sqrt(const Rational& q);

/// i^power, power taken mod 4.
PhasedSurd i_power(long long power);
/// (-1)^power.
inline int parity_sign(long long power) { return (power % 2 == 0) ? 1 : -1; }

/// Exact rendering:  ["-"] COEF ["*sqrt(" NAT ")"] ["*i"],  COEF := INT | INT "/" NAT.
std::string render(const PhasedSurd& x);
/// Inverse of render; only canonical strings are accepted.
PhasedSurd parse_surd(std::string_view text);

/// Squarefree decomposition  m = outer^2 * inner.
struct SquarefreeSplit {
  Integer outer;
  Integer inner;
};
SquarefreeSplit squarefree_split(const Integer& m);

////////////////////////////////////////////////////////////////
// factorials
////////////////////////////////////////////////////////////////

/// m!; throws DomainError for m < 0.  Backed by a shared monotone cache.
Integer factorial(long long m);
/// (a)_j = a (a+1) ... (a+j-1).
Rational pochhammer(const Rational& a, long long j);
Integer binomial(long long n, long long k);

////////////////////////////////////////////////////////////////
// epsilon-deformed Gamma factors
////////////////////////////////////////////////////////////////

/// Leading Laurent term coeff * eps^(doubled_order/2) as eps -> 0+.
class EpsLeading {
 public:
  EpsLeading() = default;
  EpsLeading(int doubled_order, PhasedSurd coeff);

  static EpsLeading constant(const PhasedSurd& c) { return {0, c}; }

  int doubled_order() const { return order_; }
  const PhasedSurd& coeff() const { return coeff_; }
  bool is_zero() const { return coeff_.is_zero(); }

  friend bool operator==(const EpsLeading&, const EpsLeading&) = default;

 private:
  int order_{0};
  PhasedSurd coeff_{};
};

/// Leading behaviour of Gamma(x + direction*eps), direction = +1 or -1.
EpsLeading gamma_eps(long long x, int direction = 1);
/// lim Gamma(-a+1+eps)/Gamma(-b+1+eps) for a, b >= 1, i.e. (-a)!/(-b)!.
Rational neg_factorial_ratio(long long a, long long b);

EpsLeading eps_mul(std::span<const EpsLeading> xs);
EpsLeading eps_mul(const EpsLeading& x, const EpsLeading& y);
EpsLeading eps_inv(const EpsLeading& x);
EpsLeading eps_sqrt(const EpsLeading& x);
/// Like-order sum; throws IncompatibleSurdError on mismatched orders.
EpsLeading eps_add(const EpsLeading& x, const EpsLeading& y);
PhasedSurd eps_limit(const EpsLeading& x);

/// Sum of leading terms of possibly different orders.  Terms above the
/// minimal order are dropped, but their order is remembered so that a
/// cancellation of the minimal-order part still yields a valid lower
/// bound on the true order of the sum.
class EpsSum {
 public:
  void add(const EpsLeading& term);

  bool empty() const { return !any_; }
  /// Leading term; meaningful only if !cancelled().
  EpsLeading leading() const;
  bool cancelled() const { return any_ && leading_sum_.is_zero(); }
  /// Lower bound on the doubled order of the exact sum.
  int order_lower_bound() const;

 private:
  bool any_{false};
  int min_order_{0};
  std::int64_t next_order_{INT32_MAX};
  PhasedSurd leading_sum_{};
};

/// eps-limit of prefactor * sum, using the cancellation lower bound of
/// the sum when its leading part vanished.
PhasedSurd limit_of_product(const EpsLeading& prefactor, const EpsSum& sum);

}  // namespace hydrocg::exactnum
