#include "hydrocg/exactnum.hpp"

#include <algorithm>
#include <climits>

namespace hydrocg::exactnum {

EpsLeading::EpsLeading(int doubled_order, PhasedSurd coeff)
    : order_(coeff.is_zero() ? 0 : doubled_order), coeff_(std::move(coeff)) {}

EpsLeading gamma_eps(long long x, int direction) {
  if (direction != 1 && direction != -1) throw DomainError("gamma_eps: direction must be +1 or -1");
  if (x >= 1) return {0, PhasedSurd(Rational(factorial(x - 1)))};
  // Gamma(-N + d) ~ (-1)^N / (N! d),  d = direction * eps
  const long long big_n = -x;
  Rational c(Integer(parity_sign(big_n) * direction), factorial(big_n));
  return {-2, PhasedSurd(c)};
}

EpsLeading eps_mul(const EpsLeading& x, const EpsLeading& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return {x.doubled_order() + y.doubled_order(), x.coeff() * y.coeff()};
}

EpsLeading eps_mul(std::span<const EpsLeading> xs) {
  EpsLeading out = EpsLeading::constant(1);
  for (const auto& x : xs) out = eps_mul(out, x);
  return out;
}

EpsLeading eps_inv(const EpsLeading& x) {
  if (x.is_zero()) throw DomainError("eps_inv of zero");
  return {-x.doubled_order(), x.coeff().reciprocal()};
}

EpsLeading eps_sqrt(const EpsLeading& x) {
  if (x.is_zero()) return {};
  if (x.doubled_order() % 2 != 0)
    throw DomainError("eps_sqrt: order eps^(" + std::to_string(x.doubled_order()) +
                      "/2) has no representable square root");
  const PhasedSurd& c = x.coeff();
  if (c.radicand() != 1 || c.imaginary())
    throw IncompatibleSurdError("eps_sqrt: coefficient " + render(c) + " is not rational");
  return {x.doubled_order() / 2, surd_sqrt(c.coef())};
}

EpsLeading eps_add(const EpsLeading& x, const EpsLeading& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.doubled_order() != y.doubled_order())
    throw IncompatibleSurdError("eps_add: orders differ (" + std::to_string(x.doubled_order()) +
                                " vs " + std::to_string(y.doubled_order()) + ")");
  return {x.doubled_order(), x.coeff() + y.coeff()};
}

PhasedSurd eps_limit(const EpsLeading& x) {
  if (x.is_zero() || x.doubled_order() > 0) return {};
  if (x.doubled_order() == 0) return x.coeff();
  throw DivergenceError("eps limit diverges as eps^(" + std::to_string(x.doubled_order()) + "/2)",
                        x.doubled_order());
}

Rational neg_factorial_ratio(long long a, long long b) {
  if (a < 1 || b < 1) throw DomainError("neg_factorial_ratio requires a, b >= 1");
  const EpsLeading r = eps_mul(gamma_eps(1 - a), eps_inv(gamma_eps(1 - b)));
  return eps_limit(r).coef();
}

void EpsSum::add(const EpsLeading& term) {
  if (term.is_zero()) return;
  const int o = term.doubled_order();
  if (!any_) {
    any_ = true;
    min_order_ = o;
    leading_sum_ = term.coeff();
    return;
  }
  if (o < min_order_) {
    next_order_ = std::min<std::int64_t>(next_order_, min_order_);
    min_order_ = o;
    leading_sum_ = term.coeff();
  } else if (o == min_order_) {
    leading_sum_ += term.coeff();
  } else {
    next_order_ = std::min<std::int64_t>(next_order_, o);
  }
}

EpsLeading EpsSum::leading() const {
  if (!any_) return {};
  return {min_order_, leading_sum_};
}

int EpsSum::order_lower_bound() const {
  if (!any_) return INT_MAX;
  if (!cancelled()) return min_order_;
  // Corrections to each leading term come in whole powers of eps.
  return static_cast<int>(std::min<std::int64_t>(next_order_, min_order_ + 2));
}

PhasedSurd limit_of_product(const EpsLeading& prefactor, const EpsSum& sum) {
  if (prefactor.is_zero() || sum.empty()) return {};
  if (!sum.cancelled()) return eps_limit(eps_mul(prefactor, sum.leading()));
  const long long bound = static_cast<long long>(prefactor.doubled_order()) + sum.order_lower_bound();
  if (bound > 0) return {};
  throw CancellationError(
      "leading eps terms cancelled; the limit depends on higher-order terms "
      "(escalate to the numeric extrapolation oracle)");
}

}  // namespace hydrocg::exactnum
