#include "hydrocg/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hydrocg::wigner {

namespace {

using cld = std::complex<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;

// sin(pi z) with the integer part of z reduced exactly.
long double sin_pi(long double z) {
  const long double r = std::nearbyint(z);
  const long double f = z - r;
  const long double s = std::sin(kPi * f);
  return (std::fmod(std::fabs(r), 2.0L) == 1.0L) ? -s : s;
}

// Gamma for real arguments, through the reflection formula left of 1/2.
long double gamma_real(long double z) {
  if (z >= 0.5L) return std::tgamma(z);
  return kPi / (sin_pi(z) * std::tgamma(1.0L - z));
}

long double rgamma_real(long double z) {
  if (z >= 0.5L) return 1.0L / std::tgamma(z);
  return sin_pi(z) * std::tgamma(1.0L - z) / kPi;
}

cld principal_sqrt(long double v) {
  return v >= 0 ? cld(std::sqrt(v), 0) : cld(0, std::sqrt(-v));
}

long double fact(int m) { return std::tgamma(static_cast<long double>(m) + 1.0L); }

// (lp K l; -x 0 x) at x = n - eps with the same branch as the exact path.
cld deformed_racah(int lp, int K, int l, int n, long double eps) {
  const long double x = n - eps;
  const int lo = std::min(l, lp), hi = std::max(l, lp);
  cld pre = gamma_real(lo + 1 - x);
  for (int t = lo; t < hi; ++t) pre *= principal_sqrt(t + 1 - x);
  pre *= std::sqrt(gamma_real(lp + 1 + x) * gamma_real(l + 1 + x)) * fact(K);

  long double sum = 0;
  for (int z = std::max(0, lp - l); z <= std::min(lp + K - l, K); ++z) {
    const long double plain = fact(z) * fact(lp + K - l - z) * fact(K - z) * fact(l - lp + z);
    const long double sign = (z % 2 == 0) ? 1.0L : -1.0L;
    sum += sign / plain * rgamma_real(lp + x - z + 1) * rgamma_real(l - K - x + z + 1);
  }
  const long double tri = std::sqrt(fact(lp + K - l) * fact(lp - K + l) * fact(-lp + K + l) /
                                    fact(lp + K + l + 1));
  const long double phase = ((lp - K - n) % 2 == 0) ? 1.0L : -1.0L;
  return phase * tri * pre * sum;
}

bool finite(cld v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

std::vector<long double> default_epsilons() {
  std::vector<long double> out;
  for (int i = 4; i <= 11; ++i) out.push_back(std::ldexp(1.0L, -i));
  return out;
}

NumericEstimate numeric_eps_oracle(int lp, int K, int l, int n, std::span<const long double> epsilons) {
  NumericEstimate est;
  if (epsilons.size() < 2) {
    est.failure = "need at least two epsilons";
    return est;
  }
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0) || (i > 0 && !(epsilons[i] < epsilons[i - 1]))) {
      est.failure = "epsilons must be positive and strictly decreasing";
      return est;
    }
  }
  if (!triangle_ok(lp, K, l)) {
    // the deformed sum carries the vanishing triangle factor identically
    est.value = 0;
    est.converged = true;
    return est;
  }

  std::vector<cld> p;
  for (long double e : epsilons) {
    const cld v = deformed_racah(lp, K, l, n, e);
    if (!finite(v)) {
      est.failure = "non-finite sample at eps = " + std::to_string(static_cast<double>(e));
      return est;
    }
    p.push_back(v);
  }
  // Neville extrapolation to eps = 0; keep the estimate that omits the
  // largest eps as the comparison value.
  const std::size_t m = p.size();
  std::vector<cld> q(p.begin() + 1, p.end());
  const auto neville = [](std::vector<cld> vals, std::span<const long double> xs) {
    for (std::size_t level = 1; level < vals.size(); ++level)
      for (std::size_t i = 0; i + level < vals.size(); ++i)
        vals[i] = (xs[i + level] * vals[i] - xs[i] * vals[i + 1]) / (xs[i + level] - xs[i]);
    return vals.front();
  };
  est.value = neville(p, epsilons);
  const cld coarse = neville(q, epsilons.subspan(1, m - 1));
  est.error_bound = std::abs(est.value - coarse);
  const long double scale = std::max(1.0L, std::abs(est.value));
  est.converged = finite(est.value) && est.error_bound <= 1e-6L * scale;
  if (!est.converged) est.failure = "extrapolation did not settle (tail " +
                                    std::to_string(static_cast<double>(est.error_bound)) + ")";
  return est;
}

}  // namespace hydrocg::wigner
