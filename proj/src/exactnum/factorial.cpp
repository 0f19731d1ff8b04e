#include "hydrocg/exactnum.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace hydrocg::exactnum {

namespace {

// Grows monotonically; reads take a shared lock, growth an exclusive one.
class FactorialCache {
 public:
  Integer get(std::size_t m) {
    {
      std::shared_lock lock(mutex_);
      if (m < table_.size()) return table_[m];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= m) table_.push_back(table_.back() * Integer(table_.size()));
    return table_[m];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Integer> table_{Integer(1)};
};

FactorialCache& cache() {
  static FactorialCache c;
  return c;
}

}  // namespace

Integer factorial(long long m) {
  if (m < 0)
    throw DomainError("factorial of negative argument " + std::to_string(m) +
                      " (use gamma_eps for continued factorials)");
  return cache().get(static_cast<std::size_t>(m));
}

Rational pochhammer(const Rational& a, long long j) {
  if (j < 0) throw DomainError("pochhammer: negative length");
  Rational out = 1;
  for (long long i = 0; i < j; ++i) {
    out *= a + i;
    if (out == 0) break;
  }
  return out;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace hydrocg::exactnum
