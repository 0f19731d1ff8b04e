#include "hydrocg/hydrogenic.hpp"
#include "hydrocg/verify.hpp"
#include "hydrocg/wigner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace hydrocg::verify {

using exactnum::CancellationError;
using exactnum::DomainError;
using exactnum::parity_sign;
using exactnum::Rational;
using exactnum::render;

namespace {

// Results land at the task's index, so output order never depends on
// scheduling.
template <class Task, class Fn>
auto parallel_map(const std::vector<Task>& tasks, Fn fn, int jobs) {
  using Result = std::invoke_result_t<Fn, const Task&>;
  std::vector<Result> out(tasks.size());
  const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, std::max<std::size_t>(1, tasks.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = fn(tasks[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = fn(tasks[i]);
    });
  }
  pool.clear();
  return out;
}

CheckRecord skipped(std::string suite, Params params) {
  CheckRecord r;
  r.suite = std::move(suite);
  r.params = std::move(params);
  r.expected = r.actual = "skipped";
  r.pass = true;
  r.skipped = true;
  r.note = kSkippedNote;
  return r;
}

CheckRecord exact_record(std::string suite, Params params, const PhasedSurd& expected,
                         const PhasedSurd& actual, std::string note = {}) {
  CheckRecord r;
  r.suite = std::move(suite);
  r.params = std::move(params);
  r.expected = render(expected);
  r.actual = render(actual);
  r.pass = expected == actual;
  r.note = std::move(note);
  return r;
}

CheckRecord failure(std::string suite, Params params, std::string expected, const std::exception& e) {
  CheckRecord r;
  r.suite = std::move(suite);
  r.params = std::move(params);
  r.expected = std::move(expected);
  r.actual = "error";
  r.pass = false;
  r.cancellation = dynamic_cast<const CancellationError*>(&e) != nullptr;
  r.note = r.cancellation ? std::string("cancellation: ") + e.what() : std::string("error: ") + e.what();
  return r;
}

PhasedSurd rational_power(const Rational& base, int k) {
  Rational out = 1;
  const Rational b = k < 0 ? Rational(1 / base) : base;
  for (int i = 0; i < std::abs(k); ++i) out *= b;
  return out;
}

// Uniformity of a quantity q(n) per group: records compare q against the
// value at the group's first point.
struct Sample {
  Params params;
  std::optional<PhasedSurd> value;
  std::string error;
  bool cancellation{false};
};

}  // namespace

std::string suite_id(Suite s) {
  switch (s) {
    case Suite::normalization: return "norm";
    case Suite::ps: return "ps";
    case Suite::vk: return "vk";
    case Suite::armstrong: return "armstrong";
    case Suite::rm4: return "rm4";
    case Suite::oracle: return "oracle";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& id) {
  for (Suite s : all_suites())
    if (suite_id(s) == id) return s;
  return std::nullopt;
}

std::set<Suite> all_suites() {
  return {Suite::normalization, Suite::ps, Suite::vk, Suite::armstrong, Suite::rm4, Suite::oracle};
}

void GridSpec::validate() const {
  if (n_max < 1) throw DomainError("GridSpec: n_max must be >= 1");
  if (k_min > k_max) throw DomainError("GridSpec: k_min must not exceed k_max");
}

////////////////////////////////////////////////////////////////
// normalization
////////////////////////////////////////////////////////////////

VerificationReport check_normalization(const GridSpec& g, int jobs) {
  g.validate();
  std::vector<std::pair<int, int>> tasks;
  for (int n = 1; n <= g.n_max; ++n)
    for (int l = 0; l < n; ++l)
      if (g.l_in_range(l)) tasks.emplace_back(n, l);
  VerificationReport rep;
  rep.records = parallel_map(tasks, [](const std::pair<int, int>& t) {
    const auto [n, l] = t;
    Params p{{"n", n}, {"l", l}};
    try {
      return exact_record("norm", p, PhasedSurd(1), hydrogenic::me_power(n, l, l, 0));
    } catch (const std::exception& e) {
      return failure("norm", p, "1", e);
    }
  }, jobs);
  rep.canonicalize();
  return rep;
}

////////////////////////////////////////////////////////////////
// Pasternack-Sternheimer zeros
////////////////////////////////////////////////////////////////

VerificationReport check_ps_rule(const GridSpec& g, int jobs) {
  g.validate();
  struct Task {
    int n, l, lp, k;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= g.n_max; ++n)
    for (int l = 0; l < n; ++l)
      for (int lp = 0; lp < n; ++lp) {
        if (l == lp || !g.l_in_range(l) || !g.l_in_range(lp)) continue;
        const int span = std::abs(l - lp);
        for (int k = 2; k <= span + 2; ++k)
          if (g.k_in_range(k)) tasks.push_back({n, l, lp, k});
      }
  VerificationReport rep;
  rep.records = parallel_map(tasks, [](const Task& t) {
    Params p{{"n", t.n}, {"l", t.l}, {"lp", t.lp}, {"k", t.k}};
    if (t.l + t.lp + 2 - t.k < 0) return skipped("ps", p);
    const bool rule = hydrogenic::ps_zero_predicted(t.l, t.lp, t.k);
    try {
      const PhasedSurd v = hydrogenic::me_power(t.n, t.l, t.lp, -t.k);
      if (rule) return exact_record("ps", p, PhasedSurd(0), v, "inside rule");
      CheckRecord r;
      r.suite = "ps";
      r.params = p;
      r.expected = "nonzero";
      r.actual = render(v);
      r.pass = !v.is_zero();
      r.note = "just outside rule";
      return r;
    } catch (const std::exception& e) {
      return failure("ps", p, rule ? "0" : "nonzero", e);
    }
  }, jobs);
  rep.canonicalize();
  return rep;
}

////////////////////////////////////////////////////////////////
// matrix element / continued CG ratio
////////////////////////////////////////////////////////////////

VerificationReport check_vk_identity(const GridSpec& g, int jobs) {
  g.validate();
  struct Task {
    int n, l, lp, k;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= g.n_max; ++n)
    for (int l = 0; l < n; ++l)
      for (int lp = 0; lp <= l; ++lp) {
        if (!g.l_in_range(l)) continue;
        for (int k = std::max(0, g.k_min); k <= std::min(g.k_max, l + lp); ++k) tasks.push_back({n, l, lp, k});
      }

  const auto in_domain = [](const Task& t) {
    return wigner::triangle_ok(t.lp, t.k + 1, t.l) && t.l + t.lp - t.k - 1 >= 0;
  };
  auto samples = parallel_map(tasks, [&](const Task& t) {
    Sample s;
    s.params = {{"n", t.n}, {"l", t.l}, {"lp", t.lp}, {"k", t.k}};
    if (!in_domain(t)) return s;
    try {
      const PhasedSurd me = hydrogenic::me_power(t.n, t.l, t.lp, t.k);
      const PhasedSurd product = wigner::regularized_cg_product({t.l, t.lp, t.n, t.k});
      const PhasedSurd rhs = exactnum::i_power(t.l - t.lp) * PhasedSurd(Rational(1, 2 * t.n)) /
                             exactnum::surd_sqrt(Rational(2 * t.l + 1)) *
                             rational_power(Rational(t.n, 2), t.k) * product;
      if (rhs.is_zero()) {
        s.error = "right side vanishes (continued coefficient is zero)";
        return s;
      }
      s.value = me / rhs;
    } catch (const CancellationError& e) {
      s.error = std::string("cancellation: ") + e.what();
      s.cancellation = true;
    } catch (const std::exception& e) {
      s.error = std::string("error: ") + e.what();
    }
    return s;
  }, jobs);

  // Anchor: (n=2, l=lp=1, k=1) when present, otherwise the first point.
  std::optional<PhasedSurd> anchor, even, odd;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!samples[i].value) continue;
    const Task& t = tasks[i];
    if (!anchor || (t.n == 2 && t.l == 1 && t.lp == 1 && t.k == 1)) anchor = samples[i].value;
    auto& parity = ((t.l - t.lp) % 2 == 0) ? even : odd;
    if (!parity) parity = samples[i].value;
  }
  const std::optional<PhasedSurd> reference = g.vk_pin ? g.vk_pin : anchor;

  VerificationReport rep;
  bool uniform = true;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    Sample& s = samples[i];
    if (!in_domain(t)) {
      rep.records.push_back(skipped("vk", s.params));
      continue;
    }
    if (!s.value) {
      CheckRecord r;
      r.suite = "vk";
      r.params = s.params;
      r.expected = reference ? render(*reference) : "?";
      r.actual = "error";
      r.note = s.error;
      r.cancellation = s.cancellation;
      rep.records.push_back(r);
      uniform = false;
      continue;
    }
    auto r = exact_record("vk", s.params, *reference, *s.value, "ratio of <nl|r^k|nl'> to the closed form");
    uniform = uniform && r.pass;
    rep.records.push_back(std::move(r));
  }
  if (anchor) rep.constants.push_back({"vk", "convention_constant", {}, *anchor});
  if (!uniform) {
    if (even) rep.constants.push_back({"vk", "convention_constant_even_delta", {{"parity", 0}}, *even});
    if (odd) rep.constants.push_back({"vk", "convention_constant_odd_delta", {{"parity", 1}}, *odd});
  }
  rep.canonicalize();
  return rep;
}

////////////////////////////////////////////////////////////////
// n-independence of the proportionality factor
////////////////////////////////////////////////////////////////

namespace {

// Conditions under which the proportionality factor is defined at all.
bool armstrong_defined(int l, int lp, int k) {
  return k >= 2 && wigner::triangle_ok(lp, k - 2, l) && l + lp + 2 - k >= 0;
}

// The grid additionally keeps to the stated range k <= l+lp-2.
bool armstrong_in_grid(int l, int lp, int k) { return armstrong_defined(l, lp, k) && k <= l + lp - 2; }

VerificationReport skipped_group(int l, int lp, int k) {
  VerificationReport rep;
  rep.records.push_back(skipped("armstrong", {{"l", l}, {"lp", lp}, {"k", k}, {"n", 0}}));
  return rep;
}

}  // namespace

VerificationReport check_n_independence(int l, int lp, int k, std::pair<int, int> n_range, int jobs) {
  VerificationReport rep;
  const Params group{{"l", l}, {"lp", lp}, {"k", k}};
  if (!armstrong_defined(l, lp, k)) return skipped_group(l, lp, k);
  std::vector<int> ns;
  for (int n = std::max(n_range.first, std::max(l, lp) + 1); n <= n_range.second; ++n) ns.push_back(n);

  auto samples = parallel_map(ns, [&](const int& n) {
    Sample s;
    s.params = group;
    s.params.emplace_back("n", n);
    try {
      const PhasedSurd me = hydrogenic::me_power(n, lp, l, -k);
      const PhasedSurd tj = wigner::regularized_three_j(lp, k - 2, l, n);
      if (tj.is_zero()) {
        s.error = "zero denominator: continued 3j (" + std::to_string(lp) + " " + std::to_string(k - 2) + " " +
                  std::to_string(l) + "; -" + std::to_string(n) + " 0 " + std::to_string(n) +
                  ") vanishes; matrix element " + render(me);
        return s;
      }
      Rational scale = parity_sign(lp - n);
      for (int i = 0; i < k + 1; ++i) scale *= n;
      s.value = me * PhasedSurd(scale) / tj;
    } catch (const CancellationError& e) {
      s.error = std::string("cancellation: ") + e.what();
      s.cancellation = true;
    } catch (const std::exception& e) {
      s.error = std::string("error: ") + e.what();
    }
    return s;
  }, jobs);

  std::optional<PhasedSurd> reference;
  for (const auto& s : samples)
    if (s.value) {
      reference = s.value;
      break;
    }
  for (auto& s : samples) {
    if (s.value && reference) {
      rep.records.push_back(exact_record("armstrong", s.params, *reference, *s.value));
    } else {
      CheckRecord r;
      r.suite = "armstrong";
      r.params = s.params;
      r.expected = reference ? render(*reference) : "?";
      r.actual = "error";
      r.note = s.error;
      r.cancellation = s.cancellation;
      rep.records.push_back(r);
    }
  }
  if (reference) rep.constants.push_back({"armstrong", "F", group, *reference});
  rep.canonicalize();
  return rep;
}

VerificationReport check_armstrong(const GridSpec& g, int jobs) {
  g.validate();
  VerificationReport rep;
  for (int l = 0; l <= g.n_max - 1; ++l)
    for (int lp = 0; lp <= g.n_max - 1; ++lp) {
      if (!g.l_in_range(l) || !g.l_in_range(lp)) continue;
      for (int k = 2; k <= l + lp + 2; ++k) {
        if (!g.k_in_range(k)) continue;
        rep.merge(armstrong_in_grid(l, lp, k) ? check_n_independence(l, lp, k, {1, g.n_max}, jobs)
                                              : skipped_group(l, lp, k));
      }
    }
  rep.canonicalize();
  return rep;
}

////////////////////////////////////////////////////////////////
// <r^-4>
////////////////////////////////////////////////////////////////

VerificationReport check_rm4(const GridSpec& g, int jobs) {
  g.validate();
  std::vector<std::pair<int, int>> tasks;
  for (int n = 2; n <= g.n_max; ++n)
    for (int l = 1; l < n; ++l)
      if (g.l_in_range(l)) tasks.emplace_back(n, l);

  struct Out {
    CheckRecord closed;
    Sample ratio;
  };
  auto outs = parallel_map(tasks, [](const std::pair<int, int>& t) {
    const auto [n, l] = t;
    Out o;
    Params p{{"n", n}, {"l", l}};
    o.ratio.params = {{"l", l}, {"n", n}};
    try {
      const PhasedSurd me = hydrogenic::me_power(n, l, l, -4);
      o.closed = exact_record("rm4", p, PhasedSurd(hydrogenic::expectation_rm4(n, l)), me,
                              "closed form vs direct integration");
      const PhasedSurd tj = wigner::regularized_three_j(l, 2, l, n);
      if (tj.is_zero())
        o.ratio.error = "zero denominator: continued (l 2 l; -n 0 n) vanishes";
      else
        o.ratio.value = me * rational_power(Rational(n), 5) * PhasedSurd(exactnum::parity_sign(l - n)) / tj;
    } catch (const std::exception& e) {
      o.closed = failure("rm4", p, "?", e);
      o.ratio.error = e.what();
    }
    return o;
  }, jobs);

  VerificationReport rep;
  std::map<int, PhasedSurd> reference;  // per l, from the lowest n
  for (const auto& o : outs) {
    rep.records.push_back(o.closed);
    const int l = static_cast<int>(o.ratio.params[0].second);
    if (o.ratio.value && !reference.contains(l)) reference.emplace(l, *o.ratio.value);
  }
  for (const auto& o : outs) {
    const int l = static_cast<int>(o.ratio.params[0].second);
    if (o.ratio.value) {
      rep.records.push_back(exact_record("rm4/3j-ratio", o.ratio.params, reference.at(l), *o.ratio.value,
                                         "(-1)^(l-n) n^5 <r^-4> / (l 2 l; -n 0 n)"));
    } else {
      CheckRecord r;
      r.suite = "rm4/3j-ratio";
      r.params = o.ratio.params;
      r.expected = reference.contains(l) ? render(reference.at(l)) : "?";
      r.actual = "error";
      r.note = o.ratio.error;
      rep.records.push_back(r);
    }
  }
  for (const auto& [l, v] : reference) rep.constants.push_back({"rm4", "rm4_to_3j", {{"l", l}}, v});
  rep.canonicalize();
  return rep;
}

////////////////////////////////////////////////////////////////
// continuation oracles
////////////////////////////////////////////////////////////////

std::vector<OraclePoint> default_oracle_sample(const GridSpec& g) {
  std::vector<OraclePoint> out;
  const int cap = std::min(g.l_max < 0 ? 6 : g.l_max, 6);
  for (int lp = 0; lp <= cap; ++lp)
    for (int l = 0; l <= cap; ++l)
      for (int K = 0; K <= 4; ++K) {
        if (!wigner::triangle_ok(lp, K, l)) continue;
        for (int n = std::max(l, lp) + 1; n <= g.n_max; ++n) out.push_back({lp, K, l, n});
      }
  return out;
}

namespace {

std::string decimal_complex(std::complex<long double> v) {
  std::ostringstream os;
  os.precision(17);
  if (std::abs(v.imag()) > std::abs(v.real()))
    os << static_cast<double>(v.imag()) << "*i";
  else
    os << static_cast<double>(v.real());
  return os.str();
}

}  // namespace

VerificationReport cross_oracle_check(const std::vector<OraclePoint>& sample, int jobs) {
  auto per_point = parallel_map(sample, [](const OraclePoint& pt) {
    std::vector<CheckRecord> recs;
    Params p{{"lp", pt.lp}, {"K", pt.K}, {"l", pt.l}, {"n", pt.n}};
    PhasedSurd exact;
    try {
      exact = wigner::regularized_three_j(pt.lp, pt.K, pt.l, pt.n);
    } catch (const std::exception& e) {
      recs.push_back(failure("oracle/exact", p, "?", e));
      return recs;
    }
    if (pt.K <= 2) {
      try {
        recs.push_back(exact_record("oracle/poly", p, exact,
                                    wigner::stretched_three_j_poly(pt.lp, pt.K, pt.l, pt.n)));
      } catch (const std::exception& e) {
        recs.push_back(failure("oracle/poly", p, render(exact), e));
      }
    }
    const auto eps = wigner::default_epsilons();
    const wigner::NumericEstimate est = wigner::numeric_eps_oracle(pt.lp, pt.K, pt.l, pt.n, eps);
    CheckRecord r;
    r.suite = "oracle/numeric";
    r.params = p;
    r.expected = render(exact);
    if (!est.converged) {
      r.actual = "oracle-failure";
      r.note = est.failure;
    } else {
      const long double mag = exact.magnitude_ld();
      const std::complex<long double> target = exact.imaginary() ? std::complex<long double>(0, mag)
                                                                 : std::complex<long double>(mag, 0);
      const long double diff = std::abs(est.value - target);
      r.actual = decimal_complex(est.value);
      r.pass = diff <= kNumericTolerance;
      std::ostringstream note;
      note.precision(3);
      note << "|numeric-exact| = " << static_cast<double>(diff)
           << ", extrapolation bound = " << static_cast<double>(est.error_bound);
      r.note = note.str();
    }
    recs.push_back(r);
    return recs;
  }, jobs);
  VerificationReport rep;
  for (auto& v : per_point)
    for (auto& r : v) rep.records.push_back(std::move(r));
  rep.canonicalize();
  return rep;
}

////////////////////////////////////////////////////////////////

VerificationReport run_suite(const GridSpec& g, int jobs) {
  g.validate();
  VerificationReport rep;
  for (Suite s : g.suites) {
    switch (s) {
      case Suite::normalization: rep.merge(check_normalization(g, jobs)); break;
      case Suite::ps: rep.merge(check_ps_rule(g, jobs)); break;
      case Suite::vk: rep.merge(check_vk_identity(g, jobs)); break;
      case Suite::armstrong: rep.merge(check_armstrong(g, jobs)); break;
      case Suite::rm4: rep.merge(check_rm4(g, jobs)); break;
      case Suite::oracle: rep.merge(cross_oracle_check(default_oracle_sample(g), jobs)); break;
    }
  }
  rep.canonicalize();
  return rep;
}

}  // namespace hydrocg::verify
