#pragma once

// Grid-driven checks of the radial-matrix-element / coupling-coefficient
// identities.  Failures are data: every check produces a record.

#include "hydrocg/exactnum.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hydrocg::verify {

using exactnum::PhasedSurd;

enum class Suite { normalization, ps, vk, armstrong, rm4, oracle };

/// CLI spelling: norm, ps, vk, armstrong, rm4, oracle.
std::string suite_id(Suite s);
std::optional<Suite> parse_suite(const std::string& id);
std::set<Suite> all_suites();

struct GridSpec {
  int n_max{8};
  int l_max{-1};  ///< < 0 means no cap beyond l <= n-1
  int k_min{-64};
  int k_max{64};
  std::set<Suite> suites;
  /// Pinned convention constant for the vk suite; when set, every vk
  /// record is compared against it instead of the extracted anchor value.
  std::optional<PhasedSurd> vk_pin;

  void validate() const;
  bool l_in_range(int l) const { return l_max < 0 || l <= l_max; }
  bool k_in_range(int k) const { return k_min <= k && k <= k_max; }
};

using Params = std::vector<std::pair<std::string, long long>>;

struct CheckRecord {
  std::string suite;
  Params params;
  std::string expected;
  std::string actual;
  bool pass{false};
  std::string note;
  bool skipped{false};
  bool cancellation{false};
};

struct ExtractedConstant {
  std::string suite;
  std::string name;
  Params params;
  PhasedSurd value;
};

struct Summary {
  std::size_t passed{0};
  std::size_t failed{0};
  std::size_t skipped{0};
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::vector<ExtractedConstant> constants;

  Summary summary() const;
  bool ok() const { return summary().failed == 0; }
  void merge(VerificationReport other);
  /// Sort by suite id, then parameter tuple.
  void canonicalize();
  const ExtractedConstant* find_constant(const std::string& name) const;
};

inline constexpr const char* kSkippedNote = "skipped (out of stated domain)";
inline constexpr long double kNumericTolerance = 1e-8L;

VerificationReport check_normalization(const GridSpec& g, int jobs = 1);
VerificationReport check_ps_rule(const GridSpec& g, int jobs = 1);
VerificationReport check_vk_identity(const GridSpec& g, int jobs = 1);
VerificationReport check_n_independence(int l, int lp, int k, std::pair<int, int> n_range, int jobs = 1);
/// check_n_independence over every (l, lp, k) with l, lp inside the grid.
VerificationReport check_armstrong(const GridSpec& g, int jobs = 1);
VerificationReport check_rm4(const GridSpec& g, int jobs = 1);

struct OraclePoint {
  int lp{0}, K{0}, l{0}, n{0};
};
VerificationReport cross_oracle_check(const std::vector<OraclePoint>& sample, int jobs = 1);
/// Every (lp, K, l, n) with l, lp <= min(l_max, 6), K <= 4 and
/// max(l,lp) < n <= n_max.
std::vector<OraclePoint> default_oracle_sample(const GridSpec& g);

VerificationReport run_suite(const GridSpec& g, int jobs = 1);

/// One JSON object per line: suite, params, expected, actual, pass, note.
/// Extracted constants follow as records of suite "<suite>/constant".
std::string serialize(const VerificationReport& report);
CheckRecord parse_record_line(const std::string& line);

}  // namespace hydrocg::verify
