#pragma once

#include "hydrocg/exactnum.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hydrocg::cli {

enum class OutputMode { exact, decimal, json };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int domain = 3;
inline constexpr int cancellation = 4;
inline constexpr int io = 5;
}  // namespace exit_code

/// 15 significant digits, round-half-even, computed from the exact value
/// (never contradicts the exact rendering).
std::string render_decimal(const exactnum::PhasedSurd& x);

/// Parses "a" or "a/2" into a doubled angular momentum or projection.
int parse_doubled(const std::string& text);

/// Entry point shared by the executable and the tests.  args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hydrocg::cli
