#include "hydrocg/exactnum.hpp"

#include <cctype>

namespace hydrocg::exactnum {

std::string render(const PhasedSurd& x) {
  if (x.is_zero()) return "0";
  std::string out;
  Rational c = x.coef();
  if (c < 0) {
    out += '-';
    c = -c;
  }
  out += to_string(c);
  if (x.radicand() != 1) out += "*sqrt(" + x.radicand().str() + ")";
  if (x.imaginary()) out += "*i";
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }
  bool consume(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }
  // Decimal digits without leading zeros ("0" itself allowed).
  Integer natural() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    const std::string_view digits = s_.substr(start, pos_ - start);
    if (digits.size() > 1 && digits.front() == '0') fail("leading zero");
    return Integer(std::string(digits));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

 private:
  std::string_view s_;
  std::size_t pos_{0};
};

}  // namespace

PhasedSurd parse_surd(std::string_view text) {
  Cursor cur(text);
  if (text == "0") return {};
  const bool negative = cur.consume("-");
  const Integer num = cur.natural();
  if (num == 0) cur.fail("zero must be written as plain 0");
  Integer den = 1;
  if (cur.consume("/")) {
    den = cur.natural();
    if (den <= 1) cur.fail("denominator must exceed 1");
    if (boost::multiprecision::gcd(num, den) != 1) cur.fail("fraction not reduced");
  }
  Integer radicand = 1;
  if (cur.consume("*sqrt(")) {
    radicand = cur.natural();
    if (!cur.consume(")")) cur.fail("expected ')'");
    if (radicand <= 1) cur.fail("radicand must exceed 1");
    if (squarefree_split(radicand).outer != 1) cur.fail("radicand not squarefree");
  }
  const bool imaginary = cur.consume("*i");
  if (!cur.done()) cur.fail("trailing characters");
  Rational coef(num, den);
  if (negative) coef = -coef;
  return PhasedSurd::make(coef, radicand, imaginary);
}

}  // namespace hydrocg::exactnum
