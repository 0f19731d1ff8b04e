#include "hydrocg/hydrogenic.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace hydrocg::hydrogenic;
using hydrocg::exactnum::DomainError;
using hydrocg::exactnum::parse_surd;

namespace {

double val(const PhasedSurd& x) {
  REQUIRE(x.is_real());
  return static_cast<double>(x.magnitude_ld());
}

}  // namespace

TEST_CASE("matrix element fixed values") {
  CHECK(me_power(1, 0, 0, 0) == PhasedSurd(1));
  CHECK(me_power(2, 1, 1, -4) == PhasedSurd(Rational(1, 24)));
  CHECK(me_power(1, 0, 0, 1) == PhasedSurd(Rational(3, 2)));
  CHECK(me_power(2, 0, 1, 1) == parse_surd("-3*sqrt(3)"));
  CHECK(me_power(2, 0, 0, -1) == PhasedSurd(Rational(1, 4)));
  CHECK(me_power(1, 0, 0, -2) == PhasedSurd(2));
}

TEST_CASE("matrix element domain errors") {
  CHECK_THROWS_AS(me_power(0, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(me_power(2, 2, 0, 0), DomainError);
  CHECK_THROWS_AS(me_power(2, -1, 0, 0), DomainError);
  CHECK_THROWS_AS(me_power(1, 0, 0, -3), DomainError);  // divergent at the origin
  CHECK_THROWS_AS(me_power(1, 0, 0, 0, 0), DomainError);
  CHECK_NOTHROW(me_power(2, 1, 1, -4));
}

TEST_CASE("radial function is positive near the origin") {
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l < n; ++l) {
      const RadialFunction f = radial_function({n, l, 1});
      CHECK(f.coeffs.at(0) > 0);
      CHECK(f.norm.sign() > 0);
      CHECK(f.rate == Rational(1, n));
      CHECK(f.coeffs.size() == static_cast<std::size_t>(n - l));
    }
}

TEST_CASE("property: normalization") {
  for (int n = 1; n <= 11; ++n)
    for (int l = 0; l < n; ++l) CHECK(me_power(n, l, l, 0) == PhasedSurd(1));
  for (int t = 0; t < 100; ++t) {
    const int n = testsupport::uniform(1, 9), l = testsupport::uniform(0, n - 1);
    const Rational z(testsupport::uniform(1, 12), testsupport::uniform(1, 5));
    CHECK(me_power(n, l, l, 0, z) == PhasedSurd(1));
  }
}

TEST_CASE("property: matrix elements agree with Laguerre quadrature") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      for (int lp = 0; lp < n; ++lp)
        for (int k = -(l + lp + 1); k <= 4; ++k) {
          CAPTURE(n);
          CAPTURE(l);
          CAPTURE(lp);
          CAPTURE(k);
          CHECK(testsupport::close(val(me_power(n, l, lp, k)), testsupport::radial_quadrature(n, l, n, lp, k), 1e-8,
                                   1e-10));
        }
}

TEST_CASE("property: symmetry in l and lp") {
  for (int t = 0; t < 300; ++t) {
    const int n = testsupport::uniform(1, 10);
    const int l = testsupport::uniform(0, n - 1), lp = testsupport::uniform(0, n - 1);
    const int k = testsupport::uniform(-(l + lp + 2), 8);
    CHECK(me_power(n, l, lp, k) == me_power(n, lp, l, k));
  }
}

TEST_CASE("property: Z scaling") {
  for (int t = 0; t < 300; ++t) {
    const int n = testsupport::uniform(1, 8);
    const int l = testsupport::uniform(0, n - 1), lp = testsupport::uniform(0, n - 1);
    const int k = testsupport::uniform(-(l + lp + 2), 6);
    const Rational z(testsupport::uniform(1, 9), testsupport::uniform(1, 4));
    Rational scale = 1;
    for (int i = 0; i < std::abs(k); ++i) scale *= k > 0 ? 1 / z : z;
    CHECK(me_power(n, l, lp, k, z) == PhasedSurd(scale) * me_power(n, l, lp, k));
  }
}

TEST_CASE("property: orthogonality across shells at fixed l") {
  for (int l = 0; l <= 5; ++l)
    for (int n = l + 1; n <= 6; ++n)
      for (int np = l + 1; np <= 6; ++np) {
        const PhasedSurd v = radial_integral(radial_function({n, l, 1}), radial_function({np, l, 1}), 0);
        CHECK(v == PhasedSurd(n == np ? 1 : 0));
      }
}

TEST_CASE("cross-shell integrals agree with quadrature") {
  for (int n = 1; n <= 5; ++n)
    for (int np = 1; np <= 5; ++np)
      for (int l = 0; l < n; ++l)
        for (int lp = 0; lp < np; ++lp)
          for (int k = -1; k <= 2; ++k) {
            const PhasedSurd v = radial_integral(radial_function({n, l, 1}), radial_function({np, lp, 1}), k);
            CHECK(testsupport::close(val(v), testsupport::radial_quadrature(n, l, np, lp, k), 1e-8, 1e-10));
          }
}

TEST_CASE("inverse fourth power closed form") {
  CHECK(expectation_rm4(2, 1) == Rational(1, 24));
  CHECK(expectation_rm4(3, 1) == Rational(10, 729));
  CHECK_THROWS_AS(expectation_rm4(2, 0), DomainError);
  for (int n = 2; n <= 10; ++n)
    for (int l = 1; l < n; ++l) CHECK(PhasedSurd(expectation_rm4(n, l)) == me_power(n, l, l, -4));
  const Rational z(3, 2);
  CHECK(expectation_rm4(4, 2, z) == expectation_rm4(4, 2) * z * z * z * z);
}

TEST_CASE("Pasternack-Sternheimer zeros") {
  CHECK(ps_zero_predicted(2, 0, 2));
  CHECK(ps_zero_predicted(2, 0, 3));
  CHECK_FALSE(ps_zero_predicted(2, 0, 4));
  CHECK_THROWS_AS(ps_zero_predicted(2, 0, 1), DomainError);
  for (int n = 1; n <= 10; ++n)
    for (int l = 0; l < n; ++l)
      for (int lp = 0; lp < n; ++lp)
        for (int k = 2; k <= std::abs(l - lp) + 1; ++k) {
          if (l + lp + 2 - k < 0) continue;
          CHECK(me_power(n, l, lp, -k).is_zero());
        }
}

TEST_CASE("Kramers recursion") {
  CHECK(kramers_check(1, 0, 1));
  CHECK(kramers_check(2, 1, 2));
  CHECK(kramers_check(3, 2, 0));
  CHECK_THROWS_AS(kramers_check(3, 1, -3), DomainError);
  for (int n = 1; n <= 10; ++n)
    for (int l = 0; l < n; ++l)
      for (int k = -2 * l; k <= 6; ++k) CHECK(kramers_check(n, l, k));
}
