#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "core/types.hpp"
#include "fe/completed.hpp"
#include "fields/catalogue.hpp"

using namespace zetalab;
using namespace zetalab::fe;

namespace {
constexpr double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("completed zeta closed values for the rational field") {
  const auto q = fields::make_field("Q");
  // pi^{-1} Gamma(1) zeta(2) = zeta(2)/pi gives pi/6 for s = 2.
  CHECK(completed_zeta(Complex(2.0, 0.0), q).real() ==
        doctest::Approx(kPi / 6.0).epsilon(1e-12));
  // At s = 1/2 the completion is real and negative.
  const Complex center = completed_zeta(Complex(0.5, 0.0), q);
  CHECK(center.imag() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(center.real() < 0.0);
}

TEST_CASE("completed zeta for the gaussian field") {
  const auto qi = fields::make_field("Q(i)");
  // 4^{s/2} (2 pi)^{-s} Gamma(s) zeta_Qi(s) at s = 2:
  // 4 / (4 pi^2) * 1.50670... = 0.0381648...
  const double expected = 1.50670300992298503 / (kPi * kPi);
  CHECK(completed_zeta(Complex(2.0, 0.0), qi).real() ==
        doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("functional equation residual is flat across the strip") {
  const auto q = fields::make_field("Q");
  const auto qi = fields::make_field("Q(i)");
  for (double sigma : {0.15, 0.35, 0.5, 0.75, 0.95}) {
    for (double t : {0.7, 3.3, 9.1}) {
      CHECK(fe_residual(Complex(sigma, t), q) < 1e-8);
      CHECK(fe_residual(Complex(sigma, t), qi) < 1e-8);
    }
  }
}

TEST_CASE("functional equation holds for the catalogue quadratics") {
  for (const char* label : {"Q(sqrt(-3))", "Q(sqrt(5))", "Q(sqrt(-7))"}) {
    const auto k = fields::make_field(label);
    CHECK(fe_residual(Complex(0.3, 2.0), k) < 1e-8);
    CHECK(fe_residual(Complex(0.8, 5.5), k) < 1e-8);
  }
}

TEST_CASE("polar part evaluations") {
  const auto q = fields::make_field("Q");
  const auto qi = fields::make_field("Q(i)");
  CHECK(polar_part(Complex(2.0, 0.0), q).real() ==
        doctest::Approx(0.5).epsilon(1e-15));
  // lambda_Qi = 1/4 and s(s-1) = 2 at s = -1.
  CHECK(polar_part(Complex(-1.0, 0.0), qi).real() ==
        doctest::Approx(0.125).epsilon(1e-15));
  // On the critical line the polar part is real.
  const Complex on_line = polar_part(Complex(0.5, 11.0), q);
  CHECK(on_line.imag() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(polar_part(Complex(1.0, 0.0), q), DomainError);
}

TEST_CASE("fundamental form vanishes exactly on the critical line") {
  CHECK(fundamental_form(Complex(0.5, 7.25)) == 0.0);
  CHECK(fundamental_form(Complex(0.5, -3.0)) == 0.0);
  CHECK(fundamental_form(Complex(3.0, 2.0)) ==
        doctest::Approx(10.0).epsilon(1e-15));
  CHECK(fundamental_form(Complex(0.75, 4.0)) ==
        doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("hardy value is real on the line and flags drift") {
  const auto q = fields::make_field("Q");
  double im = 1.0;
  const double v = hardy_value(14.0, q, &im);
  CHECK(std::fabs(im) < 1e-9);
  CHECK(std::isfinite(v));
  // Sign change across the first ordinate.
  CHECK(hardy_value(14.1, q) * hardy_value(14.2, q) < 0.0);
}

TEST_CASE("zero scan finds the three classical ordinates") {
  const auto q = fields::make_field("Q");
  const auto zeros = scan_zeros(q, 10.0, 30.0, 0.05);
  REQUIRE(zeros.size() == 3);
  const double expected[3] = {14.134725, 21.022040, 25.010858};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::fabs(zeros[i].ordinate_t - expected[i]) < 1e-3);
    CHECK(zeros[i].refined_to <= 1e-6);
    CHECK(zeros[i].t_lo <= zeros[i].ordinate_t);
    CHECK(zeros[i].ordinate_t <= zeros[i].t_hi);
    CHECK(zeros[i].sign_lo * zeros[i].sign_hi == -1);
  }
}

TEST_CASE("gaussian field scan finds its first ordinate") {
  const auto qi = fields::make_field("Q(i)");
  const auto zeros = scan_zeros(qi, 5.0, 8.0, 0.05);
  REQUIRE(zeros.size() == 1);
  CHECK(std::fabs(zeros[0].ordinate_t - 6.0209489) < 1e-3);
}

TEST_CASE("empty scan range returns no records") {
  const auto q = fields::make_field("Q");
  CHECK(scan_zeros(q, 2.0, 5.0, 0.05).empty());
}

TEST_CASE("winding count matches the scan count") {
  const auto q = fields::make_field("Q");
  CriticalGrid box;
  box.re_lo = 0.0;
  box.re_hi = 1.0;
  box.im_lo = 10.0;
  box.im_hi = 30.0;
  box.re_step = 0.05;
  box.im_step = 0.1;
  const auto report = winding_audit(q, box);
  CHECK(report.winding == 3);
  CHECK(report.snap_distance < 1e-3);
  CHECK(report.min_boundary_modulus > 0.0);
}

TEST_CASE("winding audit rejects degenerate rectangles") {
  const auto q = fields::make_field("Q");
  CriticalGrid bad;
  bad.im_lo = 30.0;
  bad.im_hi = 10.0;
  CHECK_THROWS_AS(winding_audit(q, bad), DomainError);
}
