#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "core/quadrature.hpp"
#include "core/types.hpp"
#include "fe/completed.hpp"
#include "fields/catalogue.hpp"
#include "harmonic/functions.hpp"
#include "traces/amplitude.hpp"
#include "traces/trace.hpp"
#include "traces/weil.hpp"

using namespace zetalab;
using namespace zetalab::traces;

namespace {
constexpr double kPi = 3.14159265358979323846;

harmonic::FunctionHandle exp_decay_handle() {
  harmonic::FunctionHandle f;
  f.evaluator = [](double x) { return std::exp(-x); };
  f.parity = harmonic::Parity::none;
  f.decay = harmonic::Decay::exponential;
  f.decay_rate = 1.0;
  f.name = "exp_decay";
  return f;
}
}  // namespace

TEST_CASE("pcid flags accept the classical amplitudes") {
  const auto gauss = check_pcid(harmonic::make_G());
  CHECK(gauss.all_ok());
  const auto exp_report = check_pcid(exp_decay_handle());
  CHECK(exp_report.all_ok());

  harmonic::FunctionHandle lorentz;
  lorentz.evaluator = [](double x) { return 1.0 / (1.0 + x * x); };
  lorentz.decay = harmonic::Decay::polynomial;
  lorentz.decay_rate = 2.0;
  lorentz.name = "lorentzian";
  CHECK(check_pcid(lorentz).all_ok());
}

TEST_CASE("pcid flags reject a non-integrable oscillation") {
  harmonic::FunctionHandle shifted;
  shifted.evaluator = [](double x) { return 2.0 + std::sin(x); };
  shifted.decay = harmonic::Decay::polynomial;
  shifted.decay_rate = 0.0;
  shifted.name = "shifted_sine";
  const auto report = check_pcid(shifted);
  CHECK(!report.all_ok());
  CHECK_THROWS_AS(validate_amplitude(shifted), DomainError);
}

TEST_CASE("plus sine closed form for the exponential amplitude") {
  core::QuadratureSpec spec;
  const auto amp = validate_amplitude(exp_decay_handle());
  for (double a : {0.5, 1.0, 2.0, 7.0}) {
    const auto v = plus_sine(amp, a, spec);
    CHECK(v.real() ==
          doctest::Approx(a / (1.0 + a * a)).epsilon(1e-10));
  }
}

TEST_CASE("plus sine of the gaussian at unit frequency") {
  core::QuadratureSpec spec;
  const auto amp = validate_amplitude(harmonic::make_G());
  const auto v = plus_sine(amp, 1.0, spec);
  CHECK(v.real() == doctest::Approx(0.150974269721334).epsilon(1e-7));
}

TEST_CASE("frequency-grid positivity audit passes the built-ins") {
  core::QuadratureSpec spec;
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) {
    grid.push_back(0.1 * std::pow(500.0, i / 49.0));
  }
  const auto exp_amp = validate_amplitude(exp_decay_handle());
  const auto r1 = lemma4_audit(exp_amp, grid, spec);
  CHECK(r1.pass);
  CHECK(r1.min_value > r1.max_error);
  CHECK(r1.points.size() == 50);

  const auto gauss_amp = validate_amplitude(harmonic::make_G());
  CHECK(lemma4_audit(gauss_amp, grid, spec).pass);

  harmonic::FunctionHandle lorentz;
  lorentz.evaluator = [](double x) { return 1.0 / (1.0 + x * x); };
  lorentz.parity = harmonic::Parity::even;
  lorentz.decay = harmonic::Decay::polynomial;
  lorentz.decay_rate = 2.0;
  lorentz.name = "lorentzian";
  CHECK(lemma4_audit(validate_amplitude(lorentz), grid, spec).pass);

  const auto spliced = minus_amplitude_build(0.9, 1.7);
  CHECK(lemma4_audit(spliced.amplitude, grid, spec).pass);
}

TEST_CASE("piecewise plus amplitude bookkeeping") {
  const auto built = plus_amplitude_build();
  CHECK(built.handle(2.0) == -std::exp(-4.0 * kPi));
  CHECK(built.inner_seam ==
        doctest::Approx(-5.17231862038123e-5).epsilon(1e-9));
  CHECK(built.outer_seam ==
        doctest::Approx(-std::exp(-kPi)).epsilon(1e-12));
  CHECK(built.jump ==
        doctest::Approx(0.0431621950775684).epsilon(1e-9));
  // The two series readings of the seam identity stay distinct.
  CHECK(std::fabs(built.series_alternating - built.series_plain) > 1e-3);
}

TEST_CASE("segment-glued minus amplitude validates in order") {
  const auto built = minus_amplitude_build(0.9, 1.7);
  CHECK(built.amplitude.report.all_ok());
  CHECK(built.seam_gap < 1e-12);
  CHECK(built.x1 == 0.9);
  // Out-of-order abscissas violate the precondition.
  CHECK_THROWS_AS(minus_amplitude_build(1.7, 0.9), DomainError);
  CHECK_THROWS_AS(minus_amplitude_build(0.1, 1.7), DomainError);
}

TEST_CASE("hermite handle values used by the segment construction") {
  const auto h2 = harmonic::make_H2();
  // H2(1) = pi e^{-pi} (4 pi - 1).
  CHECK(h2(1.0) ==
        doctest::Approx(kPi * std::exp(-kPi) * (4.0 * kPi - 1.0))
            .epsilon(1e-13));
  CHECK(h2(0.0) == doctest::Approx(-kPi).epsilon(1e-15));
}

TEST_CASE("rouche comparison reports ratios over the rectangle") {
  core::QuadratureSpec spec;
  fe::CriticalGrid grid;
  grid.re_lo = 0.5;
  grid.re_hi = 2.5;
  grid.im_lo = 0.0;
  grid.im_hi = 10.0;
  grid.re_step = 0.5;
  grid.im_step = 5.0;
  const auto report = rouche_compare(grid, spec);
  CHECK(report.points.size() >= 12);
  int below = 0;
  for (const auto& pt : report.points) {
    CHECK(std::isfinite(pt.ratio));
    CHECK(pt.ratio >= 0.0);
    if (pt.below_one) ++below;
  }
  CHECK(report.violations == static_cast<int>(report.points.size()) - below);
}

TEST_CASE("cramer system solves and reports the fundamental form") {
  const Complex s(0.8, 2.0);
  const auto sol = cramer_solve(1.0, 3.0, s);
  CHECK(sol.p1 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sol.p2 == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(sol.determinant ==
        doctest::Approx(fe::fundamental_form(s)).epsilon(1e-15));
  CHECK(sol.residual_1 < 1e-13);
  CHECK(sol.residual_2 < 1e-13);
  // p1 = (a2 - a1)/v and p2 = -p1 regardless of u.
  const auto wide = cramer_solve(0.5, 6.5, Complex(0.6, 3.0));
  CHECK(wide.p1 == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(wide.p2 == doctest::Approx(-2.0).epsilon(1e-13));
  CHECK_THROWS_AS(cramer_solve(1.0, 2.0, Complex(0.5, 2.0)), DomainError);
  CHECK_THROWS_AS(cramer_solve(-2.0, 4.0, Complex(0.6, 3.0)), DomainError);
}

TEST_CASE("substitution invariance of the j integral") {
  core::QuadratureSpec spec;
  const auto g = harmonic::make_G();
  const Complex s(0.7, 2.0);
  CHECK(substitution_residual(g, s, 1.0, spec) < 1e-14);
  CHECK(substitution_residual(g, s, 2.0, spec) < 1e-7);
  CHECK(substitution_residual(g, s, 0.5, spec) < 1e-7);
  CHECK_THROWS_AS(substitution_residual(g, s, 0.0, spec), DomainError);
}

TEST_CASE("trace integral stays finite over the audit window") {
  core::QuadratureSpec spec;
  const auto q = fields::make_field("Q");
  const auto amp = validate_amplitude(harmonic::make_G());
  const auto low = trace_minus(q, amp, Complex(0.75, 1.0), spec);
  CHECK(std::isfinite(low.real()));
  const auto high = trace_minus(q, amp, Complex(1.0, 30.0), spec);
  CHECK(std::isfinite(high.real()));
  CHECK_THROWS_AS(trace_minus(q, amp, Complex(0.4, 1.0), spec),
                  DomainError);
}

TEST_CASE("schwartz class closed under reflection and convolution") {
  SchwartzBarnerFunction f;
  f.coefficients = {1.0, 1.0};  // (1 + x) e^{-x^2}
  f.gaussian_K = 1.0;
  const auto r = reflect(f);
  CHECK(r.evaluate(2.0) == doctest::Approx(f.evaluate(-2.0)).epsilon(1e-15));

  core::QuadratureSpec spec;
  const auto conv = convolve(f, r);
  const double x0 = 0.7;
  const core::RealFn product = [&](double y) {
    return f.evaluate(y) * f.evaluate(y - x0);
  };
  const auto direct = core::integrate(product, -8.0, 8.0, spec);
  CHECK(conv.evaluate(x0) ==
        doctest::Approx(direct.value.real()).epsilon(1e-11));
}

TEST_CASE("transform of the convolved gaussian at the center") {
  SchwartzBarnerFunction f;
  f.coefficients = {1.0};
  f.gaussian_K = 1.0;
  const auto conv = convolve(f, reflect(f));
  // int e^{-x^2/2} dx = sqrt(2 pi), scaled by the convolution constant
  // sqrt(pi/2), gives pi.
  CHECK(sb_transform(conv, Complex(0.5, 0.0)).real() ==
        doctest::Approx(kPi).epsilon(1e-13));
  const auto up = sb_transform(conv, Complex(0.5, 2.0));
  const auto dn = sb_transform(conv, Complex(0.5, -2.0));
  CHECK(std::abs(up - std::conj(dn)) < 1e-14);
  // Oracle on the line: pi e^{-t^2 / 2}.
  CHECK(up.real() ==
        doctest::Approx(kPi * std::exp(-2.0)).epsilon(1e-12));
  CHECK(std::fabs(up.imag()) < 1e-13);
}

TEST_CASE("weil trace is positive and additive over the zero list") {
  SchwartzBarnerFunction f0;
  f0.coefficients = {1.0};
  f0.gaussian_K = 1.0;
  std::vector<fe::ZeroRecord> zeros(2);
  zeros[0].ordinate_t = 14.134725;
  zeros[1].ordinate_t = 21.022040;
  const auto both = weil_trace(f0, zeros);
  CHECK(!both.empty_list);
  CHECK(both.value.real() > 0.0);
  CHECK(std::fabs(both.value.imag()) < 1e-25);

  const auto first = weil_trace(f0, {zeros[0]});
  const auto second = weil_trace(f0, {zeros[1]});
  CHECK(both.value.real() ==
        doctest::Approx(first.value.real() + second.value.real())
            .epsilon(1e-12));
  // Per-zero oracle 2 pi e^{-t^2 / 2}.
  CHECK(first.value.real() ==
        doctest::Approx(2.0 * kPi * std::exp(-0.5 * 14.134725 * 14.134725))
            .epsilon(1e-10));

  const auto empty = weil_trace(f0, {});
  CHECK(empty.empty_list);
  CHECK(empty.value == Complex(0.0, 0.0));
}
