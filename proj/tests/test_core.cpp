#include <cmath>
#include <complex>

#include "doctest.h"

#include "core/gamma.hpp"
#include "core/quadrature.hpp"
#include "core/rng.hpp"
#include "core/series.hpp"
#include "core/types.hpp"

using namespace zetalab;
using namespace zetalab::core;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("finite integration hits closed forms") {
  QuadratureSpec spec;
  const RealFn square = [](double x) { return x * x; };
  const auto unit = integrate(square, 0.0, 1.0, spec);
  CHECK(unit.value.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  const RealFn bell = [](double x) { return std::exp(-x * x); };
  const auto gauss = integrate(bell, -6.0, 6.0, spec);
  CHECK(gauss.value.real() ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));

  SUBCASE("endpoint singularity handled by tanh-sinh") {
    const RealFn inv_root = [](double x) { return 1.0 / std::sqrt(x); };
    const auto root = integrate(inv_root, 0.0, 1.0, spec);
    CHECK(root.value.real() == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("half-line integration respects the tail policy") {
  QuadratureSpec spec;
  spec.tail_cutoff_policy = TailPolicy::exponential;
  spec.tail_rate = 1.0;
  const RealFn decay = [](double x) { return std::exp(-x); };
  const auto exp_tail = integrate_half_line(decay, 0.0, spec);
  CHECK(exp_tail.value.real() == doctest::Approx(1.0).epsilon(1e-12));

  QuadratureSpec gspec;
  gspec.tail_cutoff_policy = TailPolicy::gaussian;
  gspec.tail_rate = kPi;
  const RealFn narrow = [](double x) { return std::exp(-kPi * x * x); };
  const auto gauss_tail = integrate_half_line(narrow, 0.0, gspec);
  CHECK(gauss_tail.value.real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("oscillatory integration against known sine transforms") {
  QuadratureSpec spec;
  spec.tail_cutoff_policy = TailPolicy::exponential;
  spec.tail_rate = 1.0;
  // integral_0^inf e^{-x} sin(a x) dx = a / (1 + a^2)
  for (double a : {1.0, 2.0, 7.5}) {
    const auto r = integrate_oscillatory(
        [](double x) { return Complex(std::exp(-x), 0.0); }, a, false, 0.0,
        spec);
    CHECK(r.value.real() == doctest::Approx(a / (1 + a * a)).epsilon(1e-10));
  }
  // integral_0^inf e^{-x} cos(a x) dx = 1 / (1 + a^2)
  const auto c = integrate_oscillatory(
      [](double x) { return Complex(std::exp(-x), 0.0); }, 3.0, true, 0.0,
      spec);
  CHECK(c.value.real() == doctest::Approx(0.1).epsilon(1e-10));
}

TEST_CASE("complex gamma spot values and reflection") {
  const Complex half = complex_gamma(Complex(0.5, 0.0));
  CHECK(half.real() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(std::abs(half.imag()) < 1e-14);

  const Complex five = complex_gamma(Complex(5.0, 0.0));
  CHECK(five.real() == doctest::Approx(24.0).epsilon(1e-13));

  // |Gamma(1 + i t)|^2 = pi t / sinh(pi t)
  const double t = 1.7;
  const Complex g = complex_gamma(Complex(1.0, t));
  CHECK(std::norm(g) ==
        doctest::Approx(kPi * t / std::sinh(kPi * t)).epsilon(1e-12));

  // Conjugate symmetry.
  const Complex up = complex_gamma(Complex(0.3, 2.0));
  const Complex dn = complex_gamma(Complex(0.3, -2.0));
  CHECK(std::abs(up - std::conj(dn)) < 1e-13 * std::abs(up));

  CHECK_THROWS_AS(complex_gamma(Complex(0.0, 0.0)), DomainError);
  CHECK_THROWS_AS(complex_gamma(Complex(-3.0, 0.0)), DomainError);
}

TEST_CASE("digamma recurrence and special value") {
  // digamma(1) = -euler_gamma
  CHECK(digamma_real(1.0) ==
        doctest::Approx(-0.57721566490153286).epsilon(1e-13));
  // digamma(x+1) = digamma(x) + 1/x
  const double x = 0.37;
  CHECK(digamma_real(x + 1.0) - digamma_real(x) ==
        doctest::Approx(1.0 / x).epsilon(1e-12));
}

TEST_CASE("series acceleration on the three shapes") {
  // alternating: sum (-1)^{n+1} / n = log 2
  const auto alt = sum_accelerated(
      [](long n) { return (n % 2 == 1 ? 1.0 : -1.0) / n; },
      SeriesKind::alternating);
  CHECK(alt.value.real() == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // monotone with power tail: sum 1 / n^2 = pi^2 / 6
  const auto mono = sum_accelerated(
      [](long n) { return 1.0 / (static_cast<double>(n) * n); },
      SeriesKind::monotone);
  CHECK(mono.value.real() ==
        doctest::Approx(kPi * kPi / 6.0).epsilon(1e-10));

  // fast decay: theta-type sum, frozen reference value
  const auto theta = sum_accelerated(
      [](long n) { return std::exp(-kPi * n * n); }, SeriesKind::fast_decay);
  CHECK(theta.value.real() ==
        doctest::Approx(0.0432174056066540).epsilon(1e-13));

  CHECK_THROWS_AS(sum_accelerated([](long) { return 1.0; },
                                  SeriesKind::monotone),
                  NumericError);
}

TEST_CASE("counter rng is deterministic and index addressable") {
  CounterRng a(42), b(42), c(43);
  CHECK(a.bits(0) == b.bits(0));
  CHECK(a.bits(123456) == b.bits(123456));
  CHECK(a.bits(7) != c.bits(7));
  double lo = 1.0, hi = 0.0, mean = 0.0;
  for (int i = 0; i < 4096; ++i) {
    const double u = a.uniform(i);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    mean += u;
  }
  mean /= 4096;
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  CHECK(std::abs(mean - 0.5) < 0.02);
}
