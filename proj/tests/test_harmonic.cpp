#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "core/quadrature.hpp"
#include "core/types.hpp"
#include "fields/catalogue.hpp"
#include "harmonic/afe.hpp"
#include "harmonic/fourier.hpp"
#include "harmonic/functions.hpp"
#include "harmonic/theta.hpp"

using namespace zetalab;
using namespace zetalab::harmonic;

namespace {
constexpr double kPi = 3.14159265358979323846;
// Reference decimals tabulated independently of this library.
constexpr double kGaussTailSum = 0.0432174056066540;   // sum e^{-pi m^2}
constexpr double kTheta1 = 1.08643481121330801;        // 1 + 2 * tail
constexpr double kThetaQiG2 = 0.0450851497540241;      // gaussian pairs sum

std::vector<double> grid_0_3(int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = 3.0 * i / (n - 1);
  return g;
}
}  // namespace

TEST_CASE("named handles evaluate their closed forms at zero") {
  CHECK(make_G()(0.0) == 1.0);
  CHECK(make_H2()(0.0) == doctest::Approx(-kPi).epsilon(1e-15));
  CHECK(make_K2()(0.0) == doctest::Approx(-2.0 * kPi).epsilon(1e-15));
  CHECK(make_G_n(2)(0.0) == 1.0);
  CHECK_THROWS_AS(make_G_n(0), DomainError);
}

TEST_CASE("fourier transform of the gaussian is itself") {
  core::QuadratureSpec spec;
  const auto g = make_G();
  CHECK(fourier_transform(g, 0.0, spec).real() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fourier_transform(g, 1.3, spec).real() ==
        doctest::Approx(std::exp(-kPi * 1.69)).epsilon(1e-9));
  const auto report = eigen_residual(g, +1, grid_0_3(40), spec);
  CHECK(report.max_abs < 1e-8);
}

TEST_CASE("hermite handle is a minus-one eigenvector") {
  core::QuadratureSpec spec;
  const auto h2 = make_H2();
  // F(H2)(1/2) = -pi e^{-pi/4} (pi - 1) by the closed form.
  const double expected = -kPi * std::exp(-kPi / 4.0) * (kPi - 1.0);
  CHECK(fourier_transform(h2, 0.5, spec).real() ==
        doctest::Approx(expected).epsilon(1e-9));
  const auto report = eigen_residual(h2, -1, grid_0_3(40), spec);
  CHECK(report.max_abs < 1e-6);
}

TEST_CASE("claimed minus eigenrelation for K2 deviates by 2 pi G") {
  core::QuadratureSpec spec;
  const auto k2 = make_K2();
  const auto g = make_G();
  const auto grid = grid_0_3(25);
  // F(K2) = -K2 - 2 pi G, so the claimed residual equals -2 pi G.
  double max_claimed_gap = 0.0;
  double max_oracle_gap = 0.0;
  for (double x : grid) {
    const double f = fourier_transform(k2, x, spec).real();
    max_claimed_gap =
        std::max(max_claimed_gap, std::fabs(f + k2(x)));
    max_oracle_gap = std::max(
        max_oracle_gap, std::fabs(f + k2(x) + 2.0 * kPi * g(x)));
  }
  CHECK(max_claimed_gap > 1.0);
  CHECK(max_oracle_gap < 1e-6);
}

TEST_CASE("double transform recovers the handle") {
  core::QuadratureSpec spec;
  const auto g = make_G();
  const auto h2 = make_H2();
  for (double x : {0.3, 1.1}) {
    core::QuadratureSpec tight = spec;
    tight.abs_tol = 1e-13;
    const FunctionHandle once{
        [&, x2 = x](double y) {
          return fourier_transform(g, y, tight).real();
        },
        1, Parity::even, Decay::gaussian, kPi, "F(G)", {}};
    CHECK(fourier_transform(once, x, spec).real() ==
          doctest::Approx(g(x)).epsilon(1e-6));
    const FunctionHandle h_once{
        [&](double y) { return fourier_transform(h2, y, tight).real(); },
        1, Parity::even, Decay::gaussian, kPi, "F(H2)", {}};
    CHECK(fourier_transform(h_once, x, spec).real() ==
          doctest::Approx(h2(x)).epsilon(1e-5));
  }
}

TEST_CASE("poisson residual meets the strict gaussian budget") {
  core::QuadratureSpec spec;
  CHECK(poisson_residual(make_G(), 10, spec) < 1e-12);
  // Dilated gaussian e^{-pi x^2 / 4}: both sums still agree.
  const FunctionHandle dilated{
      [](double x) { return std::exp(-kPi * x * x / 4.0); },
      1, Parity::even, Decay::gaussian, kPi / 4.0, "G_half", {}};
  CHECK(poisson_residual(dilated, 14, spec) < 1e-10);
  CHECK(poisson_residual(make_H2(), 10, spec) < 1e-10);
  const FunctionHandle slow{
      [](double x) { return 1.0 / (1.0 + x * x); },
      1, Parity::even, Decay::polynomial, 2.0, "lorentzian", {}};
  CHECK_THROWS_AS(poisson_residual(slow, 10, spec), DomainError);
}

TEST_CASE("mellin transform closed forms") {
  core::QuadratureSpec spec;
  const auto g = make_G();
  CHECK(mellin(g, Complex(1.0, 0.0), spec).real() ==
        doctest::Approx(0.5).epsilon(1e-10));
  CHECK(mellin(g, Complex(2.0, 0.0), spec).real() ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-10));
  const auto h2 = make_H2();
  CHECK(mellin(h2, Complex(2.0, 0.0), spec).real() ==
        doctest::Approx(1.5).epsilon(1e-9));
  CHECK(mellin(h2, Complex(3.0, 0.0), spec).real() ==
        doctest::Approx(1.25).epsilon(1e-9));
  CHECK_THROWS_AS(mellin(g, Complex(-1.0, 0.0), spec), DomainError);
}

TEST_CASE("signature gamma routes by archimedean type") {
  core::QuadratureSpec spec;
  const auto g2 = make_G_n(2);
  // (0,1): 2 pi int rho^{2s-1} e^{-pi rho^2} drho = pi^{1-s} Gamma(s).
  CHECK(signature_gamma(g2, 0, 1, Complex(1.0, 0.0), spec).real() ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(signature_gamma(g2, 0, 1, Complex(2.0, 0.0), spec).real() ==
        doctest::Approx(1.0 / kPi).epsilon(1e-10));
  const auto g = make_G();
  CHECK(signature_gamma(g, 1, 0, Complex(2.0, 0.0), spec).real() ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-10));
}

TEST_CASE("mellin audit of the hermite handle keeps both readings") {
  core::QuadratureSpec spec;
  const std::vector<Complex> s_grid{Complex(1.5, 0.0), Complex(3.0, 0.0)};
  const auto points = mellin_hermite_audit(s_grid, spec);
  REQUIRE(points.size() == 2);
  for (const auto& pt : points) {
    CHECK(pt.agrees_closed);
    CHECK(std::isfinite(pt.diff_closed));
  }
  // At s = 3 the transported reading is finite and disagrees.
  CHECK(std::isfinite(points[1].diff_transported));
  CHECK(!points[1].agrees_transported);
}

TEST_CASE("theta sums against tabulated decimals") {
  const auto q = fields::make_field("Q");
  const auto qi = fields::make_field("Q(i)");
  const auto g = make_G();
  CHECK(theta_k(q, g, 1.0) ==
        doctest::Approx(kGaussTailSum).epsilon(1e-13));
  const auto g2 = make_G_n(2);
  CHECK(theta_k(qi, g2, 1.0) ==
        doctest::Approx(kThetaQiG2).epsilon(1e-12));
  // Large argument: the sum collapses to its first term.
  CHECK(theta_k(q, g, 3.0) ==
        doctest::Approx(std::exp(-9.0 * kPi)).epsilon(1e-6));
  CHECK_THROWS_AS(theta_k(q, g, 0.0), DomainError);
}

TEST_CASE("lattice theta and the classical jacobi value") {
  const auto g = make_G();
  const auto m = LatticeMatrix::identity(1);
  const double radius = lattice_cutoff_radius(1, kPi);
  // Full two-sided sum including m = 0: theta(1) = 1 + 2 * 0.0432174...
  CHECK(theta_lattice(g, m, {1.0}, radius) ==
        doctest::Approx(kTheta1).epsilon(1e-13));
}

TEST_CASE("hecke theta residual across scalings") {
  core::QuadratureSpec spec;
  const auto g = make_G();
  for (double a : {0.5, 1.0, 2.0}) {
    const auto m = LatticeMatrix::scalar(1, a);
    CHECK(hecke_theta_residual(g, +1, m, {1.0}) < 1e-8);
  }
  const auto h2 = make_H2();
  const auto m1 = LatticeMatrix::scalar(1, 1.0);
  CHECK(hecke_theta_residual(h2, -1, m1, {1.0}) < 1e-8);
}

TEST_CASE("lattice matrix helpers") {
  const auto m = LatticeMatrix::scalar(2, 3.0);
  CHECK(m.det() == doctest::Approx(9.0).epsilon(1e-15));
  const auto mt = m.inverse_transpose();
  CHECK(mt.a[0][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m.min_singular() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("scalar quasi-fixed point solve") {
  const auto f_conj = [](Complex z) { return std::conj(z); };
  // v + l F(v) = v0 with v0 = 1 + i, l = 1/2: v = 2/3 + 2i.
  const auto sol = afe_solve(Complex(1.0, 1.0), Complex(0.5, 0.0), f_conj);
  CHECK(std::abs(sol.value - Complex(2.0 / 3.0, 2.0)) < 1e-14);
  CHECK(sol.residual < 1e-14);

  // Real fixed input stays fixed: v = v0 / (1 + l).
  const auto real_sol =
      afe_solve(Complex(3.0, 0.0), Complex(0.25, 0.0), f_conj);
  CHECK(std::abs(real_sol.value - Complex(2.4, 0.0)) < 1e-14);

  CHECK_THROWS_AS(
      afe_solve(Complex(1.0, 1.0), Complex(1.0 - 1e-12, 0.0), f_conj),
      DomainError);
  const auto not_involution = [](Complex z) { return 2.0 * z; };
  CHECK_THROWS_AS(
      afe_solve(Complex(1.0, 0.0), Complex(0.5, 0.0), not_involution),
      DomainError);
}

TEST_CASE("quasi-fixed points blow up near the eigenvalue") {
  const auto f_conj = [](Complex z) { return std::conj(z); };
  const auto sol =
      afe_solve(Complex(1.0, 1.0), Complex(1.0 - 1e-4, 0.0), f_conj);
  CHECK(std::abs(sol.value) >= 1e3);
  CHECK(sol.residual < 1e-9);
}

TEST_CASE("function-space solve under the exact reflection involution") {
  // v0 is a shifted gaussian, F is reflection; the solution is the
  // closed combination (v0(x) - l v0(-x)) / (1 - l^2).
  FunctionHandle v0;
  v0.evaluator = [](double x) { return std::exp(-(x - 1.0) * (x - 1.0)); };
  v0.parity = Parity::none;
  v0.decay = Decay::gaussian;
  v0.decay_rate = 1.0;
  v0.name = "shifted_gaussian";
  const auto reflect = [](const FunctionHandle& f) {
    FunctionHandle out = f;
    auto inner = f.evaluator;
    out.evaluator = [inner](double x) { return inner(-x); };
    out.name = "reflect(" + f.name + ")";
    return out;
  };
  std::vector<double> samples{0.0, 0.5, 1.0, 2.0};
  const double l = 0.5;
  const auto sol = afe_solve_function(v0, l, reflect, samples);
  CHECK(sol.max_residual < 1e-14);
  for (double x : samples) {
    const double expected =
        (v0(x) - l * v0(-x)) / (1.0 - l * l);
    CHECK(sol.value(x) == doctest::Approx(expected).epsilon(1e-13));
  }
}
