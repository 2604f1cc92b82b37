#include "harmonic/fourier.hpp"

#include "core/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace zetalab::harmonic {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Truncation point T with |f| tail mass below eps for the declared
// decay class.
double tail_cut(const FunctionHandle& f, double eps) {
  double c = std::max(f.decay_rate, 1e-8);
  switch (f.decay) {
    case Decay::gaussian:
      return std::sqrt(std::log(1.0 / eps) / c) + 1.0;
    case Decay::exponential:
      return std::log(1.0 / eps) / c + 1.0;
    case Decay::compact_support:
      return f.breakpoints.empty() ? 1.0 : f.breakpoints.back();
    case Decay::polynomial:
      throw DomainError("tail_cut: polynomial decay has no certified "
                        "gaussian-style cut");
  }
  return 10.0;
}

}  // namespace

Complex fourier_transform(const FunctionHandle& f, double x,
                          const core::QuadratureSpec& spec) {
  if (f.dimension_n != 1) {
    throw DomainError("fourier_transform: direct quadrature handles n=1");
  }
  const double T = tail_cut(f, 1e-18);
  const double w = 2.0 * kPi * std::fabs(x);
  auto eval = [&](double y) { return Complex(f.evaluator(y), 0.0); };

  if (f.parity == Parity::even) {
    core::ComplexFn g = eval;
    ValueWithError r;
    if (w * T < 6.0) {
      r = core::integrate(
          [&](double y) { return eval(y) * std::cos(w * y); }, 0.0, T, spec);
    } else {
      core::QuadratureSpec cut = spec;
      cut.tail_cutoff_policy = core::TailPolicy::fixed_cut;
      cut.tail_cut = T;
      r = core::integrate_oscillatory(g, w, true, 0.0, cut);
    }
    return 2.0 * r.value;
  }
  if (f.parity == Parity::odd) {
    ValueWithError r = core::integrate(
        [&](double y) { return eval(y) * std::sin(w * y); }, 0.0, T, spec);
    double sign = x >= 0.0 ? 1.0 : -1.0;
    return Complex(0.0, 2.0 * sign) * r.value;
  }
  ValueWithError r = core::integrate(
      [&](double y) {
        double ph = 2.0 * kPi * x * y;
        return Complex(std::cos(ph), std::sin(ph)) * f.evaluator(y);
      },
      -T, T, spec);
  return r.value;
}

EigenResidualReport eigen_residual(const FunctionHandle& f, int eps,
                                   const std::vector<double>& x_grid,
                                   const core::QuadratureSpec& spec) {
  if (eps != 1 && eps != -1) {
    throw DomainError("eigen_residual: epsilon must be +1 or -1");
  }
  EigenResidualReport rep;
  rep.grid = x_grid;
  rep.residual.reserve(x_grid.size());
  for (double x : x_grid) {
    Complex Ff = fourier_transform(f, x, spec);
    double res = (Ff - static_cast<double>(eps) * f.evaluator(x)).real();
    rep.residual.push_back(res);
    rep.max_abs = std::max(rep.max_abs, std::fabs(res));
  }
  return rep;
}

double poisson_residual(const FunctionHandle& f, int cutoff,
                        const core::QuadratureSpec& spec) {
  if (f.dimension_n != 1) {
    throw DomainError("poisson_residual: n=1 handles only");
  }
  if (f.decay == Decay::polynomial) {
    throw DomainError("poisson_residual: needs gaussian or exponential "
                      "decay");
  }
  // The residual sums 2*cutoff + 1 transforms, so each one needs more
  // accuracy than the residual itself.
  core::QuadratureSpec mode_spec = spec;
  mode_spec.abs_tol = std::min(spec.abs_tol, 1e-15);
  mode_spec.rel_tol = std::min(spec.rel_tol, 1e-15);
  Complex lhs(0.0);
  double rhs = 0.0;
  for (int m = -cutoff; m <= cutoff; ++m) {
    lhs += fourier_transform(f, static_cast<double>(m), mode_spec);
    rhs += f.evaluator(static_cast<double>(m));
  }
  // Both tails are bounded by the decay model beyond the cutoff.
  double c = std::max(f.decay_rate, 1e-8);
  double M = static_cast<double>(cutoff) + 1.0;
  double tail;
  if (f.decay == Decay::gaussian) {
    tail = 4.0 * std::exp(-c * M * M);
  } else {
    tail = 4.0 * std::exp(-c * M) / (1.0 - std::exp(-c));
  }
  return std::abs(lhs - Complex(rhs, 0.0)) + tail;
}

ValueWithError mellin(const FunctionHandle& f, Complex s,
                      const core::QuadratureSpec& spec) {
  if (!(s.real() > 0.0)) {
    throw DomainError("mellin: needs Re(s) > 0");
  }
  const double T = tail_cut(f, 1e-18) + 2.0;
  auto g = [&](double x) -> Complex {
    return std::exp((s - 1.0) * std::log(x)) * f.evaluator(x);
  };
  std::vector<double> cuts{0.0};
  for (double b : f.breakpoints) {
    if (b > 0.0 && b < T) cuts.push_back(b);
  }
  cuts.push_back(T);
  std::sort(cuts.begin(), cuts.end());
  Complex total(0.0);
  double err = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    ValueWithError part = core::integrate(g, cuts[i], cuts[i + 1], spec);
    total += part.value;
    err += part.error_estimate;
  }
  // The integrand beyond T: |x^{s-1} f| <= T^{Re s - 1} |f|-tail.
  err += std::pow(T, std::max(s.real() - 1.0, 0.0)) * 1e-16;
  return {total, err};
}

ValueWithError signature_gamma(const FunctionHandle& f, int r1, int r2,
                               Complex s,
                               const core::QuadratureSpec& spec) {
  if (!(s.real() > 0.0)) {
    throw DomainError("signature_gamma: needs Re(s) > 0");
  }
  if (r1 == 1 && r2 == 0) {
    return mellin(f, s, spec);
  }
  if (r1 == 0 && r2 == 1) {
    const double T = tail_cut(f, 1e-18) + 2.0;
    auto g = [&](double rho) -> Complex {
      return std::exp((2.0 * s - 1.0) * std::log(rho)) * f.evaluator(rho);
    };
    ValueWithError r = core::integrate(g, 0.0, T, spec);
    return {2.0 * kPi * r.value, 2.0 * kPi * r.error_estimate};
  }
  throw DomainError("signature_gamma: signature must be (1,0) or (0,1)");
}

std::vector<MellinHermitePoint> mellin_hermite_audit(
    const std::vector<Complex>& s_grid, const core::QuadratureSpec& spec) {
  FunctionHandle h2 = make_H2();
  std::vector<MellinHermitePoint> out;
  for (Complex s : s_grid) {
    MellinHermitePoint p;
    p.s = s;
    ValueWithError q = mellin(h2, s, spec);
    p.quadrature = q.value;
    p.closed_form = 0.5 * (2.0 * s - 1.0) *
                    std::pow(kPi, 1.0 - s / 2.0) *
                    core::complex_gamma(s / 2.0);
    // Source-text reading moved to the x^{s-1} convention: the shifted
    // argument lands on Gamma((s-2)/2), which has poles at s = 2, 0, ...
    Complex shifted = s - 2.0;
    bool pole = shifted.imag() == 0.0 &&
                shifted.real() <= 0.0 &&
                shifted.real() == std::floor(shifted.real() / 2.0) * 2.0;
    if (pole || s == Complex(2.0, 0.0)) {
      p.transported = Complex(std::nan(""), 0.0);
    } else {
      p.transported = s * (s - 1.0) * 0.5 *
                      std::pow(kPi, -shifted / 2.0) *
                      core::complex_gamma(shifted / 2.0);
    }
    double tol = std::max(1e-7, 10.0 * q.error_estimate);
    p.diff_closed = std::abs(p.quadrature - p.closed_form);
    p.diff_transported = std::abs(p.quadrature - p.transported);
    p.agrees_closed = p.diff_closed < tol;
    p.agrees_transported = std::isfinite(p.diff_transported) &&
                           p.diff_transported < tol;
    out.push_back(p);
  }
  return out;
}

}  // namespace zetalab::harmonic
