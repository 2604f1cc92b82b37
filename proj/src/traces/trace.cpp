#include "traces/trace.hpp"

#include <cmath>

#include "core/quadrature.hpp"
#include "fe/completed.hpp"
#include "harmonic/theta.hpp"

namespace zetalab::traces {

ValueWithError trace_minus(const fields::NumberFieldDescriptor& k,
                           const Amplitude& A, Complex s,
                           const core::QuadratureSpec& spec) {
  if (k.canonical_label != "Q") {
    throw DomainError("trace_minus: only the rational field is supported");
  }
  const double u = s.real();
  const double v = s.imag();
  if (!(u > 0.5) || !(u <= 1.0) || !(v > 0.0)) {
    throw DomainError("trace_minus: needs Re(s) in (1/2, 1] and "
                      "Im(s) > 0");
  }
  auto handle = A.handle;
  // Substituting t = e^tau turns sin(v log t) into sin(v tau); the
  // remaining factor decays like the amplitude tail and is one-signed.
  auto g = [&k, handle, u](double tau) -> Complex {
    double t = std::exp(tau);
    double th = harmonic::theta_k(k, handle, t);
    return Complex((std::pow(t, u) + std::pow(t, 1.0 - u)) * t * th, 0.0);
  };
  return core::integrate_oscillatory(g, v, false, 0.0, spec);
}

CramerSolution cramer_solve(double a1, double a2, Complex s) {
  if (!(a1 > 0.0) || !(a2 >= a1)) {
    throw DomainError("cramer_solve: needs a2 >= a1 > 0");
  }
  const double u = s.real();
  const double v = s.imag();
  const double form = fe::fundamental_form(s);
  if (std::fabs(form) < 1e-14) {
    throw DomainError("cramer_solve: singular system, I(s) = 0");
  }
  CramerSolution sol;
  sol.p1 = (a2 - a1) / v;
  sol.p2 = -sol.p1;
  sol.determinant = form;
  sol.residual_1 = std::fabs(sol.p1 * v * (u - 1.0) + sol.p2 * v * u -
                             (a1 - a2));
  sol.residual_2 = std::fabs(sol.p1 * v * u + sol.p2 * v * (u - 1.0) -
                             (a2 - a1));
  return sol;
}

namespace {

// J after t = x^r, written on the tau' = log x axis with frequency r v.
ValueWithError j_integral_substituted(const harmonic::FunctionHandle& omega,
                                      Complex s, double r,
                                      const core::QuadratureSpec& spec) {
  const fields::NumberFieldDescriptor q = fields::make_field("Q");
  const double u = s.real();
  const double v = s.imag();
  auto g = [q, omega, u, r](double tau) -> Complex {
    double t = std::exp(r * tau);
    double th = harmonic::theta_k(q, omega, t);
    return Complex(
        (std::pow(t, u - 1.0) + std::pow(t, -u)) * r * t * th, 0.0);
  };
  return core::integrate_oscillatory(g, r * v, false, 0.0, spec);
}

}  // namespace

ValueWithError j_integral(const harmonic::FunctionHandle& omega, Complex s,
                          const core::QuadratureSpec& spec) {
  const double u = s.real();
  const double v = s.imag();
  if (!(u > 0.0) || !(u < 1.0) || !(v > 0.0)) {
    throw DomainError("j_integral: needs Re(s) in (0, 1) and Im(s) > 0");
  }
  return j_integral_substituted(omega, s, 1.0, spec);
}

double substitution_residual(const harmonic::FunctionHandle& omega,
                             Complex s, double r,
                             const core::QuadratureSpec& spec) {
  if (!(r > 0.0)) {
    throw DomainError("substitution_residual: needs r > 0");
  }
  ValueWithError direct = j_integral(omega, s, spec);
  ValueWithError substituted = j_integral_substituted(omega, s, r, spec);
  return std::abs(direct.value - substituted.value);
}

}  // namespace zetalab::traces
