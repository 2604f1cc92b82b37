#pragma once

#include "core/types.hpp"
#include "fields/catalogue.hpp"
#include "traces/amplitude.hpp"

namespace zetalab::traces {

struct CramerSolution {
  double p1 = 0.0;
  double p2 = 0.0;
  double determinant = 0.0;
  double residual_1 = 0.0;
  double residual_2 = 0.0;
};

// integral_1^inf (t^u + t^{1-u}) sin(v log t) theta_k(A)(t) dt for the
// rational field, with u = Re(s) in (1/2, 1] and v = Im(s) > 0.
ValueWithError trace_minus(const fields::NumberFieldDescriptor& k,
                           const Amplitude& A, Complex s,
                           const core::QuadratureSpec& spec);

// Solves p1 v(u-1) + p2 vu = a1 - a2, p1 vu + p2 v(u-1) = a2 - a1.
// Requires the fundamental form I(s) = v(2u-1) nonzero; the solution is
// p1 = (a2 - a1)/v, p2 = -p1.
CramerSolution cramer_solve(double a1, double a2, Complex s);

// J(s) = integral_1^inf (t^{u-1} + t^{-u}) sin(v log t) Theta(omega)(t) dt
// over the rational field, u in (0, 1), v > 0.
ValueWithError j_integral(const harmonic::FunctionHandle& omega, Complex s,
                          const core::QuadratureSpec& spec);

// |J(s) - J(s) recomputed after the substitution t = x^r|.
double substitution_residual(const harmonic::FunctionHandle& omega,
                             Complex s, double r,
                             const core::QuadratureSpec& spec);

}  // namespace zetalab::traces
