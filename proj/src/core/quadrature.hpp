#pragma once

#include "core/types.hpp"

namespace zetalab::core {

// Integral of f over the finite interval [a, b] with the scheme selected
// by QuadratureSpec. tanh_sinh tolerates integrable endpoint
// singularities; gauss_kronrod bisects adaptively on a G7/K15 pair.
ValueWithError integrate(const ComplexFn& f, double a, double b,
                         const QuadratureSpec& spec);

// Integral of f over [a, infinity). Segments of geometrically growing
// length are added until the last contribution and the policy's tail
// bound both drop below tolerance.
ValueWithError integrate_half_line(const ComplexFn& f, double a,
                                   const QuadratureSpec& spec);

// Integral of g(x) * sin(omega x) (use_cos = false) or g(x) * cos(omega x)
// over [a, infinity) for smooth g of eventually one-signed slow decay.
// Integrates between consecutive zeros of the oscillating factor and
// feeds the alternating partial sums through an Euler transformation.
ValueWithError integrate_oscillatory(const ComplexFn& g, double omega,
                                     bool use_cos, double a,
                                     const QuadratureSpec& spec);

// Real-valued conveniences.
ValueWithError integrate(const RealFn& f, double a, double b,
                         const QuadratureSpec& spec);
ValueWithError integrate_half_line(const RealFn& f, double a,
                                   const QuadratureSpec& spec);

}  // namespace zetalab::core
