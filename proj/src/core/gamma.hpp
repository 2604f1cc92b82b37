#pragma once

#include "core/types.hpp"

namespace zetalab::core {

// Gamma function on the complex plane, Lanczos approximation with
// reflection for Re(z) < 1/2. Relative accuracy is about 1e-13 for
// |z| <= 50. Throws DomainError at the poles z = 0, -1, -2, ...
Complex complex_gamma(Complex z);

// log|Gamma| + i*arg on the right half plane Re(z) >= 1/2 (principal
// value of the Lanczos form, no branch tracking through reflection).
Complex log_gamma_right(Complex z);

// Digamma for real x > 0, by upward recurrence into the asymptotic
// region x >= 12 and the de Moivre tail with Bernoulli coefficients.
double digamma_real(double x);

}  // namespace zetalab::core
