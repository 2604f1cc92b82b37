#pragma once

#include "core/quadrature.hpp"
#include "core/types.hpp"
#include "harmonic/functions.hpp"

#include <vector>

namespace zetalab::harmonic {

// Fourier transform F(f)(x) = int e^{2 pi i x y} f(y) dy on R (n = 1).
// Even real handles reduce to a cosine transform, odd ones to i times
// a sine transform.
Complex fourier_transform(const FunctionHandle& f, double x,
                          const core::QuadratureSpec& spec);

struct EigenResidualReport {
  double max_abs = 0.0;
  std::vector<double> grid;
  std::vector<double> residual;  // F(f)(x) - eps * f(x), real part
};

// Residual of the claimed eigenrelation F(f) = eps * f over the grid.
EigenResidualReport eigen_residual(const FunctionHandle& f, int eps,
                                   const std::vector<double>& x_grid,
                                   const core::QuadratureSpec& spec);

// |sum_{|m| <= cutoff} F(f)(m) - sum_{|m| <= cutoff} f(m)| plus the
// gaussian tail bound of both sums. n = 1 handles only.
double poisson_residual(const FunctionHandle& f, int cutoff,
                        const core::QuadratureSpec& spec);

// Mellin transform int_0^infty x^{s-1} f(x) dx, standard convention.
// Respects the handle's breakpoints. Needs Re(s) > 0.
ValueWithError mellin(const FunctionHandle& f, Complex s,
                      const core::QuadratureSpec& spec);

// Signature Gamma factor: (1,0) is mellin(f, s); (0,1) is
// 2 pi int_0^infty rho^{2s-1} f(rho) drho.
ValueWithError signature_gamma(const FunctionHandle& f, int r1, int r2,
                               Complex s, const core::QuadratureSpec& spec);

struct MellinHermitePoint {
  Complex s;
  Complex quadrature;       // standard-convention Mellin of H2 by quadrature
  Complex closed_form;      // (2s-1)/2 * pi^{1-s/2} Gamma(s/2)
  Complex transported;      // sigma(sigma-1) * M(G)(sigma-2), the source
                            // formula carried into the standard convention
  double diff_closed = 0.0;
  double diff_transported = 0.0;
  bool agrees_closed = false;
  bool agrees_transported = false;
};

// Per-point comparison of the three readings of the Mellin transform
// of H2 over the grid.
std::vector<MellinHermitePoint> mellin_hermite_audit(
    const std::vector<Complex>& s_grid, const core::QuadratureSpec& spec);

}  // namespace zetalab::harmonic
