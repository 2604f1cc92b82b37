#pragma once

#include "core/types.hpp"
#include "fields/catalogue.hpp"
#include "harmonic/functions.hpp"

#include <array>
#include <vector>

namespace zetalab::harmonic {

// Real n x n matrix acting on lattice points, n <= 3.
struct LatticeMatrix {
  int n = 1;
  std::array<std::array<double, 3>, 3> a{};

  static LatticeMatrix identity(int n);
  static LatticeMatrix scalar(int n, double c);
  double det() const;
  LatticeMatrix inverse_transpose() const;
  // Smallest singular value, used for enumeration bounds.
  double min_singular() const;
  std::array<double, 3> apply(const std::array<double, 3>& v) const;
};

// Smallest R with e^{-rate R^2} (2R+1)^n < 1e-15, the truncation rule
// for gaussian-decay lattice sums.
double lattice_cutoff_radius(int n, double rate);

// Lattice theta: sum over m in Z^n (including m = 0) of
// omega(M (m o x)) with componentwise scaling by x. Radial handles
// receive the euclidean length of the image point.
double theta_lattice(const FunctionHandle& omega, const LatticeMatrix& M,
                     const std::vector<double>& x, double cutoff_radius);

// |theta(omega_M)(x) - eps * theta(omega_{M^-T})(1/x) / (|det M| prod x_i)|,
// which at x = (1,..,1) is the classical dual-lattice identity.
double hecke_theta_residual(const FunctionHandle& omega, int eps,
                            const LatticeMatrix& M,
                            const std::vector<double>& x);

// Field theta: Q: sum_{m>=1} omega(m t); imaginary quadratic (h = 1):
// (1/w) sum over nonzero integer pairs of omega(sqrt(t * q(a,b))) with
// q the norm form. The t^{1/n} radialization is part of the contract.
double theta_k(const fields::NumberFieldDescriptor& k,
               const FunctionHandle& omega, double t);

struct FaceReport {
  Complex lhs;       // signature_gamma * dedekind_zeta
  Complex rhs;       // polar part + theta integral, scaled
  Complex bracket;   // the symmetric part of the rhs
  double abs_diff = 0.0;
};

// Both sides of the completed functional identity at s, computed by
// independent routes. eps is the Fourier eigenvalue of omega.
FaceReport face_audit(const fields::NumberFieldDescriptor& k,
                      const FunctionHandle& omega, int eps, Complex s,
                      const core::QuadratureSpec& spec);

double face_residual(const fields::NumberFieldDescriptor& k,
                     const FunctionHandle& omega, int eps, Complex s,
                     const core::QuadratureSpec& spec);

}  // namespace zetalab::harmonic
