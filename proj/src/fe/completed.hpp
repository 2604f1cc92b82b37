#pragma once

#include <string>
#include <vector>

#include "core/types.hpp"
#include "fields/catalogue.hpp"

namespace zetalab::fe {

// A refined sign change of the Hardy-type function on the critical line.
struct ZeroRecord {
  double ordinate_t = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double refined_to = 0.0;
  std::string field_label;
  int sign_lo = 0;
  int sign_hi = 0;
};

// Rectangle in the s-plane with sampling steps for boundary walks.
struct CriticalGrid {
  double re_lo = 0.0;
  double re_hi = 1.0;
  double im_lo = 10.0;
  double im_hi = 30.0;
  double re_step = 0.1;
  double im_step = 0.25;

  void validate() const;
};

struct WindingReport {
  int winding = 0;
  double snap_distance = 0.0;
  double min_boundary_modulus = 0.0;
};

// Completed zeta: |d|^{s/2} / (2^{r2 s} pi^{n s / 2}) *
// Gamma(s/2)^{r1} Gamma(s)^{r2} * zeta_k(s). Poles at s = 0, 1.
Complex completed_zeta(Complex s, const fields::NumberFieldDescriptor& k);

// |zeta*_k(s) - zeta*_k(1-s)|.
double fe_residual(Complex s, const fields::NumberFieldDescriptor& k);

// lambda_k / (s (s - 1)).
Complex polar_part(Complex s, const fields::NumberFieldDescriptor& k);

// Im(s) * (2 Re(s) - 1); vanishes exactly on the critical line and the
// real axis.
double fundamental_form(Complex s);

// zeta*_k(1/2 + i t), which is real on the critical line. The imaginary
// part is written to im_diagnostic when given; a value above 1e-9 throws
// NumericError.
double hardy_value(double t, const fields::NumberFieldDescriptor& k,
                   double* im_diagnostic = nullptr);

// Grid scan of hardy_value on [t_min, t_max] with the given step; every
// sign change is refined by bisection to a bracket of width <= 1e-6.
std::vector<ZeroRecord> scan_zeros(const fields::NumberFieldDescriptor& k,
                                   double t_min, double t_max, double step);

// Winding number of zeta*_k around the rectangle boundary, computed by
// accumulating the argument of the logarithmic derivative along an
// adaptively refined boundary walk. Throws DomainError when the boundary
// passes too close to a zero and NumericError when the accumulated
// winding fails to snap to an integer.
WindingReport winding_audit(const fields::NumberFieldDescriptor& k,
                            const CriticalGrid& rectangle);

}  // namespace zetalab::fe
