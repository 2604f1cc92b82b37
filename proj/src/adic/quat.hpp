#pragma once

#include <cstdint>
#include <functional>

#include "core/types.hpp"

namespace zetalab::adic {

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const;
};

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
Quaternion quat_conj(const Quaternion& h);
Quaternion quat_inverse(const Quaternion& h);

// Haar module Delta(h) = ||h||^4, with Delta(0) = 0.
double haar_module_quat(const Quaternion& h);

// Relative gap between the determinant of the 4x4 left-multiplication
// matrix (by Gaussian elimination) and ||h||^4.
double left_regular_det_check(const Quaternion& h);

struct McInvarianceReport {
  double side_direct = 0.0;
  double side_inverted = 0.0;
  double se_direct = 0.0;
  double se_inverted = 0.0;
  double diff = 0.0;
  double se_diff = 0.0;
  double sigma_ratio = 0.0;
  long samples = 0;
  bool within_3_sigma = false;
};

// Monte Carlo check of the inversion invariance of the multiplicative
// Haar measure dh/||h||^4 on the inversion-stable annulus union
// X(M, N) = {M <= ||h|| <= N} union {1/N <= ||h|| <= 1/M}. Uniform 4-D
// sampling over the union (shells chosen by Lebesgue volume) with
// importance weight 1/||h||^4; both sides share the sample stream, so
// the difference estimator is the primary statistic.
McInvarianceReport inversion_invariance_mc(
    const std::function<double(const Quaternion&)>& f, double M, double N,
    long samples, std::uint64_t seed);

// Haar volume of X(M, N): 4 pi^2 log(N / M).
double haar_volume_x(double M, double N);

}  // namespace zetalab::adic
