#pragma once

#include <string>
#include <vector>

#include "core/types.hpp"
#include "fe/completed.hpp"
#include "harmonic/functions.hpp"

namespace zetalab::traces {

struct FlagEvidence {
  bool ok = false;
  std::string evidence;
  double witness = 0.0;
};

struct PcidReport {
  FlagEvidence positive;
  FlagEvidence continuous;
  FlagEvidence integrable;
  FlagEvidence decreasing_on_1_inf;

  bool all_ok() const {
    return positive.ok && continuous.ok && integrable.ok &&
           decreasing_on_1_inf.ok;
  }
};

struct Amplitude {
  harmonic::FunctionHandle handle;
  PcidReport report;
};

// Sampling evidence for the four amplitude flags: positivity on a
// 1000-point log grid, continuity across declared breakpoints,
// integrability from the decay class and measured tail, monotone
// decrease on [1, 50] by successive differences.
PcidReport check_pcid(const harmonic::FunctionHandle& handle);

// Returns the amplitude when all flags hold; otherwise throws
// DomainError naming the first failed flag and its witness point.
Amplitude validate_amplitude(const harmonic::FunctionHandle& handle);

// S_plus(A)(a) = integral_0^inf A(x) sin(a x) dx.
ValueWithError plus_sine(const Amplitude& A, double a,
                         const core::QuadratureSpec& spec);

struct PositivityPoint {
  double a = 0.0;
  double value = 0.0;
  double error = 0.0;
};

struct PositivityReport {
  double min_value = 0.0;
  double min_at = 0.0;
  double max_error = 0.0;
  bool pass = false;
  std::vector<PositivityPoint> points;
};

// Minimum of S_plus(A) over the frequency grid; PASS iff the minimum
// clears the worst quadrature error bound.
PositivityReport lemma4_audit(const Amplitude& A,
                              const std::vector<double>& a_grid,
                              const core::QuadratureSpec& spec);

// Piecewise handle equal to -e^{-pi x^2} for |x| >= 1 and to the inner
// power-series branch for |x| < 1, with the measured seam jump and the
// two series sums of the claimed continuity identity.
struct PlusAmplitude {
  harmonic::FunctionHandle handle;
  double inner_seam = 0.0;
  double outer_seam = 0.0;
  double jump = 0.0;
  double series_alternating = 0.0;
  double series_plain = 0.0;
};

PlusAmplitude plus_amplitude_build();

// Line segment through (x1, H2(x1)), (x2, H2(x2)) for x <= x2, glued to
// H2 beyond x2. Requires 1/(2 sqrt(pi)) < x1 < 1 < sqrt(5/2) < x2.
struct MinusAmplitude {
  Amplitude amplitude;
  double seam_gap = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
};

MinusAmplitude minus_amplitude_build(double x1, double x2);

struct RouchePoint {
  Complex s;
  double ratio = 0.0;
  bool below_one = false;
};

struct RoucheReport {
  std::vector<RouchePoint> points;
  int violations = 0;
};

// Pointwise |Gamma_r(A_plus)| / |Gamma_r(G)| over the rectangle grid,
// with the signature (1, 0).
RoucheReport rouche_compare(const fe::CriticalGrid& s_grid,
                            const core::QuadratureSpec& spec);

}  // namespace zetalab::traces
