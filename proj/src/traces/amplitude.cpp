#include "traces/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "harmonic/fourier.hpp"

namespace zetalab::traces {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string point_note(const char* what, double x, double value) {
  std::ostringstream os;
  os << what << " at x = " << x << " (value " << value << ")";
  return os.str();
}

}  // namespace

PcidReport check_pcid(const harmonic::FunctionHandle& handle) {
  PcidReport rep;
  if (handle.dimension_n != 1) {
    throw DomainError("check_pcid: amplitude must be one-dimensional");
  }

  rep.positive.ok = true;
  const int grid_size = 1000;
  const double lo = std::log(1e-3), hi = std::log(50.0);
  for (int i = 0; i < grid_size; ++i) {
    double x = std::exp(lo + (hi - lo) * i / (grid_size - 1));
    double v = handle(x);
    // An exact zero deep in the tail of a decaying amplitude is
    // underflow, not a sign change.
    const bool tail_underflow = v == 0.0 && x >= 5.0;
    if (!(v > 0.0) && !tail_underflow) {
      rep.positive.ok = false;
      rep.positive.witness = x;
      rep.positive.evidence = point_note("non-positive sample", x, v);
      break;
    }
  }
  if (rep.positive.ok) {
    rep.positive.evidence = "positive on the 1000-point log grid "
                            "[1e-3, 50]";
  }

  rep.continuous.ok = true;
  const double h = 1e-7;
  double scale = 1.0 + std::fabs(handle(1.0));
  for (double b : handle.breakpoints) {
    double gap = std::fabs(handle(b + h) - handle(b - h));
    if (gap > 1e-3 * scale) {
      rep.continuous.ok = false;
      rep.continuous.witness = b;
      rep.continuous.evidence = point_note("jump across breakpoint", b, gap);
      break;
    }
  }
  if (rep.continuous.ok) {
    for (int i = 1; i <= 100; ++i) {
      double x = 0.5 * i;
      double gap = std::fabs(handle(x + h) - handle(x));
      if (gap > 1e-3 * scale) {
        rep.continuous.ok = false;
        rep.continuous.witness = x;
        rep.continuous.evidence = point_note("discontinuity", x, gap);
        break;
      }
    }
  }
  if (rep.continuous.ok) {
    rep.continuous.evidence = "no jump above 1e-3 across breakpoints or "
                              "the half-step grid";
  }

  switch (handle.decay) {
    case harmonic::Decay::gaussian:
    case harmonic::Decay::exponential:
    case harmonic::Decay::compact_support:
      rep.integrable.ok = true;
      rep.integrable.evidence = "decay class gives a summable tail bound";
      break;
    case harmonic::Decay::polynomial: {
      double f100 = handle(100.0);
      double f400 = handle(400.0);
      if (f400 == 0.0) {
        rep.integrable.ok = true;
        rep.integrable.evidence = "tail vanishes by x = 400";
      } else {
        double p = std::log(f400 / f100) / std::log(4.0);
        rep.integrable.ok = p < -1.001;
        rep.integrable.witness = 400.0;
        std::ostringstream os;
        os << "measured tail exponent " << p;
        rep.integrable.evidence = os.str();
      }
      break;
    }
  }

  rep.decreasing_on_1_inf.ok = true;
  double prev = handle(1.0);
  for (int i = 1; i <= 490; ++i) {
    double x = 1.0 + 0.1 * i;
    double cur = handle(x);
    if (cur > prev + 1e-12 * (1.0 + std::fabs(prev))) {
      rep.decreasing_on_1_inf.ok = false;
      rep.decreasing_on_1_inf.witness = x;
      rep.decreasing_on_1_inf.evidence =
          point_note("increasing step", x, cur - prev);
      break;
    }
    prev = cur;
  }
  if (rep.decreasing_on_1_inf.ok) {
    rep.decreasing_on_1_inf.evidence =
        "successive differences non-increasing on [1, 50]";
  }
  return rep;
}

Amplitude validate_amplitude(const harmonic::FunctionHandle& handle) {
  PcidReport rep = check_pcid(handle);
  const struct {
    const FlagEvidence* flag;
    const char* name;
  } flags[] = {
      {&rep.positive, "positive"},
      {&rep.continuous, "continuous"},
      {&rep.integrable, "integrable"},
      {&rep.decreasing_on_1_inf, "decreasing_on_1_inf"},
  };
  for (const auto& f : flags) {
    if (!f.flag->ok) {
      std::ostringstream os;
      os << "validate_amplitude: flag " << f.name << " fails: "
         << f.flag->evidence;
      throw DomainError(os.str());
    }
  }
  Amplitude a;
  a.handle = handle;
  a.report = std::move(rep);
  return a;
}

ValueWithError plus_sine(const Amplitude& A, double a,
                         const core::QuadratureSpec& spec) {
  if (!(a > 0.0)) {
    throw DomainError("plus_sine: frequency must be positive");
  }
  auto ev = A.handle.evaluator;
  auto g = [ev](double x) -> Complex { return Complex(ev(x), 0.0); };
  return core::integrate_oscillatory(g, a, false, 0.0, spec);
}

PositivityReport lemma4_audit(const Amplitude& A,
                              const std::vector<double>& a_grid,
                              const core::QuadratureSpec& spec) {
  if (a_grid.empty()) {
    throw DomainError("lemma4_audit: empty frequency grid");
  }
  PositivityReport rep;
  rep.min_value = 1e300;
  for (double a : a_grid) {
    ValueWithError v = plus_sine(A, a, spec);
    PositivityPoint pt;
    pt.a = a;
    pt.value = v.value.real();
    pt.error = v.error_estimate;
    rep.points.push_back(pt);
    rep.max_error = std::max(rep.max_error, pt.error);
    if (pt.value < rep.min_value) {
      rep.min_value = pt.value;
      rep.min_at = a;
    }
  }
  rep.pass = rep.min_value > rep.max_error;
  return rep;
}

PlusAmplitude plus_amplitude_build() {
  auto inner_series = [](double x) {
    double term = -std::pow(x, 4.0);
    double sum = term;
    double pix2 = kPi * kPi * x * x;
    for (int m = 1; m <= 200; ++m) {
      term *= -pix2 / m;
      sum += term;
      if (std::fabs(term) < 1e-15 && m > 12) break;
    }
    return sum;
  };

  PlusAmplitude out;
  out.inner_seam = inner_series(1.0);
  out.outer_seam = -std::exp(-kPi);
  out.jump = std::fabs(out.inner_seam - out.outer_seam);

  double term = 1.0, alt = 1.0, plain = 1.0;
  for (int m = 1; m <= 200; ++m) {
    term *= kPi * kPi / m;
    plain += term;
    alt += (m % 2 == 0 ? term : -term);
    if (term < 1e-15 && m > 12) break;
  }
  out.series_alternating = alt;
  out.series_plain = plain;

  harmonic::FunctionHandle h;
  h.dimension_n = 1;
  h.parity = harmonic::Parity::even;
  h.decay = harmonic::Decay::gaussian;
  h.decay_rate = kPi;
  h.name = "A_plus";
  h.breakpoints = {1.0};
  h.evaluator = [inner_series](double x) {
    double ax = std::fabs(x);
    if (ax < 1.0) return inner_series(ax);
    return -std::exp(-kPi * ax * ax);
  };
  out.handle = std::move(h);
  return out;
}

MinusAmplitude minus_amplitude_build(double x1, double x2) {
  const double left_edge = 0.5 / std::sqrt(kPi);
  const double right_edge = std::sqrt(2.5);
  if (!(x1 > left_edge && x1 < 1.0 && x2 > right_edge)) {
    throw DomainError("minus_amplitude_build: ordering "
                      "1/(2 sqrt(pi)) < x1 < 1 < sqrt(5/2) < x2 violated");
  }
  harmonic::FunctionHandle h2 = harmonic::make_H2();
  double y1 = h2(x1);
  double y2 = h2(x2);
  double slope = (y2 - y1) / (x2 - x1);

  harmonic::FunctionHandle h;
  h.dimension_n = 1;
  h.parity = harmonic::Parity::even;
  h.decay = harmonic::Decay::gaussian;
  h.decay_rate = kPi;
  h.name = "A_minus";
  h.breakpoints = {x2};
  auto h2_eval = h2.evaluator;
  h.evaluator = [h2_eval, x1, x2, y1, slope](double x) {
    double ax = std::fabs(x);
    if (ax >= x2) return h2_eval(ax);
    return y1 + slope * (ax - x1);
  };

  MinusAmplitude out;
  out.x1 = x1;
  out.x2 = x2;
  out.seam_gap = std::fabs((y1 + slope * (x2 - x1)) - y2);
  out.amplitude.handle = std::move(h);
  out.amplitude.report = check_pcid(out.amplitude.handle);
  return out;
}

RoucheReport rouche_compare(const fe::CriticalGrid& s_grid,
                            const core::QuadratureSpec& spec) {
  s_grid.validate();
  if (!(s_grid.re_lo > 0.0)) {
    throw DomainError("rouche_compare: grid must lie in Re(s) > 0");
  }
  PlusAmplitude ap = plus_amplitude_build();
  harmonic::FunctionHandle g = harmonic::make_G();

  RoucheReport rep;
  int n_re = static_cast<int>(
      std::floor((s_grid.re_hi - s_grid.re_lo) / s_grid.re_step + 1e-9)) + 1;
  int n_im = static_cast<int>(
      std::floor((s_grid.im_hi - s_grid.im_lo) / s_grid.im_step + 1e-9)) + 1;
  for (int i = 0; i < n_re; ++i) {
    for (int j = 0; j < n_im; ++j) {
      Complex s(s_grid.re_lo + i * s_grid.re_step,
                s_grid.im_lo + j * s_grid.im_step);
      ValueWithError num = harmonic::signature_gamma(ap.handle, 1, 0, s,
                                                     spec);
      ValueWithError den = harmonic::signature_gamma(g, 1, 0, s, spec);
      RouchePoint pt;
      pt.s = s;
      pt.ratio = std::abs(num.value) / std::abs(den.value);
      pt.below_one = pt.ratio < 1.0;
      if (!pt.below_one) ++rep.violations;
      rep.points.push_back(pt);
    }
  }
  return rep;
}

}  // namespace zetalab::traces
