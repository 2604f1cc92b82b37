#include "fe/completed.hpp"

#include <algorithm>
#include <cmath>

#include "core/gamma.hpp"
#include "lfun/lfunctions.hpp"

namespace zetalab::fe {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHardyImTol = 1e-9;
constexpr double kBisectionWidth = 1e-6;

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

void CriticalGrid::validate() const {
  if (!(re_step > 0.0) || !(im_step > 0.0)) {
    throw DomainError("CriticalGrid: steps must be positive");
  }
  if (!(re_lo < re_hi) || !(im_lo < im_hi)) {
    throw DomainError("CriticalGrid: ranges must be non-degenerate");
  }
}

Complex completed_zeta(Complex s, const fields::NumberFieldDescriptor& k) {
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) {
    throw DomainError("completed_zeta: pole at s = 0 or 1");
  }
  const double n = static_cast<double>(k.degree_n);
  Complex logfac = 0.5 * s * std::log(static_cast<double>(k.abs_discriminant))
      - static_cast<double>(k.r2) * s * std::log(2.0)
      - 0.5 * n * s * std::log(kPi);
  Complex gam(1.0, 0.0);
  for (int i = 0; i < k.r1; ++i) gam *= core::complex_gamma(0.5 * s);
  for (int i = 0; i < k.r2; ++i) gam *= core::complex_gamma(s);
  return std::exp(logfac) * gam * lfun::dedekind_zeta(s, k).value;
}

double fe_residual(Complex s, const fields::NumberFieldDescriptor& k) {
  return std::abs(completed_zeta(s, k) - completed_zeta(1.0 - s, k));
}

Complex polar_part(Complex s, const fields::NumberFieldDescriptor& k) {
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) {
    throw DomainError("polar_part: pole at s = 0 or 1");
  }
  return k.lambda() / (s * (s - 1.0));
}

double fundamental_form(Complex s) {
  return s.imag() * (2.0 * s.real() - 1.0);
}

double hardy_value(double t, const fields::NumberFieldDescriptor& k,
                   double* im_diagnostic) {
  Complex z = completed_zeta(Complex(0.5, t), k);
  if (im_diagnostic != nullptr) {
    *im_diagnostic = z.imag();
  }
  if (std::fabs(z.imag()) > kHardyImTol) {
    throw NumericError("hardy_value: imaginary part above tolerance");
  }
  return z.real();
}

std::vector<ZeroRecord> scan_zeros(const fields::NumberFieldDescriptor& k,
                                   double t_min, double t_max, double step) {
  if (!(t_min > 0.0) || !(t_min < t_max) || !(step > 0.0)) {
    throw DomainError("scan_zeros: needs 0 < t_min < t_max and step > 0");
  }
  std::vector<ZeroRecord> records;
  double prev_t = t_min;
  double prev_v = hardy_value(prev_t, k);
  for (double t = t_min + step; prev_t < t_max;
       t = std::min(t + step, t_max + 0.5 * step)) {
    double cur_t = std::min(t, t_max);
    double cur_v = hardy_value(cur_t, k);
    if (prev_v == 0.0) {
      prev_t = cur_t;
      prev_v = cur_v;
      continue;
    }
    if (sign_of(prev_v) * sign_of(cur_v) < 0) {
      double lo = prev_t, hi = cur_t;
      double flo = prev_v;
      while (hi - lo > kBisectionWidth) {
        double mid = 0.5 * (lo + hi);
        double fm = hardy_value(mid, k);
        if (fm == 0.0) {
          lo = mid - 0.25 * kBisectionWidth;
          hi = mid + 0.25 * kBisectionWidth;
          break;
        }
        if (sign_of(flo) * sign_of(fm) < 0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      ZeroRecord rec;
      rec.ordinate_t = 0.5 * (lo + hi);
      rec.t_lo = lo;
      rec.t_hi = hi;
      rec.refined_to = hi - lo;
      rec.field_label = k.canonical_label;
      rec.sign_lo = sign_of(prev_v);
      rec.sign_hi = sign_of(cur_v);
      records.push_back(std::move(rec));
    }
    if (cur_t >= t_max) break;
    prev_t = cur_t;
    prev_v = cur_v;
  }
  return records;
}

namespace {

// Phase change between consecutive boundary points, refined until each
// sub-step turns by less than pi/2.
double phase_step(const fields::NumberFieldDescriptor& k, Complex z0,
                  Complex f0, Complex z1, Complex f1, int depth,
                  double* min_mod) {
  if (std::abs(f0) == 0.0 || std::abs(f1) == 0.0 ||
      !std::isfinite(std::abs(f0)) || !std::isfinite(std::abs(f1))) {
    throw DomainError("winding_audit: boundary hits a zero or pole");
  }
  double d = std::arg(f1 / f0);
  if (std::fabs(d) < 0.5 * kPi) {
    return d;
  }
  if (depth > 40) {
    throw DomainError("winding_audit: boundary too close to a zero");
  }
  Complex zm = 0.5 * (z0 + z1);
  Complex fm = completed_zeta(zm, k);
  *min_mod = std::min(*min_mod, std::abs(fm));
  return phase_step(k, z0, f0, zm, fm, depth + 1, min_mod) +
         phase_step(k, zm, fm, z1, f1, depth + 1, min_mod);
}

}  // namespace

WindingReport winding_audit(const fields::NumberFieldDescriptor& k,
                            const CriticalGrid& rectangle) {
  rectangle.validate();
  const Complex c0(rectangle.re_lo, rectangle.im_lo);
  const Complex c1(rectangle.re_hi, rectangle.im_lo);
  const Complex c2(rectangle.re_hi, rectangle.im_hi);
  const Complex c3(rectangle.re_lo, rectangle.im_hi);

  std::vector<Complex> path;
  auto add_edge = [&](Complex a, Complex b, double step) {
    double len = std::abs(b - a);
    int m = std::max(4, static_cast<int>(std::ceil(len / step)));
    for (int i = 0; i < m; ++i) {
      path.push_back(a + (b - a) * (static_cast<double>(i) / m));
    }
  };
  add_edge(c0, c1, rectangle.re_step);
  add_edge(c1, c2, rectangle.im_step);
  add_edge(c2, c3, rectangle.re_step);
  add_edge(c3, c0, rectangle.im_step);
  path.push_back(c0);

  std::vector<Complex> vals(path.size());
  double min_mod = 1e300;
  for (size_t i = 0; i < path.size(); ++i) {
    vals[i] = completed_zeta(path[i], k);
    min_mod = std::min(min_mod, std::abs(vals[i]));
  }
  if (!(min_mod > 0.0)) {
    throw DomainError("winding_audit: boundary hits a zero or pole");
  }

  double total = 0.0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    total += phase_step(k, path[i], vals[i], path[i + 1], vals[i + 1], 0,
                        &min_mod);
  }
  double w = total / (2.0 * kPi);
  double snapped = std::round(w);
  WindingReport rep;
  rep.winding = static_cast<int>(snapped);
  rep.snap_distance = std::fabs(w - snapped);
  rep.min_boundary_modulus = min_mod;
  if (rep.snap_distance > 0.05) {
    throw NumericError("winding_audit: winding failed to snap");
  }
  return rep;
}

}  // namespace zetalab::fe
