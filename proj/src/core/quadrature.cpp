#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zetalab::core {

namespace {

constexpr double kPi = 3.14159265358979323846;

double magnitude(const Complex& v) { return std::abs(v); }

// ----- tanh-sinh ------------------------------------------------------

// Node of the double-exponential map t -> tanh((pi/2) sinh t) on [-1,1].
// delta = 1 - tanh(u) is kept instead of the abscissa so that points
// next to the interval ends stay resolved: the evaluation points are
// a + r*delta and b - r*delta.
struct DeNode {
  double delta;  // distance of |x| to 1, in (0, 1]
  double w;      // weight
};

// Nodes of the step-h trapezoid rule on t > 0. With fill_in_only the
// nodes sit at the odd multiples t = h, 3h, 5h, ... so a halved step
// reuses every previous evaluation.
void de_nodes(double h, bool fill_in_only, std::vector<DeNode>& out) {
  out.clear();
  const double step = fill_in_only ? 2.0 * h : h;
  for (double t = h;; t += step) {
    const double u = 0.5 * kPi * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    const double sech = 2.0 * std::sqrt(e) / (1.0 + e);
    const double w = 0.5 * kPi * std::cosh(t) * sech * sech;
    if (w < 1e-300 || e == 0.0) break;
    out.push_back({2.0 * e / (1.0 + e), w});
  }
}

ValueWithError tanh_sinh(const ComplexFn& f, double a, double b,
                         const QuadratureSpec& spec) {
  const double r = 0.5 * (b - a);
  auto eval_pair = [&](double delta) -> Complex {
    double lo = a + r * delta;
    double hi = b - r * delta;
    if (lo <= a) lo = std::nextafter(a, b);
    if (hi >= b) hi = std::nextafter(b, a);
    return f(lo) + f(hi);
  };

  std::vector<DeNode> nodes;
  double h = 1.0;
  de_nodes(h, false, nodes);
  // The t = 0 node: weight pi/2, abscissa at the midpoint.
  Complex sum = 0.5 * kPi * f(a + r) + [&] {
    Complex s(0.0);
    for (const auto& n : nodes) s += n.w * eval_pair(n.delta);
    return s;
  }();
  Complex integral = sum * h * r;
  double err = magnitude(integral);
  Complex prev = integral;

  const int levels = std::max(3, spec.max_refinements);
  for (int lev = 1; lev <= levels; ++lev) {
    h *= 0.5;
    de_nodes(h, true, nodes);
    Complex mid(0.0);
    for (const auto& n : nodes) mid += n.w * eval_pair(n.delta);
    integral = 0.5 * prev + mid * h * r;
    const double diff = magnitude(integral - prev);
    const double scale = std::max(magnitude(integral), 1e-300);
    err = std::min(err, diff);
    prev = integral;
    if (lev >= 2 &&
        (diff <= spec.abs_tol || diff <= spec.rel_tol * scale)) {
      err = diff;
      break;
    }
  }
  return {integral, std::max(err, 1e-16 * magnitude(integral))};
}

// ----- Gauss-Kronrod G7/K15 -------------------------------------------

constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  Complex k;
  double err;
};

Panel gk_panel(const ComplexFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  Complex kall(0.0), gall(0.0);
  for (int i = 0; i < 8; ++i) {
    Complex fv;
    if (i == 7) {
      fv = f(c);
      kall += kKronrodW[i] * fv;
      gall += kGaussW[3] * fv;
    } else {
      Complex f1 = f(c - r * kKronrodX[i]);
      Complex f2 = f(c + r * kKronrodX[i]);
      kall += kKronrodW[i] * (f1 + f2);
      if (i % 2 == 1) gall += kGaussW[i / 2] * (f1 + f2);
    }
  }
  Complex k = kall * r;
  Complex g = gall * r;
  double diff = magnitude(k - g);
  double err = std::min(diff, std::pow(200.0 * diff, 1.5));
  return {a, b, k, err};
}

ValueWithError gauss_kronrod(const ComplexFn& f, double a, double b,
                             const QuadratureSpec& spec) {
  std::vector<Panel> panels{gk_panel(f, a, b)};
  const size_t max_panels =
      static_cast<size_t>(64) << std::min(spec.max_refinements, 8);
  for (;;) {
    Complex total(0.0);
    double err = 0.0;
    size_t worst = 0;
    double worst_err = -1.0;
    for (size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].k;
      err += panels[i].err;
      if (panels[i].err > worst_err) {
        worst_err = panels[i].err;
        worst = i;
      }
    }
    double scale = std::max(magnitude(total), 1e-300);
    if (err <= spec.abs_tol || err <= spec.rel_tol * scale ||
        panels.size() >= max_panels || worst_err <= 0.0) {
      return {total, err};
    }
    Panel p = panels[worst];
    double m = 0.5 * (p.a + p.b);
    panels[worst] = gk_panel(f, p.a, m);
    panels.push_back(gk_panel(f, m, p.b));
  }
}

}  // namespace

ValueWithError integrate(const ComplexFn& f, double a, double b,
                         const QuadratureSpec& spec) {
  if (!(a < b)) {
    if (a == b) return {Complex(0.0), 0.0};
    throw DomainError("integrate: needs a <= b");
  }
  if (spec.scheme == Scheme::gauss_kronrod) {
    return gauss_kronrod(f, a, b, spec);
  }
  return tanh_sinh(f, a, b, spec);
}

ValueWithError integrate_half_line(const ComplexFn& f, double a,
                                   const QuadratureSpec& spec) {
  // Fixed cut: one finite integral, tail charged as zero by contract.
  if (spec.tail_cutoff_policy == TailPolicy::fixed_cut) {
    return integrate(f, a, spec.tail_cut, spec);
  }
  double L = 1.0;
  double x0 = a;
  Complex total(0.0);
  double err = 0.0;
  double last_mag = 0.0;
  double prev_mag = 0.0;
  for (int seg = 0; seg < 48; ++seg) {
    ValueWithError part = integrate(f, x0, x0 + L, spec);
    total += part.value;
    err += part.error_estimate;
    prev_mag = last_mag;
    last_mag = magnitude(part.value);
    x0 += L;
    if (seg > 0) L *= 2.0;
    double scale = std::max(magnitude(total), 1e-300);
    double tol = std::max(spec.abs_tol, spec.rel_tol * scale);
    if (last_mag < 0.1 * tol && seg >= 2) {
      // Geometric tail bound from the observed segment decay ratio.
      double ratio = prev_mag > 0.0 ? last_mag / prev_mag : 0.0;
      ratio = std::min(ratio, 0.9);
      err += last_mag * ratio / (1.0 - ratio);
      break;
    }
  }
  return {total, err};
}

ValueWithError integrate_oscillatory(const ComplexFn& g, double omega,
                                     bool use_cos, double a,
                                     const QuadratureSpec& spec) {
  if (!(omega > 0.0)) {
    throw DomainError("integrate_oscillatory: needs omega > 0");
  }
  auto f = [&](double x) -> Complex {
    double osc = use_cos ? std::cos(omega * x) : std::sin(omega * x);
    return g(x) * osc;
  };
  // Zeros of the oscillating factor at (k + offset) * pi / omega.
  double offset = use_cos ? 0.5 : 0.0;
  double first = (std::floor(a * omega / kPi - offset) + 1.0 + offset) *
                 kPi / omega;
  if (first <= a) first += kPi / omega;

  QuadratureSpec inner = spec;
  inner.scheme = Scheme::gauss_kronrod;
  inner.abs_tol = std::max(spec.abs_tol * 1e-2, 1e-15);

  std::vector<Complex> partial;
  Complex head(0.0);
  double err_quad = 0.0;
  if (first > a) {
    ValueWithError head_part = integrate(f, a, first, inner);
    head = head_part.value;
    err_quad += head_part.error_estimate;
  }
  double x0 = first;
  Complex run(0.0);
  const int max_segments = 400;
  Complex best(0.0);
  double best_err = 1e300;
  for (int k = 0; k < max_segments; ++k) {
    double x1 = x0 + kPi / omega;
    ValueWithError seg = integrate(f, x0, x1, inner);
    err_quad += seg.error_estimate;
    run += seg.value;
    partial.push_back(run);
    x0 = x1;
    double seg_mag = magnitude(seg.value);
    double scale = std::max(magnitude(head + run), 1.0e-300);
    double tol = std::max(spec.abs_tol, spec.rel_tol * scale);
    if (seg_mag < 0.1 * tol && k >= 3) {
      best = run;
      best_err = seg_mag;
      break;
    }
    // Euler transformation of the alternating partial-sum sequence.
    if (partial.size() >= 6) {
      size_t m = std::min<size_t>(partial.size(), 16);
      std::vector<Complex> row(partial.end() - m, partial.end());
      Complex prev_est = row.back();
      double prev_step = 1e300;
      while (row.size() > 1) {
        for (size_t i = 0; i + 1 < row.size(); ++i) {
          row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop_back();
        double step = magnitude(row.back() - prev_est);
        prev_est = row.back();
        if (step > prev_step) break;
        prev_step = step;
      }
      double est_err = prev_step + 1e-16 * magnitude(prev_est);
      if (est_err < best_err) {
        best_err = est_err;
        best = prev_est;
      }
      if (best_err < tol) break;
    }
  }
  return {head + best, best_err + err_quad};
}

ValueWithError integrate(const RealFn& f, double a, double b,
                         const QuadratureSpec& spec) {
  return integrate([&](double x) { return Complex(f(x), 0.0); }, a, b, spec);
}

ValueWithError integrate_half_line(const RealFn& f, double a,
                                   const QuadratureSpec& spec) {
  return integrate_half_line(
      [&](double x) { return Complex(f(x), 0.0); }, a, spec);
}

}  // namespace zetalab::core
