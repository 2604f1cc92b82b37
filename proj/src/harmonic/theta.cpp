#include "harmonic/theta.hpp"

#include "harmonic/fourier.hpp"
#include "lfun/lfunctions.hpp"

#include <algorithm>
#include <cmath>

namespace zetalab::harmonic {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

LatticeMatrix LatticeMatrix::identity(int n) {
  LatticeMatrix m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.a[i][i] = 1.0;
  return m;
}

LatticeMatrix LatticeMatrix::scalar(int n, double c) {
  LatticeMatrix m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.a[i][i] = c;
  return m;
}

double LatticeMatrix::det() const {
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

LatticeMatrix LatticeMatrix::inverse_transpose() const {
  double d = det();
  if (d == 0.0) {
    throw DomainError("LatticeMatrix: singular matrix");
  }
  LatticeMatrix r;
  r.n = n;
  if (n == 1) {
    r.a[0][0] = 1.0 / d;
    return r;
  }
  if (n == 2) {
    // inverse = (1/d) [[a11, -a01], [-a10, a00]]; transpose that.
    r.a[0][0] = a[1][1] / d;
    r.a[1][0] = -a[0][1] / d;
    r.a[0][1] = -a[1][0] / d;
    r.a[1][1] = a[0][0] / d;
    return r;
  }
  // Cofactor matrix over det gives the inverse transpose directly.
  auto cof = [&](int i, int j) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.a[i][j] = cof(i, j) / d;
    }
  }
  return r;
}

double LatticeMatrix::min_singular() const {
  // Power iteration on (A^T A)^{-1} is overkill at these sizes; use the
  // closed form for n <= 2 and a coarse lower bound for n = 3.
  if (n == 1) return std::fabs(a[0][0]);
  if (n == 2) {
    double g00 = a[0][0] * a[0][0] + a[1][0] * a[1][0];
    double g11 = a[0][1] * a[0][1] + a[1][1] * a[1][1];
    double g01 = a[0][0] * a[0][1] + a[1][0] * a[1][1];
    double tr = g00 + g11;
    double dd = std::sqrt(std::max(0.0, (g00 - g11) * (g00 - g11) +
                                            4.0 * g01 * g01));
    return std::sqrt(std::max(0.0, 0.5 * (tr - dd)));
  }
  double dabs = std::fabs(det());
  double maxcol = 0.0;
  for (int j = 0; j < 3; ++j) {
    double c = 0.0;
    for (int i = 0; i < 3; ++i) c += a[i][j] * a[i][j];
    maxcol = std::max(maxcol, std::sqrt(c));
  }
  return dabs / (maxcol * maxcol);
}

std::array<double, 3> LatticeMatrix::apply(
    const std::array<double, 3>& v) const {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

double lattice_cutoff_radius(int n, double rate) {
  double R = 1.0;
  while (std::exp(-rate * R * R) * std::pow(2.0 * R + 1.0, n) >= 1e-15) {
    R += 0.25;
    if (R > 100.0) break;
  }
  return R;
}

double theta_lattice(const FunctionHandle& omega, const LatticeMatrix& M,
                     const std::vector<double>& x, double cutoff_radius) {
  if (omega.decay != Decay::gaussian) {
    throw DomainError("theta_lattice: gaussian decay required");
  }
  const int n = M.n;
  if (static_cast<int>(x.size()) != n) {
    throw DomainError("theta_lattice: x has wrong dimension");
  }
  double smin = M.min_singular();
  if (!(smin > 0.0)) {
    throw DomainError("theta_lattice: singular matrix");
  }
  // |M (m o x)| >= smin * min|x_i| * |m|, so a box covers the ball.
  double xmin = 1e300;
  for (double xi : x) xmin = std::min(xmin, std::fabs(xi));
  if (xmin == 0.0) {
    throw DomainError("theta_lattice: zero scaling component");
  }
  long B = static_cast<long>(std::ceil(cutoff_radius / (smin * xmin))) + 1;
  if (std::pow(2.0 * B + 1.0, n) > 5e8) {
    throw DomainError("theta_lattice: enumeration box too large");
  }

  double total = 0.0;
  std::array<double, 3> v{0.0, 0.0, 0.0};
  if (n == 1) {
    for (long m = -B; m <= B; ++m) {
      v[0] = m * x[0];
      auto y = M.apply(v);
      total += omega.evaluator(y[0]);
    }
    return total;
  }
  for (long m0 = -B; m0 <= B; ++m0) {
    for (long m1 = -B; m1 <= B; ++m1) {
      if (n == 2) {
        v = {m0 * x[0], m1 * x[1], 0.0};
        auto y = M.apply(v);
        total += omega.evaluator(std::hypot(y[0], y[1]));
      } else {
        for (long m2 = -B; m2 <= B; ++m2) {
          v = {m0 * x[0], m1 * x[1], m2 * x[2]};
          auto y = M.apply(v);
          total += omega.evaluator(
              std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]));
        }
      }
    }
  }
  return total;
}

double hecke_theta_residual(const FunctionHandle& omega, int eps,
                            const LatticeMatrix& M,
                            const std::vector<double>& x) {
  if (eps != 1 && eps != -1) {
    throw DomainError("hecke_theta_residual: eps must be +1 or -1");
  }
  double R = lattice_cutoff_radius(M.n, omega.decay_rate);
  double lhs = theta_lattice(omega, M, x, R);
  LatticeMatrix Mi = M.inverse_transpose();
  std::vector<double> xi(x.size());
  double xprod = 1.0;
  for (size_t i = 0; i < x.size(); ++i) {
    xi[i] = 1.0 / x[i];
    xprod *= std::fabs(x[i]);
  }
  double rhs = eps * theta_lattice(omega, Mi, xi, R) /
               (std::fabs(M.det()) * xprod);
  return std::fabs(lhs - rhs);
}

double theta_k(const fields::NumberFieldDescriptor& k,
               const FunctionHandle& omega, double t) {
  if (!(t > 0.0)) {
    throw DomainError("theta_k: needs t > 0");
  }
  const double c = omega.decay_rate;
  if (k.canonical_label == "Q") {
    if (omega.decay != Decay::gaussian &&
        omega.decay != Decay::exponential) {
      throw DomainError("theta_k: gaussian or exponential decay required");
    }
    double total = 0.0;
    // omega(m t) < e^{-c (mt)^2}-scale beyond the cutoff radius, or
    // e^{-c m t}-scale in the exponential case.
    double R = omega.decay == Decay::gaussian ? std::sqrt(45.0 / c)
                                              : 45.0 / c;
    long M = std::max<long>(2, static_cast<long>(std::ceil(R / t)) + 1);
    for (long m = M; m >= 1; --m) {
      total += omega.evaluator(static_cast<double>(m) * t);
    }
    return total;
  }
  if (omega.decay != Decay::gaussian) {
    throw DomainError("theta_k: gaussian decay required");
  }
  bool gauss = k.canonical_label == "Q(i)";
  bool eisen = k.canonical_label == "Q(sqrt(-3))";
  if (!gauss && !eisen) {
    throw DomainError("theta_k: supported fields are Q, Q(i), "
                      "Q(sqrt(-3))");
  }
  // Norm forms a^2 + b^2 and a^2 + ab + b^2; terms omega(sqrt(t q)).
  double qmax = 45.0 / (c * t);
  long B = static_cast<long>(std::ceil(2.0 * std::sqrt(
               std::max(qmax, 1.0)))) + 1;
  double total = 0.0;
  for (long a = -B; a <= B; ++a) {
    for (long b = -B; b <= B; ++b) {
      if (a == 0 && b == 0) continue;
      double q = gauss ? static_cast<double>(a * a + b * b)
                       : static_cast<double>(a * a + a * b + b * b);
      if (q > qmax + 1.0) continue;
      total += omega.evaluator(std::sqrt(t * q));
    }
  }
  return total / k.roots_of_unity_w;
}

FaceReport face_audit(const fields::NumberFieldDescriptor& k,
                      const FunctionHandle& omega, int eps, Complex s,
                      const core::QuadratureSpec& spec) {
  if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) {
    throw DomainError("face_audit: polar point");
  }
  if (!(s.real() > 0.0)) {
    throw DomainError("face_audit: needs Re(s) > 0");
  }
  const bool rational = k.canonical_label == "Q";
  if (!rational && k.canonical_label != "Q(i)" &&
      k.canonical_label != "Q(sqrt(-3))") {
    throw DomainError("face_audit: supported fields are Q, Q(i), "
                      "Q(sqrt(-3))");
  }

  int r1 = rational ? 1 : 0;
  int r2 = rational ? 0 : 1;
  ValueWithError gam = signature_gamma(omega, r1, r2, s, spec);
  if (std::abs(gam.value) < 1e-12) {
    throw DomainError("face_audit: signature gamma vanishes at this s");
  }
  Complex lhs = gam.value * lfun::dedekind_zeta(s, k).value;

  const double u = rational
      ? 1.0
      : 2.0 / std::sqrt(static_cast<double>(k.abs_discriminant));
  const double C = rational ? 1.0 : kPi;
  const double w = static_cast<double>(k.roots_of_unity_w);
  const double om0 = omega.evaluator(0.0);

  Complex polar = eps == 1
      ? Complex(1.0) / (s * (s - 1.0))
      : -(2.0 * s - 1.0) / (s * (s - 1.0));

  core::QuadratureSpec tail_spec = spec;
  tail_spec.tail_cutoff_policy = core::TailPolicy::exponential;
  tail_spec.tail_rate = omega.decay_rate * u;
  auto integrand = [&](double t) -> Complex {
    double th = theta_k(k, omega, u * t);
    Complex weight = std::exp((s - 1.0) * std::log(t)) +
                     static_cast<double>(eps) *
                         std::exp(-s * std::log(t));
    return th * weight;
  };
  ValueWithError integral = core::integrate_half_line(integrand, 1.0,
                                                      tail_spec);

  FaceReport rep;
  rep.bracket = (om0 / w) * polar + integral.value;
  rep.rhs = C * std::pow(Complex(u, 0.0), s) * rep.bracket;
  rep.lhs = lhs;
  rep.abs_diff = std::abs(rep.lhs - rep.rhs);
  return rep;
}

double face_residual(const fields::NumberFieldDescriptor& k,
                     const FunctionHandle& omega, int eps, Complex s,
                     const core::QuadratureSpec& spec) {
  return face_audit(k, omega, eps, s, spec).abs_diff;
}

}  // namespace zetalab::harmonic
