#include "traces/weil.hpp"

#include <cmath>

namespace zetalab::traces {

namespace {

constexpr double kPi = 3.14159265358979323846;

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<double>(n - k + i) / i;
  }
  return r;
}

double double_factorial(int n) {
  double r = 1.0;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

// integral of y^j e^{-S y^2} over the line.
double gaussian_moment(int j, double S) {
  if (j % 2 == 1) return 0.0;
  return std::sqrt(kPi / S) * double_factorial(j - 1) /
         std::pow(2.0 * S, j / 2);
}

}  // namespace

double SchwartzBarnerFunction::evaluate(double x) const {
  double p = 0.0;
  for (size_t i = coefficients.size(); i-- > 0;) {
    p = p * x + coefficients[i];
  }
  return p * std::exp(-gaussian_K * x * x);
}

SchwartzBarnerFunction reflect(const SchwartzBarnerFunction& f) {
  SchwartzBarnerFunction r = f;
  for (size_t i = 1; i < r.coefficients.size(); i += 2) {
    r.coefficients[i] = -r.coefficients[i];
  }
  return r;
}

SchwartzBarnerFunction convolve(const SchwartzBarnerFunction& f,
                                const SchwartzBarnerFunction& g) {
  if (!(f.gaussian_K > 0.0) || !(g.gaussian_K > 0.0)) {
    throw DomainError("convolve: Gaussian rates must be positive");
  }
  const double K1 = f.gaussian_K, K2 = g.gaussian_K;
  const double S = K1 + K2;
  const double alpha = K2 / S, beta = K1 / S;
  const int d1 = static_cast<int>(f.coefficients.size()) - 1;
  const int d2 = static_cast<int>(g.coefficients.size()) - 1;
  if (d1 < 0 || d2 < 0) {
    throw DomainError("convolve: empty polynomial");
  }

  // B[zdeg][xdeg] accumulates P1(z + alpha x) * P2(beta x - z).
  std::vector<std::vector<double>> B(
      d1 + d2 + 1, std::vector<double>(d1 + d2 + 1, 0.0));
  for (int i = 0; i <= d1; ++i) {
    double a = f.coefficients[i];
    if (a == 0.0) continue;
    for (int j = 0; j <= i; ++j) {
      double left = a * binom(i, j) * std::pow(alpha, i - j);
      for (int m = 0; m <= d2; ++m) {
        double b = g.coefficients[m];
        if (b == 0.0) continue;
        for (int l = 0; l <= m; ++l) {
          double right = b * binom(m, l) * std::pow(beta, m - l) *
                         (l % 2 == 0 ? 1.0 : -1.0);
          B[j + l][(i - j) + (m - l)] += left * right;
        }
      }
    }
  }

  SchwartzBarnerFunction out;
  out.gaussian_K = K1 * K2 / S;
  out.coefficients.assign(d1 + d2 + 1, 0.0);
  for (int zdeg = 0; zdeg <= d1 + d2; zdeg += 2) {
    double mom = gaussian_moment(zdeg, S);
    for (int xdeg = 0; xdeg <= d1 + d2; ++xdeg) {
      out.coefficients[xdeg] += B[zdeg][xdeg] * mom;
    }
  }
  while (out.coefficients.size() > 1 &&
         std::fabs(out.coefficients.back()) < 1e-300) {
    out.coefficients.pop_back();
  }
  return out;
}

Complex sb_transform(const SchwartzBarnerFunction& f, Complex rho) {
  const double K = f.gaussian_K;
  if (!(K > 0.0)) {
    throw DomainError("sb_transform: Gaussian rate must be positive");
  }
  const Complex a = rho - 0.5;
  const Complex shift = a / (2.0 * K);
  // Iterated products instead of std::pow: complex pow(0, 0) is NaN and the
  // central point rho = 1/2 lands exactly there.
  std::vector<Complex> shift_pow(f.coefficients.size(), Complex(1.0, 0.0));
  for (size_t i = 1; i < shift_pow.size(); ++i) {
    shift_pow[i] = shift_pow[i - 1] * shift;
  }
  Complex total(0.0, 0.0);
  for (size_t k = 0; k < f.coefficients.size(); ++k) {
    double c = f.coefficients[k];
    if (c == 0.0) continue;
    for (size_t j = 0; j <= k; j += 1) {
      double mom = gaussian_moment(static_cast<int>(j), K);
      if (mom == 0.0) continue;
      total += c * binom(static_cast<int>(k), static_cast<int>(j)) *
               shift_pow[k - j] * mom;
    }
  }
  return std::exp(a * a / (4.0 * K)) * total;
}

WeilTraceResult weil_trace(const SchwartzBarnerFunction& f0,
                           const std::vector<fe::ZeroRecord>& zeros) {
  WeilTraceResult out;
  if (zeros.empty()) {
    out.empty_list = true;
    return out;
  }
  SchwartzBarnerFunction F = convolve(f0, reflect(f0));
  for (const auto& z : zeros) {
    out.value += sb_transform(F, Complex(0.5, z.ordinate_t));
    out.value += sb_transform(F, Complex(0.5, -z.ordinate_t));
  }
  return out;
}

}  // namespace zetalab::traces
