#pragma once

#include <vector>

#include "core/types.hpp"
#include "fe/completed.hpp"

namespace zetalab::traces {

// P(x) e^{-K x^2} with real coefficients, closed under reflection and
// convolution.
struct SchwartzBarnerFunction {
  std::vector<double> coefficients;
  double gaussian_K = 1.0;

  double evaluate(double x) const;
};

// F*(x) = F(-x): odd coefficients change sign.
SchwartzBarnerFunction reflect(const SchwartzBarnerFunction& f);

// Closed-form convolution: the Gaussian rates combine as
// K = K1 K2 / (K1 + K2) and the polynomial part follows from the even
// moments of e^{-(K1+K2) z^2}.
SchwartzBarnerFunction convolve(const SchwartzBarnerFunction& f,
                                const SchwartzBarnerFunction& g);

// Two-sided transform F_hat(rho) = integral F(x) e^{(rho - 1/2) x} dx in
// closed form.
Complex sb_transform(const SchwartzBarnerFunction& f, Complex rho);

struct WeilTraceResult {
  Complex value{0.0, 0.0};
  bool empty_list = false;
};

// Sum of F_hat over rho = 1/2 +- i t for the supplied zero ordinates,
// with F = F0 convolved with its reflection. An empty list gives 0 and
// sets the warning flag.
WeilTraceResult weil_trace(const SchwartzBarnerFunction& f0,
                           const std::vector<fe::ZeroRecord>& zeros);

}  // namespace zetalab::traces
