#pragma once

#include "core/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetalab::harmonic {

enum class Parity { even, odd, none };
enum class Decay { gaussian, exponential, polynomial, compact_support };

// A concrete function on R^n. For n = 1 the evaluator takes the
// coordinate; for n >= 2 the handles used here are radial and the
// evaluator takes the radius.
struct FunctionHandle {
  std::function<double(double)> evaluator;
  int dimension_n = 1;
  Parity parity = Parity::even;
  Decay decay = Decay::gaussian;
  // Rate constant c: decay modelled as e^{-c x^2} (gaussian) or
  // e^{-c x} (exponential); used for truncation bounds.
  double decay_rate = 3.14159265358979323846;
  std::string name;
  // Quadrature split points for piecewise-defined handles.
  std::vector<double> breakpoints;

  double operator()(double x) const { return evaluator(x); }
};

// Named closed-form handles. Exact values at zero: G(0) = 1,
// H2(0) = -pi, K2(0) = -2 pi.
FunctionHandle make_G();
FunctionHandle make_H2();
FunctionHandle make_K2();
// Radial profile of the n-dimensional Gaussian e^{-pi |x|^2}.
FunctionHandle make_G_n(int n);

// Verifies the declared parity by spot sampling (throws DomainError on
// mismatch). Called by the factory functions above.
void check_parity(const FunctionHandle& f);

}  // namespace zetalab::harmonic
