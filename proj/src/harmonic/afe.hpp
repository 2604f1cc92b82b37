#pragma once

#include <functional>

#include "core/types.hpp"
#include "harmonic/functions.hpp"

namespace zetalab::harmonic {

// Solution of v + l*F(v) = v0 for an involutive operator F.
struct AfeSolution {
  Complex value;
  double residual;
};

// Scalar solve. F must satisfy F(F(z)) = z on sample points; this is
// checked before solving. Throws DomainError when |1 - l^2| is too small
// (l near +1 or -1) or when F fails the involution check.
AfeSolution afe_solve(Complex v0, Complex l,
                      const std::function<Complex(Complex)>& F);

// Function-space solve with a real parameter. F acts on function handles;
// the residual is the max of |v_l(x) + l*F(v_l)(x) - v0(x)| over the
// sample grid.
struct AfeFunctionSolution {
  FunctionHandle value;
  double max_residual;
};

AfeFunctionSolution afe_solve_function(
    const FunctionHandle& v0, double l,
    const std::function<FunctionHandle(const FunctionHandle&)>& F,
    const std::vector<double>& samples);

}  // namespace zetalab::harmonic
