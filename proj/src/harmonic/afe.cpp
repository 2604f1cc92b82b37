#include "harmonic/afe.hpp"

#include <cmath>

namespace zetalab::harmonic {

namespace {
constexpr double kSingularGap = 1e-10;
constexpr double kInvolutionTol = 1e-10;
}

AfeSolution afe_solve(Complex v0, Complex l,
                      const std::function<Complex(Complex)>& F) {
  Complex denom = 1.0 - l * l;
  if (std::abs(denom) < kSingularGap) {
    throw DomainError("afe_solve: l is at or near a singular value +-1");
  }
  const Complex probes[] = {v0, Complex(0.375, -1.25), Complex(-2.0, 0.5)};
  for (Complex p : probes) {
    if (std::abs(F(F(p)) - p) > kInvolutionTol * (1.0 + std::abs(p))) {
      throw DomainError("afe_solve: F is not an involution on samples");
    }
  }
  AfeSolution sol;
  sol.value = (v0 - l * F(v0)) / denom;
  sol.residual = std::abs(sol.value + l * F(sol.value) - v0);
  return sol;
}

AfeFunctionSolution afe_solve_function(
    const FunctionHandle& v0, double l,
    const std::function<FunctionHandle(const FunctionHandle&)>& F,
    const std::vector<double>& samples) {
  double denom = 1.0 - l * l;
  if (std::fabs(denom) < kSingularGap) {
    throw DomainError("afe_solve_function: l is at or near +-1");
  }
  FunctionHandle fv0 = F(v0);
  for (double x : samples) {
    double twice = F(fv0).evaluator(x);
    if (std::fabs(twice - v0.evaluator(x)) >
        kInvolutionTol * (1.0 + std::fabs(v0.evaluator(x)))) {
      throw DomainError("afe_solve_function: F is not an involution");
    }
  }
  auto v0_eval = v0.evaluator;
  auto fv0_eval = fv0.evaluator;
  FunctionHandle out = v0;
  out.name = "afe(" + v0.name + ")";
  out.evaluator = [v0_eval, fv0_eval, l, denom](double x) {
    return (v0_eval(x) - l * fv0_eval(x)) / denom;
  };

  AfeFunctionSolution sol;
  sol.max_residual = 0.0;
  FunctionHandle fout = F(out);
  for (double x : samples) {
    double r = std::fabs(out.evaluator(x) + l * fout.evaluator(x) -
                         v0.evaluator(x));
    sol.max_residual = std::max(sol.max_residual, r);
  }
  sol.value = std::move(out);
  return sol;
}

}  // namespace zetalab::harmonic
