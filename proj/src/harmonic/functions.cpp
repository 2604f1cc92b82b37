#include "harmonic/functions.hpp"

#include <cmath>

namespace zetalab::harmonic {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void check_parity(const FunctionHandle& f) {
  if (f.parity == Parity::none || f.dimension_n > 1) return;
  for (double x : {0.3, 1.1, 2.4}) {
    double plus = f.evaluator(x);
    double minus = f.evaluator(-x);
    double want = f.parity == Parity::even ? plus : -plus;
    if (std::fabs(minus - want) > 1e-12 * (1.0 + std::fabs(plus))) {
      throw DomainError("FunctionHandle '" + f.name +
                        "': declared parity fails at x = " +
                        std::to_string(x));
    }
  }
}

FunctionHandle make_G() {
  FunctionHandle f;
  f.evaluator = [](double x) { return std::exp(-kPi * x * x); };
  f.dimension_n = 1;
  f.parity = Parity::even;
  f.decay = Decay::gaussian;
  f.decay_rate = kPi;
  f.name = "G";
  check_parity(f);
  return f;
}

FunctionHandle make_H2() {
  FunctionHandle f;
  f.evaluator = [](double x) {
    return kPi * std::exp(-kPi * x * x) * (4.0 * kPi * x * x - 1.0);
  };
  f.dimension_n = 1;
  f.parity = Parity::even;
  f.decay = Decay::gaussian;
  f.decay_rate = kPi;
  f.name = "H2";
  check_parity(f);
  return f;
}

FunctionHandle make_K2() {
  FunctionHandle f;
  f.evaluator = [](double x) {
    return 2.0 * kPi * std::exp(-kPi * x * x) * (2.0 * kPi * x * x - 1.0);
  };
  f.dimension_n = 1;
  f.parity = Parity::even;
  f.decay = Decay::gaussian;
  f.decay_rate = kPi;
  f.name = "K2";
  check_parity(f);
  return f;
}

FunctionHandle make_G_n(int n) {
  if (n < 1 || n > 4) {
    throw DomainError("make_G_n: dimension out of range");
  }
  FunctionHandle f;
  f.evaluator = [](double rho) { return std::exp(-kPi * rho * rho); };
  f.dimension_n = n;
  f.parity = Parity::even;
  f.decay = Decay::gaussian;
  f.decay_rate = kPi;
  f.name = "G_" + std::to_string(n);
  return f;
}

}  // namespace zetalab::harmonic
