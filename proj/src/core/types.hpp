#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace zetalab {

using Complex = std::complex<double>;

// Numeric result together with an a-posteriori error estimate.
struct ValueWithError {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;

  double real() const { return value.real(); }
};

// Raised when an input lies outside an operation's mathematical domain
// (poles, empty brackets, parameters off their contract range).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an algorithm cannot reach its accuracy target or detects
// divergence; carries the best value so far in the message only.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

namespace core {

enum class Scheme { tanh_sinh, gauss_kronrod };

enum class TailPolicy { gaussian, exponential, fixed_cut };

struct QuadratureSpec {
  Scheme scheme = Scheme::tanh_sinh;
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_refinements = 12;
  TailPolicy tail_cutoff_policy = TailPolicy::gaussian;
  // Rate constant c for the tail policy: integrand tails are modelled as
  // e^{-c x^2} (gaussian) or e^{-c x} (exponential). fixed_cut integrates
  // up to tail_cut and charges nothing for the remainder.
  double tail_rate = 1.0;
  double tail_cut = 50.0;
};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<Complex(double)>;

}  // namespace core
}  // namespace zetalab
