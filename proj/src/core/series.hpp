#pragma once

#include "core/types.hpp"

#include <functional>

namespace zetalab::core {

enum class SeriesKind {
  alternating,   // signed terms, Euler transformation
  monotone,      // positive decreasing terms with a power-law tail
  fast_decay,    // gaussian or similar, direct summation
};

// Sum of sum_{n>=1} term(n) with the acceleration suited to the stated
// shape. Terms are requested lazily. Throws NumericError with a clean
// diagnostic when the terms show no decay (divergent input).
ValueWithError sum_accelerated(const std::function<double(long)>& term,
                               SeriesKind kind, double abs_tol = 1e-13);

}  // namespace zetalab::core
