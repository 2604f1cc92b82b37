#pragma once

#include <gmpxx.h>

#include <vector>

#include "core/types.hpp"

namespace zetalab::adic {

using ExactRational = mpq_class;

// Exact p-adic data of a nonzero rational; for x = 0 the valuation is
// the +infinity sentinel and the absolute value is 0.
struct PAdicView {
  ExactRational x;
  long p = 2;
  long valuation_alpha = 0;
  bool infinite_valuation = false;
  ExactRational abs_value;
};

bool is_prime(long p);

PAdicView padic_valuation(const ExactRational& x, long p);

// v_pq(x) = p^{-(alpha_p + alpha_q)} under the normalization
// |q|_q = 1/p; with q_normalized_to_p = false the canonical |q|_q = 1/q
// is used and the result is p^{-alpha_p} * q^{-alpha_q}.
ExactRational prevaluation_vpq(const ExactRational& x, long p, long q,
                               bool q_normalized_to_p = true);

// Exact product Delta_pq = |x_p|_p * |x_q|_q of two prime-power
// absolute values.
ExactRational haar_module_pq(const ExactRational& xp_absval,
                             const ExactRational& xq_absval);

// Exact check of |x^2|_p = |x^2 - y^2|_p under |y|_p < |x|_p.
bool ultrametric_dominance(const ExactRational& x, const ExactRational& y,
                           long p);

// The corrected two-place bound: v_pq(x+y) never exceeds the largest of
// the four cross products |x|_p|x|_q, |x|_p|y|_q, |y|_p|x|_q,
// |y|_p|y|_q (all in the 1/p normalization).
bool vpq_sum_bound_holds(const ExactRational& x, const ExactRational& y,
                         long p, long q);

struct AhdCheckResult {
  ExactRational common_value;
  bool pass = false;
  long terms = 0;
};

// Exact discrete form of the averaged identity: every term
// 1/|x^2 - (eta xi)^2|_p over xi in the coset p^N * (units) and eta in
// reps equals 1/|x^2|_p, hence so does any convex average.
AhdCheckResult ahd_pq_discrete_check(const ExactRational& x, long p, long q,
                                     long N,
                                     const std::vector<ExactRational>& reps);

}  // namespace zetalab::adic
