#include "adic/padic.hpp"

#include <algorithm>

namespace zetalab::adic {

namespace {

ExactRational prime_power(long p, long exponent) {
  mpz_class num = 1, den = 1;
  mpz_class base = p;
  if (exponent >= 0) {
    mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(exponent));
  } else {
    mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(-exponent));
  }
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

long strip_factor(mpz_class* n, long p) {
  long count = 0;
  mpz_class q;
  while (mpz_divisible_ui_p(n->get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(q.get_mpz_t(), n->get_mpz_t(),
                    static_cast<unsigned long>(p));
    *n = q;
    ++count;
  }
  return count;
}

long valuation_or_throw(const ExactRational& x, long p, const char* who) {
  PAdicView v = padic_valuation(x, p);
  if (v.infinite_valuation) {
    throw DomainError(std::string(who) + ": zero input");
  }
  return v.valuation_alpha;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PAdicView padic_valuation(const ExactRational& x, long p) {
  if (!is_prime(p)) {
    throw DomainError("padic_valuation: p must be prime");
  }
  PAdicView view;
  view.x = x;
  view.p = p;
  if (x == 0) {
    view.infinite_valuation = true;
    view.abs_value = 0;
    return view;
  }
  mpz_class num = abs(x.get_num());
  mpz_class den = x.get_den();
  long a = strip_factor(&num, p);
  long b = strip_factor(&den, p);
  view.valuation_alpha = a - b;
  view.abs_value = prime_power(p, -view.valuation_alpha);
  return view;
}

ExactRational prevaluation_vpq(const ExactRational& x, long p, long q,
                               bool q_normalized_to_p) {
  if (p == q) {
    throw DomainError("prevaluation_vpq: p and q must be distinct");
  }
  long m = valuation_or_throw(x, p, "prevaluation_vpq");
  long n = valuation_or_throw(x, q, "prevaluation_vpq");
  if (q_normalized_to_p) {
    return prime_power(p, -(m + n));
  }
  return prime_power(p, -m) * prime_power(q, -n);
}

ExactRational haar_module_pq(const ExactRational& xp_absval,
                             const ExactRational& xq_absval) {
  auto is_prime_power_value = [](const ExactRational& v) {
    return v > 0 && (v.get_num() == 1 || v.get_den() == 1);
  };
  if (!is_prime_power_value(xp_absval) || !is_prime_power_value(xq_absval)) {
    throw DomainError("haar_module_pq: inputs must be positive prime "
                      "powers p^k");
  }
  return xp_absval * xq_absval;
}

bool ultrametric_dominance(const ExactRational& x, const ExactRational& y,
                           long p) {
  long ax = valuation_or_throw(x, p, "ultrametric_dominance");
  PAdicView vy = padic_valuation(y, p);
  if (!vy.infinite_valuation && !(vy.valuation_alpha > ax)) {
    throw DomainError("ultrametric_dominance: needs |y|_p < |x|_p");
  }
  ExactRational lhs = x * x;
  ExactRational rhs = lhs - y * y;
  return padic_valuation(rhs, p).valuation_alpha ==
         padic_valuation(lhs, p).valuation_alpha;
}

bool vpq_sum_bound_holds(const ExactRational& x, const ExactRational& y,
                         long p, long q) {
  ExactRational sum = x + y;
  if (x == 0 || y == 0 || sum == 0) {
    throw DomainError("vpq_sum_bound_holds: zero input");
  }
  long xp = valuation_or_throw(x, p, "vpq_sum_bound_holds");
  long xq = valuation_or_throw(x, q, "vpq_sum_bound_holds");
  long yp = valuation_or_throw(y, p, "vpq_sum_bound_holds");
  long yq = valuation_or_throw(y, q, "vpq_sum_bound_holds");
  long best = std::min({xp + xq, xp + yq, yp + xq, yp + yq});
  ExactRational bound = prime_power(p, -best);
  return prevaluation_vpq(sum, p, q) <= bound;
}

AhdCheckResult ahd_pq_discrete_check(const ExactRational& x, long p, long q,
                                     long N,
                                     const std::vector<ExactRational>& reps) {
  if (reps.empty()) {
    throw DomainError("ahd_pq_discrete_check: empty representative set");
  }
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw DomainError("ahd_pq_discrete_check: p, q must be distinct primes");
  }
  if (N < 1) {
    throw DomainError("ahd_pq_discrete_check: N must be positive");
  }
  long ax = valuation_or_throw(x, p, "ahd_pq_discrete_check");
  if (!(ax <= N - 1)) {
    throw DomainError("ahd_pq_discrete_check: needs |x|_p >= p^{-N+1}");
  }
  if (valuation_or_throw(x, q, "ahd_pq_discrete_check") != 0) {
    throw DomainError("ahd_pq_discrete_check: needs |x_q|_q = 1");
  }

  ExactRational x2 = x * x;
  long ref = padic_valuation(x2, p).valuation_alpha;
  ExactRational common = prime_power(p, ref);

  AhdCheckResult out;
  out.common_value = common;
  out.pass = true;

  ExactRational scale = prime_power(p, N);
  const long unit_seeds[] = {1, 1 + p, 1 + 2 * p, 1 + 3 * p, 2 * p - 1};
  for (const ExactRational& eta : reps) {
    if (valuation_or_throw(eta, p, "ahd_pq_discrete_check") != 0) {
      throw DomainError("ahd_pq_discrete_check: representative with "
                        "|eta|_p != 1");
    }
    for (long u : unit_seeds) {
      ExactRational xi = scale * u;
      ExactRational prod = eta * xi;
      if (padic_valuation(prod, p).valuation_alpha != N) {
        throw DomainError("ahd_pq_discrete_check: sample with "
                          "|eta xi|_p != p^{-N}");
      }
      ExactRational term = x2 - prod * prod;
      ++out.terms;
      if (padic_valuation(term, p).valuation_alpha != ref) {
        out.pass = false;
      }
    }
  }
  return out;
}

}  // namespace zetalab::adic
