#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "adic/padic.hpp"
#include "adic/quat.hpp"
#include "core/rng.hpp"
#include "core/types.hpp"

using namespace zetalab;
using namespace zetalab::adic;

namespace {
constexpr double kPi = 3.14159265358979323846;

ExactRational rat(long num, long den) {
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("padic valuations are exact") {
  const auto twelve = padic_valuation(rat(12, 1), 2);
  CHECK(twelve.valuation_alpha == 2);
  CHECK(twelve.abs_value == rat(1, 4));
  CHECK(!twelve.infinite_valuation);

  const auto three_eighths = padic_valuation(rat(3, 8), 2);
  CHECK(three_eighths.valuation_alpha == -3);
  CHECK(three_eighths.abs_value == rat(8, 1));

  const auto unit = padic_valuation(rat(7, 3), 5);
  CHECK(unit.valuation_alpha == 0);
  CHECK(unit.abs_value == rat(1, 1));

  const auto zero = padic_valuation(rat(0, 1), 3);
  CHECK(zero.infinite_valuation);
  CHECK(zero.abs_value == rat(0, 1));

  CHECK_THROWS_AS(padic_valuation(rat(1, 1), 4), DomainError);
}

TEST_CASE("two-place prevaluation in both normalizations") {
  // alpha_2(12) = 2, alpha_3(12) = 1.
  CHECK(prevaluation_vpq(rat(12, 1), 2, 3) == rat(1, 8));
  CHECK(prevaluation_vpq(rat(12, 1), 2, 3, false) == rat(1, 12));
  // Coprime to both primes: the unit value 1 either way.
  CHECK(prevaluation_vpq(rat(35, 1), 2, 3) == rat(1, 1));
  CHECK(prevaluation_vpq(rat(35, 1), 2, 3, false) == rat(1, 1));
  // Negative valuations invert exactly.
  CHECK(prevaluation_vpq(rat(1, 6), 2, 3) == rat(4, 1));
}

TEST_CASE("prevaluation is multiplicative") {
  core::CounterRng rng(777);
  for (int i = 0; i < 200; ++i) {
    const long a = static_cast<long>(rng.bits(4 * i) % 199) - 99;
    const long b = 1 + static_cast<long>(rng.bits(4 * i + 1) % 99);
    const long c = static_cast<long>(rng.bits(4 * i + 2) % 199) - 99;
    const long d = 1 + static_cast<long>(rng.bits(4 * i + 3) % 99);
    if (a == 0 || c == 0) continue;
    const auto x = rat(a, b);
    const auto y = rat(c, d);
    ExactRational lhs = prevaluation_vpq(x * y, 2, 5);
    ExactRational rhs = prevaluation_vpq(x, 2, 5) *
                        prevaluation_vpq(y, 2, 5);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("haar module multiplies the two absolute values") {
  CHECK(haar_module_pq(rat(1, 4), rat(1, 1)) == rat(1, 4));
  CHECK(haar_module_pq(rat(8, 1), rat(1, 9)) == rat(8, 9));
}

TEST_CASE("ultrametric dominance on exact pairs") {
  // |2|_2 = 1/2 dominates |8|_2 = 1/8.
  CHECK(ultrametric_dominance(rat(2, 1), rat(8, 1), 2));
  CHECK(ultrametric_dominance(rat(1, 1), rat(6, 1), 3));
  // Violated precondition |y|_p < |x|_p throws.
  CHECK_THROWS_AS(ultrametric_dominance(rat(8, 1), rat(2, 1), 2),
                  DomainError);
}

TEST_CASE("ultrametric dominance over a bounded height box") {
  // All fractions of height <= 12 with strictly smaller |y|_p; the
  // identity |x^2|_p = |x^2 - y^2|_p is exact each time.
  for (long p : {2L, 3L, 5L}) {
    for (long an = -12; an <= 12; ++an) {
      if (an == 0) continue;
      for (long ad = 1; ad <= 12; ++ad) {
        const auto x = rat(an, ad);
        for (long bn = -12; bn <= 12; ++bn) {
          if (bn == 0) continue;
          for (long bd = 1; bd <= 12; ++bd) {
            const auto y = rat(bn, bd);
            const auto vx = padic_valuation(x, p);
            const auto vy = padic_valuation(y, p);
            if (!(vy.valuation_alpha > vx.valuation_alpha)) continue;
            CHECK(ultrametric_dominance(x, y, p));
          }
        }
      }
    }
  }
}

TEST_CASE("corrected two-place sum bound holds on random pairs") {
  core::CounterRng rng(20260816);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    long a = static_cast<long>(rng.bits(4 * i) % 241) - 120;
    const long b = 1 + static_cast<long>(rng.bits(4 * i + 1) % 120);
    long c = static_cast<long>(rng.bits(4 * i + 2) % 241) - 120;
    const long d = 1 + static_cast<long>(rng.bits(4 * i + 3) % 120);
    if (a == 0) a = 7;
    if (c == 0) c = 7;
    const auto x = rat(a, b);
    const auto y = rat(c, d);
    if (x + y == 0) continue;
    CHECK(vpq_sum_bound_holds(x, y, 2, 5));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("discrete averaged identity over representative sets") {
  const std::vector<ExactRational> unit_reps{rat(1, 1)};
  const auto base = ahd_pq_discrete_check(rat(1, 1), 2, 3, 3, unit_reps);
  CHECK(base.pass);
  CHECK(base.common_value == rat(1, 1));
  CHECK(base.terms > 0);

  const std::vector<ExactRational> three_reps{rat(1, 1), rat(3, 1),
                                              rat(5, 1)};
  const auto half = ahd_pq_discrete_check(rat(1, 2), 2, 3, 4, three_reps);
  CHECK(half.pass);
  CHECK(half.common_value == rat(1, 4));

  const std::vector<ExactRational> q5_reps{rat(1, 1), rat(2, 1),
                                           rat(7, 1)};
  const auto q5 = ahd_pq_discrete_check(rat(3, 1), 5, 2, 2, q5_reps);
  CHECK(q5.pass);
  CHECK(q5.common_value == rat(1, 1));

  CHECK_THROWS_AS(
      ahd_pq_discrete_check(rat(1, 1), 2, 3, 3, {}), DomainError);
  CHECK_THROWS_AS(
      ahd_pq_discrete_check(rat(1, 1), 2, 3, 3, {rat(2, 1)}),
      DomainError);
}

TEST_CASE("product formula closes over all places") {
  // |x| * prod_p |x|_p = 1 for x = -882/625 (primes 2, 3, 5, 7).
  const auto x = rat(-882, 625);
  ExactRational product = abs(x);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    product *= padic_valuation(x, p).abs_value;
  }
  CHECK(product == rat(1, 1));

  const auto y = rat(100, 63);
  ExactRational prod_y = abs(y);
  for (long p = 2; p <= 100; ++p) {
    if (!is_prime(p)) continue;
    prod_y *= padic_valuation(y, p).abs_value;
  }
  CHECK(prod_y == rat(1, 1));
}

TEST_CASE("quaternion algebra basics") {
  const Quaternion i{0.0, 1.0, 0.0, 0.0};
  const Quaternion j{0.0, 0.0, 1.0, 0.0};
  const auto k = quat_mul(i, j);
  CHECK(k.z == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(k.w == 0.0);
  // Anticommutativity: j i = -k.
  const auto minus_k = quat_mul(j, i);
  CHECK(minus_k.z == doctest::Approx(-1.0).epsilon(1e-15));

  const Quaternion h{1.0, 2.0, -1.0, 0.5};
  const auto c = quat_conj(h);
  CHECK(c.w == h.w);
  CHECK(c.x == -h.x);
  const auto prod = quat_mul(h, quat_inverse(h));
  CHECK(prod.w == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(prod.x) < 1e-14);
  CHECK(std::fabs(prod.y) < 1e-14);
  CHECK(std::fabs(prod.z) < 1e-14);
  CHECK_THROWS_AS(quat_inverse(Quaternion{}), DomainError);
}

TEST_CASE("haar module equals the left regular determinant") {
  CHECK(haar_module_quat(Quaternion{2.0, 0.0, 0.0, 0.0}) ==
        doctest::Approx(16.0).epsilon(1e-15));
  CHECK(haar_module_quat(Quaternion{1.0, 1.0, 1.0, 1.0}) ==
        doctest::Approx(16.0).epsilon(1e-15));
  CHECK(left_regular_det_check(Quaternion{0.3, -1.2, 0.7, 2.1}) < 1e-12);

  core::CounterRng rng(99);
  for (int i = 0; i < 1000; ++i) {
    Quaternion h{rng.uniform(4 * i) * 4.0 - 2.0,
                 rng.uniform(4 * i + 1) * 4.0 - 2.0,
                 rng.uniform(4 * i + 2) * 4.0 - 2.0,
                 rng.uniform(4 * i + 3) * 4.0 - 2.0};
    if (h.norm2() < 1e-3) h.w += 1.0;
    CHECK(left_regular_det_check(h) < 1e-10);
  }
}

TEST_CASE("haar module is multiplicative on quaternions") {
  const Quaternion a{1.0, 2.0, 3.0, -1.0};
  const Quaternion b{-0.5, 1.5, 0.25, 2.0};
  const double lhs = haar_module_quat(quat_mul(a, b));
  const double rhs = haar_module_quat(a) * haar_module_quat(b);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("monte carlo inversion invariance on the stable annulus") {
  const auto constant = [](const Quaternion&) { return 1.0; };
  const auto r1 = inversion_invariance_mc(constant, 2.0, 4.0, 40000, 11);
  CHECK(r1.within_3_sigma);
  CHECK(r1.samples == 40000);
  // Constant integrand: both sides share every sample exactly.
  CHECK(r1.diff == 0.0);

  const auto norm2 = [](const Quaternion& h) { return h.norm2(); };
  const auto r2 = inversion_invariance_mc(norm2, 2.0, 4.0, 60000, 12);
  CHECK(r2.within_3_sigma);
  CHECK(r2.se_diff > 0.0);

  // Identical seeds reproduce the full report.
  const auto r3 = inversion_invariance_mc(norm2, 2.0, 4.0, 60000, 12);
  CHECK(r2.side_direct == r3.side_direct);
  CHECK(r2.sigma_ratio == r3.sigma_ratio);
}

TEST_CASE("analytic volume of the stable annulus") {
  CHECK(haar_volume_x(2.0, 4.0) ==
        doctest::Approx(4.0 * kPi * kPi * std::log(2.0)).epsilon(1e-14));
  // The direct MC estimate of the constant integrand agrees within its
  // own standard error; the inner shell carries most of the variance.
  const auto constant = [](const Quaternion&) { return 1.0; };
  const auto r = inversion_invariance_mc(constant, 2.0, 4.0, 200000, 5);
  CHECK(std::fabs(r.side_direct - haar_volume_x(2.0, 4.0)) <=
        5.0 * r.se_direct);
}
