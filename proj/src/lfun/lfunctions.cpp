#include "lfun/lfunctions.hpp"

#include "core/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zetalab::lfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

// B_{2j} / (2j)! for j = 1..8.
constexpr double kBernFact[8] = {
    +8.3333333333333333e-02, -1.3888888888888889e-03,
    +3.3068783068783069e-05, -8.2671957671957672e-07,
    +2.0876756987868099e-08, -5.2841901386874932e-10,
    +1.3382536530684679e-11, -3.3896802963225829e-13,
};

Complex cpow(double base, Complex e) {
  return std::exp(e * std::log(base));
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::euler_maclaurin: return "euler-maclaurin";
    case Method::hurwitz_sum: return "hurwitz-sum";
    case Method::factorization: return "factorization";
    case Method::ideal_count_oracle: return "ideal-count-oracle";
  }
  return "unknown";
}

LSeriesResult hurwitz_zeta(Complex s, double a) {
  if (!(a > 0.0) || a > 1.0) {
    throw DomainError("hurwitz_zeta: offset a must lie in (0, 1]");
  }
  if (s == Complex(1.0, 0.0)) {
    throw DomainError("hurwitz_zeta: pole at s = 1");
  }
  long N = std::max<long>(24, static_cast<long>(1.2 * std::fabs(s.imag())));
  double err = 0.0;
  Complex total(0.0);
  for (int attempt = 0; attempt < 5; ++attempt) {
    Complex sum(0.0);
    for (long k = N - 1; k >= 0; --k) {
      sum += cpow(static_cast<double>(k) + a, -s);
    }
    double Na = static_cast<double>(N) + a;
    Complex tail = cpow(Na, 1.0 - s) / (s - 1.0) + 0.5 * cpow(Na, -s);
    Complex poch = s;
    Complex na_pow = cpow(Na, -s - 1.0);
    double last = 0.0;
    for (int j = 1; j <= 8; ++j) {
      Complex term = kBernFact[j - 1] * poch * na_pow;
      tail += term;
      last = std::abs(term);
      poch *= (s + static_cast<double>(2 * j - 1)) *
              (s + static_cast<double>(2 * j));
      na_pow /= Na * Na;
    }
    total = sum + tail;
    err = last + 1e-15 * std::abs(total);
    if (last <= 1e-13 * std::max(1.0, std::abs(total))) break;
    N *= 2;
  }
  return {total, Method::euler_maclaurin, err};
}

LSeriesResult riemann_zeta(Complex s) {
  return hurwitz_zeta(s, 1.0);
}

LSeriesResult dirichlet_l(Complex s,
                          const fields::DirichletCharacter& chi) {
  const int m = chi.modulus;
  if (chi.is_principal) {
    // L(s, chi0 mod m) = zeta(s) * prod_{p | m} (1 - p^{-s}).
    if (s == Complex(1.0, 0.0)) {
      throw DomainError("dirichlet_l: pole at s = 1 for the principal "
                        "character");
    }
    LSeriesResult z = riemann_zeta(s);
    Complex v = z.value;
    long rest = m;
    for (long p = 2; p * p <= rest; ++p) {
      if (rest % p == 0) {
        v *= 1.0 - cpow(static_cast<double>(p), -s);
        while (rest % p == 0) rest /= p;
      }
    }
    if (rest > 1) v *= 1.0 - cpow(static_cast<double>(rest), -s);
    return {v, m == 1 ? Method::euler_maclaurin : Method::hurwitz_sum,
            z.error_estimate};
  }
  if (s == Complex(1.0, 0.0)) {
    // L(1, chi) = -(1/m) sum_a chi(a) psi(a/m), nonprincipal chi.
    Complex acc(0.0);
    for (int a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      acc += chi.value(a) *
             core::digamma_real(static_cast<double>(a) / m);
    }
    return {-acc / static_cast<double>(m), Method::hurwitz_sum, 1e-13};
  }
  Complex acc(0.0);
  double err = 0.0;
  for (int a = 1; a <= m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    LSeriesResult h = hurwitz_zeta(s, static_cast<double>(a) / m);
    acc += chi.value(a) * h.value;
    err += h.error_estimate;
  }
  Complex v = cpow(static_cast<double>(m), -s) * acc;
  double scale = std::abs(cpow(static_cast<double>(m), -s));
  return {v, Method::hurwitz_sum, scale * err};
}

namespace {

// Multiplicative order of p modulo m (gcd(p, m) = 1).
int mult_order(long p, long m) {
  if (m == 1) return 1;
  long x = p % m;
  int f = 1;
  while (x != 1 % m) {
    x = x * (p % m) % m;
    ++f;
  }
  return f;
}

LSeriesResult cyclotomic_zeta(Complex s, int m, ZetaRoute route) {
  auto chars = fields::characters_mod(m);
  Complex prod(1.0, 0.0);
  double rel_err = 0.0;
  if (route == ZetaRoute::primitive_product ||
      route == ZetaRoute::auto_route) {
    for (const auto& chi : chars) {
      auto chi_star = fields::primitive_from(chi);
      LSeriesResult L = chi_star.modulus == 1 ? riemann_zeta(s)
                                              : dirichlet_l(s, chi_star);
      prod *= L.value;
      rel_err += L.error_estimate / std::max(std::abs(L.value), 1e-300);
    }
  } else {
    for (const auto& chi : chars) {
      LSeriesResult L = dirichlet_l(s, chi);
      prod *= L.value;
      rel_err += L.error_estimate / std::max(std::abs(L.value), 1e-300);
    }
    // Reinstate the Euler factors of the primes dividing m: each p | m
    // contributes g_p factors (1 - p^{-f_p s})^{-1}, with f_p the order
    // of p modulo the p-free part of m and g_p = phi(m / p^v) / f_p.
    long rest = m;
    for (long p = 2; p <= rest; ++p) {
      if (rest % p != 0) continue;
      long mprime = m;
      while (mprime % p == 0) mprime /= p;
      int f = mult_order(p, mprime);
      long phi = 1;
      {
        long n = mprime;
        phi = n;
        for (long q = 2; q * q <= n; ++q) {
          if (n % q == 0) {
            while (n % q == 0) n /= q;
            phi -= phi / q;
          }
        }
        if (n > 1) phi -= phi / n;
      }
      long g = phi / f;
      Complex factor =
          1.0 - cpow(static_cast<double>(p), -static_cast<double>(f) * s);
      for (long i = 0; i < g; ++i) prod /= factor;
      while (rest % p == 0) rest /= p;
    }
  }
  return {prod, Method::factorization, rel_err * std::abs(prod)};
}

}  // namespace

LSeriesResult dedekind_zeta(Complex s,
                            const fields::NumberFieldDescriptor& k,
                            ZetaRoute route) {
  if (s == Complex(1.0, 0.0)) {
    throw DomainError("dedekind_zeta: pole at s = 1");
  }
  if (k.degree_n == 1) {
    return riemann_zeta(s);
  }
  bool label_is_cyclotomic = k.label.rfind("Q(zeta", 0) == 0;
  if (route == ZetaRoute::auto_route) {
    route = (k.cyclotomic_m != 0 && (label_is_cyclotomic || k.degree_n > 2))
                ? ZetaRoute::primitive_product
                : ZetaRoute::quadratic_product;
  }
  if (route == ZetaRoute::quadratic_product) {
    if (k.quadratic_d == 0) {
      throw DomainError("dedekind_zeta: quadratic route needs a "
                        "quadratic field");
    }
    LSeriesResult z = riemann_zeta(s);
    auto chi = fields::kronecker_character(k.quadratic_d);
    LSeriesResult L = dirichlet_l(s, chi);
    Complex v = z.value * L.value;
    double rel = z.error_estimate / std::max(std::abs(z.value), 1e-300) +
                 L.error_estimate / std::max(std::abs(L.value), 1e-300);
    return {v, Method::factorization, rel * std::abs(v)};
  }
  if (k.cyclotomic_m == 0) {
    throw DomainError("dedekind_zeta: no cyclotomic conductor for " +
                      k.label);
  }
  return cyclotomic_zeta(s, k.cyclotomic_m, route);
}

LSeriesResult ideal_count_zeta(Complex s,
                               const fields::NumberFieldDescriptor& k,
                               long cutoff) {
  if (!(s.real() > 1.0)) {
    throw DomainError("ideal_count_zeta: needs Re(s) > 1");
  }
  if (cutoff < 10) {
    throw DomainError("ideal_count_zeta: cutoff too small");
  }
  const std::string& c = k.canonical_label;
  double sigma = s.real();
  Complex sum(0.0);
  double density = 0.0;
  if (c == "Q") {
    for (long n = cutoff; n >= 1; --n) {
      sum += cpow(static_cast<double>(n), -s);
    }
    density = 1.0;
  } else if (c == "Q(i)") {
    // Norm counts r(n)/4 by direct Gaussian lattice enumeration.
    std::vector<int> r(static_cast<size_t>(cutoff) + 1, 0);
    long X = static_cast<long>(std::sqrt(static_cast<double>(cutoff)));
    while ((X + 1) * (X + 1) <= cutoff) ++X;
    for (long x = -X; x <= X; ++x) {
      for (long y = -X; y <= X; ++y) {
        long n = x * x + y * y;
        if (n >= 1 && n <= cutoff) r[static_cast<size_t>(n)]++;
      }
    }
    for (long n = cutoff; n >= 1; --n) {
      if (r[static_cast<size_t>(n)] == 0) continue;
      sum += (r[static_cast<size_t>(n)] / 4.0) *
             cpow(static_cast<double>(n), -s);
    }
    density = kPi / 4.0;
  } else if (c == "Q(sqrt(-3))") {
    // Norm form a^2 + ab + b^2, counts divided by w = 6.
    std::vector<int> r(static_cast<size_t>(cutoff) + 1, 0);
    long X = static_cast<long>(2.0 * std::sqrt(static_cast<double>(cutoff)));
    for (long a = -X; a <= X; ++a) {
      for (long b = -X; b <= X; ++b) {
        long n = a * a + a * b + b * b;
        if (n >= 1 && n <= cutoff) r[static_cast<size_t>(n)]++;
      }
    }
    for (long n = cutoff; n >= 1; --n) {
      if (r[static_cast<size_t>(n)] == 0) continue;
      sum += (r[static_cast<size_t>(n)] / 6.0) *
             cpow(static_cast<double>(n), -s);
    }
    density = 2.0 * kPi / (6.0 * std::sqrt(3.0));
  } else {
    throw DomainError("ideal_count_zeta: norm enumeration implemented "
                      "for Q, Q(i), Q(sqrt(-3)) only");
  }
  double tail = density * std::pow(static_cast<double>(cutoff),
                                   1.0 - sigma) / (sigma - 1.0);
  return {sum, Method::ideal_count_oracle, tail};
}

}  // namespace zetalab::lfun
