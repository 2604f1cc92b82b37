#include "fields/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zetalab::fields {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
  }
  return r;
}

long long euler_phi(long long n) {
  long long res = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      res -= res / p;
    }
  }
  if (n > 1) res -= res / n;
  return res;
}

// One cyclic factor of (Z/m)*: the subgroup generated by gen, of the
// given order, realized inside Z/m.
struct CyclicPart {
  long long gen;
  long long order;
};

long long primitive_root_mod_pk(long long p, int k) {
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  long long phi_p = p - 1;
  // Factor p-1 and test candidates mod p.
  std::vector<long long> fac;
  long long t = phi_p;
  for (long long q = 2; q * q <= t; ++q) {
    if (t % q == 0) {
      fac.push_back(q);
      while (t % q == 0) t /= q;
    }
  }
  if (t > 1) fac.push_back(t);
  long long g = 0;
  for (long long cand = 2; cand < p; ++cand) {
    bool ok = true;
    for (long long q : fac) {
      if (mod_pow(cand, phi_p / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (k == 1) return g;
  // Lift: g stays primitive mod p^k unless g^{p-1} = 1 mod p^2.
  long long p2 = p * p;
  if (mod_pow(g, p - 1, p2) == 1) g += p;
  return g % pk;
}

// Decompose (Z/m)* as a direct product of cyclic groups, each given by
// a generator that is 1 modulo the other prime-power parts.
std::vector<CyclicPart> unit_group(int m) {
  std::vector<CyclicPart> parts;
  if (m == 1) return parts;
  std::vector<std::pair<long long, int>> pps;
  long long rest = m;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      int k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      pps.push_back({p, k});
    }
  }
  if (rest > 1) pps.push_back({rest, 1});

  for (auto [p, k] : pps) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    long long other = m / pk;
    // CRT lift x mod pk to (x mod pk, 1 mod other).
    auto lift = [&](long long x) -> long long {
      for (long long cand = 0; cand < m; ++cand) {
        if (cand % pk == x % pk && (other == 1 || cand % other == 1)) {
          return cand;
        }
      }
      return 1;
    };
    if (p == 2) {
      if (k == 1) continue;
      if (k == 2) {
        parts.push_back({lift(3), 2});
      } else {
        parts.push_back({lift(pk - 1), 2});
        parts.push_back({lift(5), pk / 4});
      }
    } else {
      long long g = primitive_root_mod_pk(p, k);
      parts.push_back({lift(g), euler_phi(pk)});
    }
  }
  return parts;
}

}  // namespace

Complex DirichletCharacter::value(long a) const {
  long r = a % modulus;
  if (r < 0) r += modulus;
  int k = exps[static_cast<size_t>(r)];
  if (k < 0) return Complex(0.0, 0.0);
  double ang = kTwoPi * k / exponent_N;
  return Complex(std::cos(ang), std::sin(ang));
}

bool DirichletCharacter::is_real() const {
  for (int k : exps) {
    if (k < 0) continue;
    if ((2 * k) % exponent_N != 0) return false;
  }
  return true;
}

int DirichletCharacter::order() const {
  int g = exponent_N;
  for (int k : exps) {
    if (k > 0) g = std::gcd(g, k);
  }
  return exponent_N / g;
}

std::vector<DirichletCharacter> characters_mod(int m) {
  if (m < 1 || m > 100) {
    throw DomainError("characters_mod: modulus must lie in [1, 100]");
  }
  std::vector<CyclicPart> parts = unit_group(m);
  long long N = 1;
  for (const auto& p : parts) N = std::lcm(N, p.order);

  // Exponent vectors of every unit, found by enumerating the whole
  // group through the generator tuples once (sizes are at most 96).
  std::vector<std::vector<int>> logs(static_cast<size_t>(m));
  {
    size_t total = 1;
    for (const auto& p : parts) total *= static_cast<size_t>(p.order);
    for (size_t t = 0; t < total; ++t) {
      size_t rem = t;
      long long x = 1 % m;
      std::vector<int> e(parts.size());
      for (size_t j = 0; j < parts.size(); ++j) {
        int ej = static_cast<int>(rem % parts[j].order);
        rem /= parts[j].order;
        e[j] = ej;
        x = x * mod_pow(parts[j].gen, ej, m) % m;
      }
      logs[static_cast<size_t>(x)] = e;
    }
  }

  std::vector<DirichletCharacter> out;
  size_t count = 1;
  for (const auto& p : parts) count *= static_cast<size_t>(p.order);
  for (size_t t = 0; t < count; ++t) {
    size_t rem = t;
    std::vector<int> c(parts.size());
    for (size_t j = 0; j < parts.size(); ++j) {
      c[j] = static_cast<int>(rem % parts[j].order);
      rem /= parts[j].order;
    }
    DirichletCharacter chi;
    chi.modulus = m;
    chi.exponent_N = static_cast<int>(N);
    chi.exps.assign(static_cast<size_t>(m), -1);
    bool principal = true;
    for (int a = 0; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      long long k = 0;
      for (size_t j = 0; j < parts.size(); ++j) {
        k += static_cast<long long>(c[j]) * logs[a][j] *
             (N / parts[j].order);
      }
      int kk = static_cast<int>(k % N);
      chi.exps[static_cast<size_t>(a)] = kk;
      if (kk != 0) principal = false;
    }
    if (m == 1) chi.exps.assign(1, 0);
    chi.is_principal = principal;
    // Conductor: smallest f | m with chi trivial on units = 1 mod f.
    chi.conductor = m;
    for (int f = 1; f <= m; ++f) {
      if (m % f != 0) continue;
      bool trivial = true;
      for (int a = 1; a < m && trivial; ++a) {
        if (std::gcd(a, m) != 1) continue;
        if (a % f == 1 % f && chi.exps[static_cast<size_t>(a)] != 0) {
          trivial = false;
        }
      }
      if (trivial) {
        chi.conductor = f;
        break;
      }
    }
    out.push_back(std::move(chi));
  }
  return out;
}

int kronecker_symbol(long long a, long long n) {
  static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  int k = 1;
  if (v % 2 == 1) k = tab2[((a % 8) + 8) % 8];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  for (;;) {
    if (a == 0) return n > 1 ? 0 : k;
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) k *= tab2[((n % 8) + 8) % 8];
    // Reciprocity flip on two residues 3 mod 4; a may be negative.
    if ((((a % 4) + 4) % 4) == 3 && ((n % 4) + 4) % 4 == 3) k = -k;
    long long r = a < 0 ? -a : a;
    a = n % r;
    n = r;
  }
}

namespace {

bool is_squarefree(long long n) {
  for (long long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

bool is_fundamental_discriminant(long d) {
  if (d == 1) return false;
  long long m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return is_squarefree(std::llabs(d));
  if (m4 == 0) {
    long long q = d / 4;
    long long qm4 = ((q % 4) + 4) % 4;
    return (qm4 == 2 || qm4 == 3) && is_squarefree(std::llabs(q));
  }
  return false;
}

}  // namespace

DirichletCharacter kronecker_character(long d) {
  if (std::labs(d) > 100 || !is_fundamental_discriminant(d)) {
    throw DomainError("kronecker_character: " + std::to_string(d) +
                      " is not a fundamental discriminant in range");
  }
  int m = static_cast<int>(std::labs(d));
  DirichletCharacter chi;
  chi.modulus = m;
  chi.exponent_N = 2;
  chi.exps.assign(static_cast<size_t>(m), -1);
  bool principal = true;
  for (int a = 0; a < m; ++a) {
    int v = kronecker_symbol(d, a);
    if (v == 0) continue;
    chi.exps[static_cast<size_t>(a)] = v == 1 ? 0 : 1;
    if (v != 1) principal = false;
  }
  chi.is_principal = principal;
  chi.conductor = m;
  return chi;
}

DirichletCharacter primitive_from(const DirichletCharacter& chi) {
  int f = chi.conductor;
  if (f == chi.modulus) return chi;
  DirichletCharacter out;
  out.modulus = f;
  out.exponent_N = chi.exponent_N;
  out.exps.assign(static_cast<size_t>(f), -1);
  bool principal = true;
  for (int b = 0; b < f; ++b) {
    if (std::gcd(b, f) != 1) continue;
    // Find a lift of b coprime to the original modulus.
    int a = b;
    while (std::gcd(a, chi.modulus) != 1) a += f;
    int k = chi.exps[static_cast<size_t>(a % chi.modulus)];
    out.exps[static_cast<size_t>(b)] = k;
    if (k != 0) principal = false;
  }
  if (f == 1) out.exps.assign(1, 0);
  out.is_principal = principal;
  out.conductor = f;
  return out;
}

}  // namespace zetalab::fields
