#pragma once

#include "core/types.hpp"
#include "fields/catalogue.hpp"
#include "fields/characters.hpp"

namespace zetalab::lfun {

enum class Method {
  euler_maclaurin,
  hurwitz_sum,
  factorization,
  ideal_count_oracle,
};

struct LSeriesResult {
  Complex value{0.0, 0.0};
  Method method = Method::euler_maclaurin;
  double error_estimate = 0.0;
};

const char* method_name(Method m);

// Hurwitz zeta(s, a) for 0 < a <= 1, s != 1, by Euler-Maclaurin with
// eight Bernoulli correction terms and a length adapted to Im(s).
LSeriesResult hurwitz_zeta(Complex s, double a);

// Riemann zeta via the same engine at a = 1.
LSeriesResult riemann_zeta(Complex s);

// Dirichlet L-function. Nonprincipal characters work on the whole
// plane sampled here, including s = 1 (digamma path). For principal
// characters s = 1 is a pole and throws DomainError. Imprimitive
// characters give the imprimitive product (missing Euler factors are
// not reinstated).
LSeriesResult dirichlet_l(Complex s, const fields::DirichletCharacter& chi);

enum class ZetaRoute {
  auto_route,
  quadratic_product,        // zeta(s) * L(s, chi_d)
  primitive_product,        // prod over chi mod m of L(s, chi*)
  imprimitive_with_factors, // prod of imprimitive L times ramified factors
};

// Dedekind zeta of a catalogue field via its factorization into
// Dirichlet L-functions. Throws DomainError at the pole s = 1.
LSeriesResult dedekind_zeta(Complex s, const fields::NumberFieldDescriptor& k,
                            ZetaRoute route = ZetaRoute::auto_route);

// Truncated Dirichlet series over ideal norm counts, an oracle fully
// independent of the L-function machinery. Supported for Q, Q(i) and
// Q(sqrt(-3)) (and their aliases), Re(s) > 1. The error estimate is the
// smooth-density tail rho * cutoff^(1-sigma) / (sigma - 1).
LSeriesResult ideal_count_zeta(Complex s,
                               const fields::NumberFieldDescriptor& k,
                               long cutoff);

}  // namespace zetalab::lfun
