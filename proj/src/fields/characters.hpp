#pragma once

#include "core/types.hpp"

#include <vector>

namespace zetalab::fields {

// Dirichlet character stored exactly: for a coprime to the modulus the
// value is e^{2 pi i k(a) / N} with integer exponents k(a) and a common
// denominator N (the exponent of the unit group). Non-coprime residues
// hold exponent -1 and value 0. Orthogonality and conductor questions
// reduce to integer arithmetic on the exponents.
struct DirichletCharacter {
  int modulus = 1;
  int exponent_N = 1;
  std::vector<int> exps;  // size modulus, index a in [0, modulus)
  bool is_principal = true;
  int conductor = 1;

  Complex value(long a) const;
  bool is_real() const;
  // Order of the character in the dual group.
  int order() const;
};

// All characters mod m in a deterministic order (lexicographic over the
// cyclic decomposition of (Z/m)*). Requires 1 <= m <= 100.
std::vector<DirichletCharacter> characters_mod(int m);

// Kronecker symbol (a|n), full domain.
int kronecker_symbol(long long a, long long n);

// The real primitive character mod |d| attached to a fundamental
// discriminant d with |d| <= 100. Throws DomainError when d is not a
// fundamental discriminant.
DirichletCharacter kronecker_character(long d);

// The primitive character inducing chi, as a character mod conductor.
DirichletCharacter primitive_from(const DirichletCharacter& chi);

}  // namespace zetalab::fields
