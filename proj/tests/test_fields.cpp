#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "doctest.h"

#include "core/types.hpp"
#include "fields/catalogue.hpp"
#include "fields/characters.hpp"

using namespace zetalab;
using namespace zetalab::fields;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("catalogue lists every label with consistent invariants") {
  const auto& labels = catalogue_labels();
  CHECK(labels.size() >= 10);
  std::set<std::string> canonical;
  for (const auto& label : labels) {
    const auto k = make_field(label);
    CHECK(k.label == label);
    CHECK(!k.canonical_label.empty());
    CHECK(k.degree_n == k.r1 + 2 * k.r2);
    CHECK(k.abs_discriminant >= 1);
    CHECK(k.class_number_h >= 1);
    CHECK(k.roots_of_unity_w >= 2);
    canonical.insert(k.canonical_label);
  }
  // Aliases fold into fewer canonical fields than listed labels.
  CHECK(canonical.size() <= labels.size());
  CHECK(canonical.count("Q") == 1);
  CHECK(canonical.count("Q(i)") == 1);
}

TEST_CASE("rational field invariants") {
  const auto q = make_field("Q");
  CHECK(q.degree_n == 1);
  CHECK(q.r1 == 1);
  CHECK(q.r2 == 0);
  CHECK(q.abs_discriminant == 1);
  CHECK(q.roots_of_unity_w == 2);
  CHECK(q.lambda() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gaussian field invariants and aliases") {
  const auto qi = make_field("Q(i)");
  CHECK(qi.degree_n == 2);
  CHECK(qi.r1 == 0);
  CHECK(qi.r2 == 1);
  CHECK(qi.abs_discriminant == 4);
  CHECK(qi.quadratic_d == -4);
  CHECK(qi.class_number_h == 1);
  CHECK(qi.roots_of_unity_w == 4);
  // lambda = 2^{r1} h R / w, the residue of the completed zeta.
  CHECK(qi.lambda() == doctest::Approx(0.25).epsilon(1e-15));

  const auto alias = make_field("Q(sqrt(-1))");
  CHECK(alias.canonical_label == "Q(i)");
  CHECK(alias.abs_discriminant == 4);

  const auto padded = make_field("  Q(i)  ");
  CHECK(padded.canonical_label == "Q(i)");
}

TEST_CASE("eisenstein and real quadratic invariants") {
  const auto e = make_field("Q(sqrt(-3))");
  CHECK(e.quadratic_d == -3);
  CHECK(e.roots_of_unity_w == 6);
  CHECK(e.lambda() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  const auto r5 = make_field("Q(sqrt(5))");
  CHECK(r5.r1 == 2);
  CHECK(r5.r2 == 0);
  CHECK(r5.quadratic_d == 5);
  const double golden = 0.5 * (1.0 + std::sqrt(5.0));
  CHECK(r5.regulator_R == doctest::Approx(std::log(golden)).epsilon(1e-12));
}

TEST_CASE("unknown labels throw with the catalogue in the message") {
  CHECK_THROWS_AS(make_field("Q(sqrt(17))"), DomainError);
  try {
    make_field("nonsense");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("Q(i)") != std::string::npos);
  }
}

TEST_CASE("kronecker character mod 4 matches the classical values") {
  const auto chi = kronecker_character(-4);
  CHECK(chi.modulus == 4);
  CHECK(chi.conductor == 4);
  CHECK(chi.is_real());
  CHECK(!chi.is_principal);
  CHECK(chi.value(1) == Complex(1.0, 0.0));
  CHECK(chi.value(3).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(chi.value(2) == Complex(0.0, 0.0));
  CHECK(chi.value(5).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(chi.order() == 2);
}

TEST_CASE("kronecker symbol agrees with quadratic reciprocity samples") {
  CHECK(kronecker_symbol(2, 7) == 1);
  CHECK(kronecker_symbol(3, 7) == -1);
  CHECK(kronecker_symbol(-4, 5) == 1);
  CHECK(kronecker_symbol(-4, 7) == -1);
  CHECK(kronecker_symbol(5, 5) == 0);
  CHECK(kronecker_symbol(-3, 7) == 1);
}

TEST_CASE("character groups are complete and orthogonal") {
  for (int m : {3, 4, 5, 8, 12}) {
    const auto chars = characters_mod(m);
    int phi = 0;
    for (int a = 1; a < m; ++a) {
      int g = std::gcd(a, m);
      if (g == 1) ++phi;
    }
    if (m == 1) phi = 1;
    CHECK(static_cast<int>(chars.size()) == phi);
    // Row orthogonality: sum over a of chi(a) is 0 unless principal.
    for (const auto& chi : chars) {
      Complex total(0.0, 0.0);
      for (int a = 0; a < m; ++a) total += chi.value(a);
      if (chi.is_principal) {
        CHECK(total.real() == doctest::Approx(phi).epsilon(1e-12));
      } else {
        CHECK(std::abs(total) < 1e-12);
      }
    }
  }
}

TEST_CASE("primitive part drops the principal wrapping") {
  const auto chars = characters_mod(8);
  for (const auto& chi : chars) {
    const auto prim = primitive_from(chi);
    CHECK(prim.modulus == chi.conductor);
    CHECK(prim.conductor == chi.conductor);
    if (chi.is_principal) CHECK(prim.modulus == 1);
  }
}
