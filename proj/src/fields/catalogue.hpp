#pragma once

#include <string>
#include <vector>

namespace zetalab::fields {

// Invariants of one number field from the built-in catalogue. degree_n
// always equals r1 + 2*r2. lambda() is recomputed from h, R, w on each
// call rather than stored.
struct NumberFieldDescriptor {
  std::string label;            // as requested, e.g. "Q(zeta_4)"
  std::string canonical_label;  // e.g. "Q(i)" for the alias above
  int degree_n = 1;
  int r1 = 1;
  int r2 = 0;
  long abs_discriminant = 1;
  int class_number_h = 1;
  double regulator_R = 1.0;
  int roots_of_unity_w = 2;
  // Signed fundamental discriminant for the quadratic fields, 0 for Q
  // and the quartic cyclotomics.
  long quadratic_d = 0;
  // Cyclotomic conductor m when the field is Q(zeta_m), else 0.
  int cyclotomic_m = 0;

  double lambda() const;
};

// Looks up a catalogue field by label. Labels are matched after
// trimming ASCII whitespace. Throws DomainError for unknown labels,
// with the known label list in the message.
NumberFieldDescriptor make_field(const std::string& label);

// All catalogue labels in declaration order.
const std::vector<std::string>& catalogue_labels();

}  // namespace zetalab::fields
