#include "fields/catalogue.hpp"

#include "core/types.hpp"

#include <algorithm>
#include <cmath>

namespace zetalab::fields {

namespace {

// Regulators of the real quadratic entries are log of the fundamental
// unit; the quartic cyclotomic values were cross-checked against the
// residue identity prod_{chi != chi0} L(1, chi*) = 2^r1 (2pi)^r2 h R /
// (w sqrt|d|), which also runs as a property test.
const double kLog1Sqrt2 = std::log(1.0 + std::sqrt(2.0));     // Q(sqrt(2))
const double kLog2Sqrt3 = std::log(2.0 + std::sqrt(3.0));     // Q(sqrt(3))
const double kLogGolden = std::log((1.0 + std::sqrt(5.0)) / 2.0);

std::vector<NumberFieldDescriptor> build_catalogue() {
  std::vector<NumberFieldDescriptor> cat;
  auto add = [&](const std::string& label, const std::string& canon, int n,
                 int r1, int r2, long absd, int h, double R, int w,
                 long qd, int cm) {
    NumberFieldDescriptor f;
    f.label = label;
    f.canonical_label = canon;
    f.degree_n = n;
    f.r1 = r1;
    f.r2 = r2;
    f.abs_discriminant = absd;
    f.class_number_h = h;
    f.regulator_R = R;
    f.roots_of_unity_w = w;
    f.quadratic_d = qd;
    f.cyclotomic_m = cm;
    cat.push_back(std::move(f));
  };

  add("Q", "Q", 1, 1, 0, 1, 1, 1.0, 2, 0, 0);

  add("Q(i)", "Q(i)", 2, 0, 1, 4, 1, 1.0, 4, -4, 4);
  add("Q(sqrt(-1))", "Q(i)", 2, 0, 1, 4, 1, 1.0, 4, -4, 4);
  add("Q(sqrt(-2))", "Q(sqrt(-2))", 2, 0, 1, 8, 1, 1.0, 2, -8, 0);
  add("Q(sqrt(-3))", "Q(sqrt(-3))", 2, 0, 1, 3, 1, 1.0, 6, -3, 3);
  add("Q(sqrt(-7))", "Q(sqrt(-7))", 2, 0, 1, 7, 1, 1.0, 2, -7, 0);
  add("Q(sqrt(-11))", "Q(sqrt(-11))", 2, 0, 1, 11, 1, 1.0, 2, -11, 0);

  add("Q(sqrt(2))", "Q(sqrt(2))", 2, 2, 0, 8, 1, kLog1Sqrt2, 2, 8, 0);
  add("Q(sqrt(3))", "Q(sqrt(3))", 2, 2, 0, 12, 1, kLog2Sqrt3, 2, 12, 0);
  add("Q(sqrt(5))", "Q(sqrt(5))", 2, 2, 0, 5, 1, kLogGolden, 2, 5, 0);

  add("Q(zeta_3)", "Q(sqrt(-3))", 2, 0, 1, 3, 1, 1.0, 6, -3, 3);
  add("Q(zeta_4)", "Q(i)", 2, 0, 1, 4, 1, 1.0, 4, -4, 4);
  add("Q(zeta_5)", "Q(zeta_5)", 4, 0, 2, 125, 1, 2.0 * kLogGolden, 10, 0, 5);
  add("Q(zeta_8)", "Q(zeta_8)", 4, 0, 2, 256, 1, 2.0 * kLog1Sqrt2, 8, 0, 8);
  add("Q(zeta_12)", "Q(zeta_12)", 4, 0, 2, 144, 1, kLog2Sqrt3, 12, 0, 12);

  return cat;
}

const std::vector<NumberFieldDescriptor>& catalogue() {
  static const std::vector<NumberFieldDescriptor> cat = build_catalogue();
  return cat;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

double NumberFieldDescriptor::lambda() const {
  return std::ldexp(1.0, r1) * class_number_h * regulator_R /
         roots_of_unity_w;
}

NumberFieldDescriptor make_field(const std::string& label) {
  std::string key = trim(label);
  for (const auto& f : catalogue()) {
    if (f.label == key) return f;
  }
  std::string known;
  for (const auto& f : catalogue()) {
    if (!known.empty()) known += ", ";
    known += f.label;
  }
  throw DomainError("make_field: unknown label '" + key +
                    "'; known labels: " + known);
}

const std::vector<std::string>& catalogue_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& f : catalogue()) out.push_back(f.label);
    return out;
  }();
  return labels;
}

}  // namespace zetalab::fields
