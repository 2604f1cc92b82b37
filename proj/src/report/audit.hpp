#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace zetalab::report {

enum class Verdict { pass, fail, report_only };

const char* verdict_name(Verdict v);

// One audited claim. REPORT-ONLY marks claims that are recorded without
// being asserted; they never affect process exit codes.
struct AuditRecord {
  std::string claim_id;
  std::string paper_ref;
  std::map<std::string, std::string> inputs;
  Complex value{0.0, 0.0};
  bool value_is_real = true;
  double tolerance = 0.0;
  Verdict verdict = Verdict::report_only;
  long runtime_ms = 0;
};

struct Summary {
  long pass = 0;
  long fail = 0;
  long report_only = 0;
};

void sort_records(std::vector<AuditRecord>* records);
Summary summarize(const std::vector<AuditRecord>& records);

// Flat JSON array, records sorted by claim_id. Byte-deterministic for
// identical inputs.
std::string to_json(std::vector<AuditRecord> records);

// CSV with RFC-style quoting, columns
// claim_id,paper_ref,inputs,value,tolerance,verdict,runtime_ms.
std::string to_csv(std::vector<AuditRecord> records);

std::string format_real(double x);
std::string format_value(const AuditRecord& r);

struct SuiteOptions {
  // Empty selects each suite's default coverage; a label narrows the
  // field-dependent suites to that field.
  std::string field_label;
  double t_min = 10.0;
  double t_max = 30.0;
  double grid_step = 0.05;
  double tolerance_scale = 1.0;
  std::uint64_t seed = 20260816;
  long mc_samples = 100000;
};

}  // namespace zetalab::report
