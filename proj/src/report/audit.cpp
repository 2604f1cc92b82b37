#include "report/audit.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace zetalab::report {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::report_only: return "REPORT-ONLY";
  }
  return "REPORT-ONLY";
}

void sort_records(std::vector<AuditRecord>* records) {
  std::stable_sort(records->begin(), records->end(),
                   [](const AuditRecord& a, const AuditRecord& b) {
                     return a.claim_id < b.claim_id;
                   });
}

Summary summarize(const std::vector<AuditRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::report_only: ++s.report_only; break;
    }
  }
  return s;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_value(const AuditRecord& r) {
  if (r.value_is_real) {
    return format_real(r.value.real());
  }
  return format_real(r.value.real()) + (r.value.imag() < 0 ? "" : "+") +
         format_real(r.value.imag()) + "i";
}

std::string to_json(std::vector<AuditRecord> records) {
  sort_records(&records);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& kv : r.inputs) {
      inputs[kv.first] = kv.second;
    }
    nlohmann::json rec = {
        {"claim_id", r.claim_id},
        {"paper_ref", r.paper_ref},
        {"inputs", inputs},
        {"tolerance", r.tolerance},
        {"verdict", verdict_name(r.verdict)},
        {"runtime_ms", r.runtime_ms},
    };
    if (r.value_is_real) {
      rec["value"] = r.value.real();
    } else {
      rec["value"] = {r.value.real(), r.value.imag()};
    }
    arr.push_back(rec);
  }
  return arr.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& field) {
  bool needs = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_inputs(const std::map<std::string, std::string>& inputs) {
  std::string out;
  for (const auto& kv : inputs) {
    if (!out.empty()) out += ';';
    out += kv.first + "=" + kv.second;
  }
  return out;
}

}  // namespace

std::string to_csv(std::vector<AuditRecord> records) {
  sort_records(&records);
  std::string out =
      "claim_id,paper_ref,inputs,value,tolerance,verdict,runtime_ms\n";
  for (const auto& r : records) {
    out += csv_quote(r.claim_id);
    out += ',';
    out += csv_quote(r.paper_ref);
    out += ',';
    out += csv_quote(join_inputs(r.inputs));
    out += ',';
    out += csv_quote(format_value(r));
    out += ',';
    out += format_real(r.tolerance);
    out += ',';
    out += verdict_name(r.verdict);
    out += ',';
    out += std::to_string(r.runtime_ms);
    out += '\n';
  }
  return out;
}

}  // namespace zetalab::report
