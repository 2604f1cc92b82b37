#include "zeta_audit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"

#include "core/types.hpp"
#include "fe/completed.hpp"
#include "fields/catalogue.hpp"
#include "lfun/lfunctions.hpp"
#include "report/audit.hpp"
#include "report/suites.hpp"

using zetalab::Complex;
using zetalab::DomainError;
using zetalab::NumericError;

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

za_status fail(za_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
za_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    return fail(ZA_ERR_DOMAIN, e.what());
  } catch (const NumericError& e) {
    return fail(ZA_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZA_ERR_INTERNAL, e.what());
  }
}

za_status write_complex(Complex value, double* out_re, double* out_im) {
  if (out_re == nullptr || out_im == nullptr)
    return fail(ZA_ERR_INVALID_ARGUMENT, "null output pointer");
  *out_re = value.real();
  *out_im = value.imag();
  return ZA_OK;
}

}  // namespace

struct za_field {
  zetalab::fields::NumberFieldDescriptor descriptor;
};

struct za_zero_list {
  std::vector<zetalab::fe::ZeroRecord> zeros;
};

struct za_run {
  zetalab::report::SuiteOptions options;
  int threads = 0;
  std::vector<zetalab::report::AuditRecord> records;
  bool executed = false;
};

extern "C" {

const char* za_version(void) { return "0.1.0"; }

const char* za_last_error(void) { return g_last_error.c_str(); }

void za_string_free(char* s) { std::free(s); }

za_status za_field_open(const char* label, za_field** out) {
  if (label == nullptr || out == nullptr)
    return fail(ZA_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* f = new za_field{zetalab::fields::make_field(label)};
    *out = f;
    return ZA_OK;
  });
}

void za_field_close(za_field* f) { delete f; }

char* za_catalogue_json(void) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& label : zetalab::fields::catalogue_labels()) {
    const auto k = zetalab::fields::make_field(label);
    nlohmann::ordered_json row;
    row["label"] = k.label;
    row["canonical_label"] = k.canonical_label;
    row["degree"] = k.degree_n;
    row["r1"] = k.r1;
    row["r2"] = k.r2;
    row["abs_discriminant"] = k.abs_discriminant;
    row["class_number"] = k.class_number_h;
    row["regulator"] = k.regulator_R;
    row["roots_of_unity"] = k.roots_of_unity_w;
    row["lambda"] = k.lambda();
    arr.push_back(std::move(row));
  }
  return copy_out(arr.dump(2) + "\n");
}

za_status za_riemann_zeta(double re, double im, double* out_re,
                          double* out_im) {
  return guarded([&] {
    const auto r = zetalab::lfun::riemann_zeta(Complex(re, im));
    return write_complex(r.value, out_re, out_im);
  });
}

za_status za_completed_zeta(const za_field* f, double re, double im,
                            double* out_re, double* out_im) {
  if (f == nullptr) return fail(ZA_ERR_INVALID_ARGUMENT, "null field");
  return guarded([&] {
    return write_complex(
        zetalab::fe::completed_zeta(Complex(re, im), f->descriptor), out_re,
        out_im);
  });
}

za_status za_fe_residual(const za_field* f, double re, double im,
                         double* out) {
  if (f == nullptr || out == nullptr)
    return fail(ZA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = zetalab::fe::fe_residual(Complex(re, im), f->descriptor);
    return ZA_OK;
  });
}

za_status za_dedekind_zeta(const za_field* f, double re, double im,
                           double* out_re, double* out_im) {
  if (f == nullptr) return fail(ZA_ERR_INVALID_ARGUMENT, "null field");
  return guarded([&] {
    const auto r =
        zetalab::lfun::dedekind_zeta(Complex(re, im), f->descriptor);
    return write_complex(r.value, out_re, out_im);
  });
}

za_status za_ideal_count_zeta(const za_field* f, double re, double im,
                              long cutoff, double* out_re, double* out_im) {
  if (f == nullptr) return fail(ZA_ERR_INVALID_ARGUMENT, "null field");
  return guarded([&] {
    const auto r = zetalab::lfun::ideal_count_zeta(Complex(re, im),
                                                   f->descriptor, cutoff);
    return write_complex(r.value, out_re, out_im);
  });
}

za_status za_scan_zeros(const za_field* f, double t_min, double t_max,
                        double step, za_zero_list** out) {
  if (f == nullptr || out == nullptr)
    return fail(ZA_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* zl = new za_zero_list{
        zetalab::fe::scan_zeros(f->descriptor, t_min, t_max, step)};
    *out = zl;
    return ZA_OK;
  });
}

size_t za_zero_count(const za_zero_list* zl) {
  return zl == nullptr ? 0 : zl->zeros.size();
}

za_status za_zero_get(const za_zero_list* zl, size_t index, double* t,
                      double* refined_to) {
  if (zl == nullptr || t == nullptr || refined_to == nullptr)
    return fail(ZA_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= zl->zeros.size())
    return fail(ZA_ERR_INVALID_ARGUMENT, "zero index out of range");
  *t = zl->zeros[index].ordinate_t;
  *refined_to = zl->zeros[index].refined_to;
  return ZA_OK;
}

void za_zero_list_free(za_zero_list* zl) { delete zl; }

za_status za_run_open(za_run** out) {
  if (out == nullptr) return fail(ZA_ERR_INVALID_ARGUMENT, "null argument");
  *out = new za_run();
  return ZA_OK;
}

void za_run_close(za_run* r) { delete r; }

za_status za_run_set(za_run* r, const char* key, const char* value) {
  if (r == nullptr || key == nullptr || value == nullptr)
    return fail(ZA_ERR_INVALID_ARGUMENT, "null argument");
  const std::string k = key;
  const std::string v = value;
  auto as_double = [&](double* slot) {
    try {
      size_t used = 0;
      const double parsed = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      *slot = parsed;
      return ZA_OK;
    } catch (const std::exception&) {
      return fail(ZA_ERR_INVALID_ARGUMENT,
                  "invalid value for '" + k + "': " + v);
    }
  };
  auto as_long = [&](long long* slot) {
    try {
      size_t used = 0;
      const long long parsed = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      *slot = parsed;
      return ZA_OK;
    } catch (const std::exception&) {
      return fail(ZA_ERR_INVALID_ARGUMENT,
                  "invalid value for '" + k + "': " + v);
    }
  };

  if (k == "field") {
    r->options.field_label = v;
    return ZA_OK;
  }
  if (k == "t_min") return as_double(&r->options.t_min);
  if (k == "t_max") return as_double(&r->options.t_max);
  if (k == "grid_step") return as_double(&r->options.grid_step);
  if (k == "tolerance_scale") return as_double(&r->options.tolerance_scale);
  if (k == "seed") {
    long long n = 0;
    const za_status st = as_long(&n);
    if (st != ZA_OK) return st;
    if (n < 0) return fail(ZA_ERR_INVALID_ARGUMENT, "seed must be >= 0");
    r->options.seed = static_cast<std::uint64_t>(n);
    return ZA_OK;
  }
  if (k == "mc_samples") {
    long long n = 0;
    const za_status st = as_long(&n);
    if (st != ZA_OK) return st;
    if (n < 100) return fail(ZA_ERR_INVALID_ARGUMENT, "mc_samples too small");
    r->options.mc_samples = static_cast<long>(n);
    return ZA_OK;
  }
  if (k == "threads") {
    long long n = 0;
    const za_status st = as_long(&n);
    if (st != ZA_OK) return st;
    if (n < 0 || n > 64)
      return fail(ZA_ERR_INVALID_ARGUMENT, "threads must be in [0, 64]");
    r->threads = static_cast<int>(n);
    return ZA_OK;
  }
  return fail(ZA_ERR_INVALID_ARGUMENT, "unknown key '" + k + "'");
}

char* za_suite_names(void) {
  std::string joined;
  for (const auto& name : zetalab::report::suite_names()) {
    if (!joined.empty()) joined += '\n';
    joined += name;
  }
  return copy_out(joined);
}

za_status za_run_execute(za_run* r, const char* suite) {
  if (r == nullptr || suite == nullptr)
    return fail(ZA_ERR_INVALID_ARGUMENT, "null argument");
  const std::string name = suite;
  return guarded([&] {
    if (name == "all") {
      r->records = zetalab::report::run_all(r->options, r->threads);
    } else if (zetalab::report::is_suite(name)) {
      r->records = zetalab::report::run_suite(name, r->options);
    } else {
      return fail(ZA_ERR_INVALID_ARGUMENT, "unknown suite '" + name + "'");
    }
    r->executed = true;
    return ZA_OK;
  });
}

char* za_run_records_json(const za_run* r) {
  if (r == nullptr || !r->executed) return copy_out("[]\n");
  return copy_out(zetalab::report::to_json(r->records));
}

char* za_run_records_csv(const za_run* r, const char* suite) {
  if (r == nullptr || !r->executed)
    return copy_out(zetalab::report::to_csv({}));
  if (suite == nullptr || suite[0] == '\0')
    return copy_out(zetalab::report::to_csv(r->records));
  const std::string prefix = std::string(suite) + ".";
  std::vector<zetalab::report::AuditRecord> subset;
  for (const auto& rec : r->records)
    if (rec.claim_id.rfind(prefix, 0) == 0) subset.push_back(rec);
  return copy_out(zetalab::report::to_csv(subset));
}

void za_run_counts(const za_run* r, long* pass, long* fail_count,
                   long* report_only) {
  long p = 0, f = 0, ro = 0;
  if (r != nullptr) {
    const auto s = zetalab::report::summarize(r->records);
    p = s.pass;
    f = s.fail;
    ro = s.report_only;
  }
  if (pass != nullptr) *pass = p;
  if (fail_count != nullptr) *fail_count = f;
  if (report_only != nullptr) *report_only = ro;
}

}  // extern "C"
