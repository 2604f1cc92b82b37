#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "zeta_audit.h"

namespace {

// Owns a string returned by the library.
struct Scoped {
  char* ptr = nullptr;
  explicit Scoped(char* p = nullptr) : ptr(p) {}
  ~Scoped() { za_string_free(ptr); }
  Scoped(const Scoped&) = delete;
  Scoped& operator=(const Scoped&) = delete;
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

}  // namespace

TEST_CASE("version and catalogue round-trip") {
  CHECK(za_version() != nullptr);
  Scoped cat(za_catalogue_json());
  REQUIRE(cat.ptr != nullptr);
  const auto parsed = nlohmann::json::parse(cat.str());
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() >= 10);
  bool has_qi = false;
  for (const auto& item : parsed) {
    if (item["label"] == "Q(i)") has_qi = true;
  }
  CHECK(has_qi);
}

TEST_CASE("field handles open, close and reject unknown labels") {
  za_field* f = nullptr;
  REQUIRE(za_field_open("Q(i)", &f) == ZA_OK);
  CHECK(f != nullptr);
  za_field_close(f);

  za_field* bad = nullptr;
  CHECK(za_field_open("Q(sqrt(99))", &bad) == ZA_ERR_DOMAIN);
  CHECK(bad == nullptr);
  const std::string msg = za_last_error();
  CHECK(!msg.empty());
}

TEST_CASE("scalar evaluations through the boundary") {
  double re = 0.0, im = 0.0;
  REQUIRE(za_riemann_zeta(2.0, 0.0, &re, &im) == ZA_OK);
  CHECK(std::fabs(re - 1.6449340668482264) < 1e-12);
  CHECK(std::fabs(im) < 1e-14);

  za_field* qi = nullptr;
  REQUIRE(za_field_open("Q(i)", &qi) == ZA_OK);
  REQUIRE(za_dedekind_zeta(qi, 2.0, 0.0, &re, &im) == ZA_OK);
  CHECK(std::fabs(re - 1.50670300992298503) < 1e-11);
  REQUIRE(za_ideal_count_zeta(qi, 2.0, 0.0, 100000, &re, &im) == ZA_OK);
  CHECK(std::fabs(re - 1.50670300992298503) < 1e-4);

  double residual = -1.0;
  REQUIRE(za_fe_residual(qi, 0.3, 4.0, &residual) == ZA_OK);
  CHECK(residual < 1e-8);
  REQUIRE(za_completed_zeta(qi, 2.0, 0.0, &re, &im) == ZA_OK);
  CHECK(std::isfinite(re));

  // The pole reports a domain error, not a crash.
  CHECK(za_dedekind_zeta(qi, 1.0, 0.0, &re, &im) == ZA_ERR_DOMAIN);
  za_field_close(qi);
}

TEST_CASE("zero scan list mirrors the classical ordinates") {
  za_field* q = nullptr;
  REQUIRE(za_field_open("Q", &q) == ZA_OK);
  za_zero_list* zeros = nullptr;
  REQUIRE(za_scan_zeros(q, 10.0, 30.0, 0.05, &zeros) == ZA_OK);
  CHECK(za_zero_count(zeros) == 3);
  double t = 0.0, refined = 1.0;
  REQUIRE(za_zero_get(zeros, 0, &t, &refined) == ZA_OK);
  CHECK(std::fabs(t - 14.134725) < 1e-3);
  CHECK(refined <= 1e-6);
  CHECK(za_zero_get(zeros, 7, &t, &refined) == ZA_ERR_INVALID_ARGUMENT);
  za_zero_list_free(zeros);
  za_field_close(q);
}

TEST_CASE("run configuration validates keys and values") {
  za_run* run = nullptr;
  REQUIRE(za_run_open(&run) == ZA_OK);
  CHECK(za_run_set(run, "seed", "123") == ZA_OK);
  CHECK(za_run_set(run, "grid_step", "0.1") == ZA_OK);
  CHECK(za_run_set(run, "bogus", "1") == ZA_ERR_INVALID_ARGUMENT);
  const std::string msg = za_last_error();
  CHECK(msg.find("bogus") != std::string::npos);
  CHECK(za_run_set(run, "seed", "not-a-number") ==
        ZA_ERR_INVALID_ARGUMENT);
  CHECK(za_run_set(run, "threads", "200") == ZA_ERR_INVALID_ARGUMENT);
  za_run_close(run);
}

TEST_CASE("suite names are exposed newline-joined") {
  Scoped names(za_suite_names());
  REQUIRE(names.ptr != nullptr);
  const std::string joined = names.str();
  for (const char* expect :
       {"fe", "zeros", "face", "trace", "amplitude", "fourier", "mellin",
        "padic", "quat", "weil"}) {
    CHECK(joined.find(expect) != std::string::npos);
  }
}

TEST_CASE("executing a suite yields records and counts") {
  za_run* run = nullptr;
  REQUIRE(za_run_open(&run) == ZA_OK);
  REQUIRE(za_run_execute(run, "padic") == ZA_OK);
  long pass = -1, fail = -1, report = -1;
  za_run_counts(run, &pass, &fail, &report);
  CHECK(pass > 10);
  CHECK(fail == 0);

  Scoped json_text(za_run_records_json(run));
  REQUIRE(json_text.ptr != nullptr);
  const auto parsed = nlohmann::json::parse(json_text.str());
  CHECK(parsed.size() == static_cast<size_t>(pass + fail + report));

  Scoped same_suite(za_run_records_csv(run, "padic"));
  const std::string csv = same_suite.str();
  CHECK(csv.find("padic.vpq.twelve") != std::string::npos);

  // A prefix with no matching records keeps only the header line.
  Scoped other_suite(za_run_records_csv(run, "quat"));
  const std::string empty_csv = other_suite.str();
  CHECK(empty_csv.find("quat.") == std::string::npos);
  CHECK(empty_csv.find("claim_id") != std::string::npos);

  CHECK(za_run_execute(run, "not-a-suite") == ZA_ERR_INVALID_ARGUMENT);
  za_run_close(run);
}

TEST_CASE("null argument handling stays inside error codes") {
  CHECK(za_field_open(nullptr, nullptr) == ZA_ERR_INVALID_ARGUMENT);
  CHECK(za_riemann_zeta(2.0, 0.0, nullptr, nullptr) ==
        ZA_ERR_INVALID_ARGUMENT);
  CHECK(za_run_execute(nullptr, "padic") == ZA_ERR_INVALID_ARGUMENT);
  Scoped none(za_run_records_json(nullptr));
  const auto parsed = nlohmann::json::parse(none.str());
  CHECK(parsed.is_array());
  CHECK(parsed.empty());
}
