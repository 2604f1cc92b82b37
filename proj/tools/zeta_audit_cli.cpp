#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "zeta_audit.h"

namespace {

struct CliOptions {
  std::string field;
  std::string range;
  std::string format = "json";
  std::string out_dir;
  std::string config_path;
  double grid_step = 0.0;
  double tolerance_scale = 0.0;
  std::uint64_t seed = 0;
  bool field_set = false;
  bool range_set = false;
  bool grid_set = false;
  bool tolerance_set = false;
  bool seed_set = false;
  bool format_set = false;
};

struct ScopedString {
  char* s = nullptr;
  ~ScopedString() { za_string_free(s); }
};

bool parse_range(const std::string& text, double* lo, double* hi) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    size_t used = 0;
    *lo = std::stod(text.substr(0, colon), &used);
    if (used != colon) return false;
    const std::string rest = text.substr(colon + 1);
    *hi = std::stod(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// INI-style file: key = value lines, # or ; comments, optional [section]
// headers. Returns 0 on success, 2 on error (message already printed).
int parse_config(const std::string& path,
                 std::vector<std::pair<std::string, std::string>>* out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "config error: cannot open '" << path << "'\n";
    return 2;
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[' && t.back() == ']') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      std::cerr << "config error: line " << line_no
                << " is not a key = value pair: " << t << "\n";
      return 2;
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      std::cerr << "config error: empty key on line " << line_no << "\n";
      return 2;
    }
    out->emplace_back(key, value);
  }
  return 0;
}

int write_file(const std::string& dir, const std::string& name,
               const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    return 1;
  }
  f << content;
  return 0;
}

// Known config keys that belong to the CLI rather than the library.
bool cli_config_key(const std::string& key, const std::string& value,
                    CliOptions* o) {
  if (key == "format") {
    if (!o->format_set) o->format = value;
    return true;
  }
  if (key == "out") {
    if (o->out_dir.empty()) o->out_dir = value;
    return true;
  }
  return false;
}

int apply_settings(za_run* run, CliOptions* o) {
  if (!o->config_path.empty()) {
    std::vector<std::pair<std::string, std::string>> pairs;
    const int rc = parse_config(o->config_path, &pairs);
    if (rc != 0) return rc;
    for (const auto& [key, value] : pairs) {
      if (cli_config_key(key, value, o)) continue;
      if (za_run_set(run, key.c_str(), value.c_str()) != ZA_OK) {
        std::cerr << "config error: " << za_last_error() << "\n";
        return 2;
      }
    }
  }
  if (o->format != "json" && o->format != "csv") {
    std::cerr << "config error: invalid value for 'format': " << o->format
              << "\n";
    return 2;
  }
  auto set = [&](const char* key, const std::string& value) {
    if (za_run_set(run, key, value.c_str()) != ZA_OK) {
      std::cerr << "error: " << za_last_error() << "\n";
      return 2;
    }
    return 0;
  };
  if (o->field_set) {
    if (const int rc = set("field", o->field)) return rc;
  }
  if (o->range_set) {
    double lo = 0.0, hi = 0.0;
    if (!parse_range(o->range, &lo, &hi)) {
      std::cerr << "error: --range expects LO:HI, got '" << o->range << "'\n";
      return 2;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", lo);
    if (const int rc = set("t_min", buf)) return rc;
    std::snprintf(buf, sizeof buf, "%.17g", hi);
    if (const int rc = set("t_max", buf)) return rc;
  }
  if (o->grid_set) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", o->grid_step);
    if (const int rc = set("grid_step", buf)) return rc;
  }
  if (o->tolerance_set) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", o->tolerance_scale);
    if (const int rc = set("tolerance_scale", buf)) return rc;
  }
  if (o->seed_set) {
    if (const int rc = set("seed", std::to_string(o->seed))) return rc;
  }
  return 0;
}

int run_suite_command(const std::string& suite, CliOptions o) {
  za_run* run = nullptr;
  if (za_run_open(&run) != ZA_OK) {
    std::cerr << "error: " << za_last_error() << "\n";
    return 1;
  }
  struct Closer {
    za_run* r;
    ~Closer() { za_run_close(r); }
  } closer{run};

  if (const int rc = apply_settings(run, &o)) return rc;

  const bool is_all = suite == "all";
  const auto started = std::chrono::steady_clock::now();
  const za_status st = za_run_execute(run, suite.c_str());
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  if (st != ZA_OK) {
    std::cerr << "error: " << za_last_error() << "\n";
    return (st == ZA_ERR_INVALID_ARGUMENT || st == ZA_ERR_DOMAIN) ? 2 : 1;
  }

  long pass = 0, fail = 0, report_only = 0;
  za_run_counts(run, &pass, &fail, &report_only);

  if (is_all) {
    const std::string dir = o.out_dir.empty() ? "." : o.out_dir;
    if (o.format == "json") {
      ScopedString json{za_run_records_json(run)};
      if (write_file(dir, "audit.json", json.s ? json.s : "") != 0) return 1;
    } else {
      ScopedString names{za_suite_names()};
      std::istringstream ss(names.s ? names.s : "");
      std::string name;
      while (std::getline(ss, name)) {
        ScopedString csv{za_run_records_csv(run, name.c_str())};
        if (write_file(dir, name + ".csv", csv.s ? csv.s : "") != 0) return 1;
      }
    }
    std::cout << "PASS " << pass << "\n"
              << "FAIL " << fail << "\n"
              << "REPORT-ONLY " << report_only << "\n"
              << "total_runtime_ms " << elapsed << "\n";
  } else {
    ScopedString body{o.format == "json" ? za_run_records_json(run)
                                         : za_run_records_csv(run, nullptr)};
    const std::string content = body.s ? body.s : "";
    if (o.out_dir.empty()) {
      std::cout << content;
    } else {
      const std::string name = suite + (o.format == "json" ? ".json" : ".csv");
      if (write_file(o.out_dir, name, content) != 0) return 1;
    }
  }
  return fail > 0 ? 1 : 0;
}

int run_zeros_command(CliOptions o) {
  za_run* probe = nullptr;
  if (za_run_open(&probe) != ZA_OK) {
    std::cerr << "error: " << za_last_error() << "\n";
    return 1;
  }
  struct Closer {
    za_run* r;
    ~Closer() { za_run_close(r); }
  } closer{probe};
  // Validates config keys and collects range defaults.
  if (const int rc = apply_settings(probe, &o)) return rc;

  std::string field = o.field_set ? o.field : "Q";
  double lo = 10.0, hi = 30.0, step = 0.05;
  if (o.range_set && !parse_range(o.range, &lo, &hi)) return 2;
  if (o.grid_set) step = o.grid_step;
  if (!o.config_path.empty()) {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (parse_config(o.config_path, &pairs) != 0) return 2;
    for (const auto& [key, value] : pairs) {
      try {
        if (key == "field" && !o.field_set) field = value;
        if (key == "t_min" && !o.range_set) lo = std::stod(value);
        if (key == "t_max" && !o.range_set) hi = std::stod(value);
        if (key == "grid_step" && !o.grid_set) step = std::stod(value);
      } catch (const std::exception&) {
        std::cerr << "config error: invalid value for '" << key << "'\n";
        return 2;
      }
    }
  }

  za_field* f = nullptr;
  if (za_field_open(field.c_str(), &f) != ZA_OK) {
    std::cerr << "error: " << za_last_error() << "\n";
    return 2;
  }
  struct FieldCloser {
    za_field* f;
    ~FieldCloser() { za_field_close(f); }
  } fc{f};

  za_zero_list* zl = nullptr;
  if (za_scan_zeros(f, lo, hi, step, &zl) != ZA_OK) {
    std::cerr << "error: " << za_last_error() << "\n";
    return 1;
  }
  struct ListCloser {
    za_zero_list* z;
    ~ListCloser() { za_zero_list_free(z); }
  } lc{zl};

  std::string csv = "field,t,err\n";
  for (size_t i = 0; i < za_zero_count(zl); ++i) {
    double t = 0.0, err = 0.0;
    za_zero_get(zl, i, &t, &err);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s,%.9f,%.3g\n", field.c_str(), t, err);
    csv += buf;
  }
  if (o.out_dir.empty()) {
    std::cout << csv;
  } else if (write_file(o.out_dir, "zeros.csv", csv) != 0) {
    return 1;
  }
  return 0;
}

void add_common_options(CLI::App* cmd, CliOptions* o, bool with_format) {
  cmd->add_option("--field", o->field, "Field label from the catalogue")
      ->each([o](const std::string&) { o->field_set = true; });
  cmd->add_option("--range", o->range, "Ordinate range LO:HI")
      ->each([o](const std::string&) { o->range_set = true; });
  cmd->add_option("--grid", o->grid_step, "Scan step")
      ->each([o](const std::string&) { o->grid_set = true; });
  cmd->add_option("--tolerance", o->tolerance_scale,
                  "Scale factor applied to every pass tolerance")
      ->each([o](const std::string&) { o->tolerance_set = true; });
  cmd->add_option("--seed", o->seed, "Seed for the randomized checks")
      ->each([o](const std::string&) { o->seed_set = true; });
  if (with_format) {
    cmd->add_option("--format", o->format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->each([o](const std::string&) { o->format_set = true; });
  }
  cmd->add_option("--out", o->out_dir, "Directory for output files");
  cmd->add_option("--config", o->config_path, "INI-style configuration file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audit toolkit for completed Dedekind zeta identities"};
  app.require_subcommand(1);

  struct Entry {
    const char* command;
    const char* suite;
    const char* blurb;
  };
  const Entry entries[] = {
      {"fe-audit", "fe", "Functional-equation and completed-zeta checks"},
      {"face-audit", "face", "Both-route checks of the completed identity"},
      {"trace", "trace", "Oscillatory trace grid and linear-system checks"},
      {"amplitude", "amplitude", "Amplitude validation and positivity checks"},
      {"fourier-audit", "fourier", "Fourier, theta, and Poisson checks"},
      {"mellin-audit", "mellin", "Mellin transform checks"},
      {"padic", "padic", "Exact p-adic valuation checks"},
      {"quat", "quat", "Quaternion Haar module checks"},
      {"weil", "weil", "Zero-side trace checks"},
      {"all", "all", "Every suite; writes artifacts and prints a summary"},
  };

  std::vector<std::pair<CLI::App*, CliOptions>> suite_cmds;
  suite_cmds.reserve(std::size(entries));
  for (const auto& e : entries) {
    auto* cmd = app.add_subcommand(e.command, e.blurb);
    suite_cmds.emplace_back(cmd, CliOptions{});
  }
  for (size_t i = 0; i < suite_cmds.size(); ++i)
    add_common_options(suite_cmds[i].first, &suite_cmds[i].second, true);

  CliOptions zeros_opts;
  auto* zeros_cmd =
      app.add_subcommand("zeros", "Critical-line zero scan as CSV");
  add_common_options(zeros_cmd, &zeros_opts, false);

  auto* catalogue_cmd =
      app.add_subcommand("catalogue-dump", "Field catalogue as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (catalogue_cmd->parsed()) {
    ScopedString json{za_catalogue_json()};
    std::cout << (json.s ? json.s : "[]");
    return 0;
  }
  if (zeros_cmd->parsed()) return run_zeros_command(zeros_opts);
  for (size_t i = 0; i < suite_cmds.size(); ++i) {
    if (suite_cmds[i].first->parsed())
      return run_suite_command(entries[i].suite, suite_cmds[i].second);
  }
  return 2;
}
