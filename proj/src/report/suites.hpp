#pragma once

#include <string>
#include <vector>

#include "report/audit.hpp"

namespace zetalab::report {

// Suite names in execution order: fe, zeros, face, trace, amplitude,
// fourier, mellin, padic, quat, weil.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

// Runs one named suite and returns its records sorted by claim_id.
// Throws DomainError for unknown suite names.
std::vector<AuditRecord> run_suite(const std::string& name,
                                   const SuiteOptions& options);

// Runs every suite, dispatching across workers, and returns the merged
// record list sorted by claim_id. threads <= 0 selects the default
// worker count (ZETA_AUDIT_THREADS when set, hardware otherwise).
std::vector<AuditRecord> run_all(const SuiteOptions& options, int threads);

int default_thread_count();

}  // namespace zetalab::report
