#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chebadj::suites {

// One exact check inside a verification grid. Ungated rows (empirical probes)
// are reported in the CSV but never count as suite failures.
struct CaseRow {
    std::string kind;
    std::string params; // "p=1;s=2;r=30" — semicolon-joined, CSV-safe
    std::string lhs = "-";
    std::string rhs = "-";
    bool ok = true;
    bool gated = true;
};

struct SuiteOptions {
    std::optional<long> max_size; // suite-specific grid cap; default per suite
    bool slow = false;            // adds the p = 3 construction run to theorem1
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseRow> rows;
    double wall_ms = 0.0;

    std::size_t total() const { return rows.size(); }
    std::vector<std::string> failures() const;
};

const std::vector<std::string>& suite_names();

// Runs one named grid; unknown names raise DomainError. Independent checks are
// distributed over a worker pool (capped by CHEBADJ_THREADS); row order is
// deterministic and independent of the worker count.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

// {"suite", "total", "failures", "outputs"[, "wall_ms"]}; wall time is the one
// non-deterministic field and is dropped when include_timing is false.
nlohmann::json report_to_json(const SuiteResult& result, bool include_timing,
                              const std::vector<std::string>& outputs);

std::string rows_to_csv(const std::vector<CaseRow>& rows);

namespace detail {

// Index-parallel map with deterministic slot assignment.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

std::size_t worker_count();

} // namespace detail

} // namespace chebadj::suites
