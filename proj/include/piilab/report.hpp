#pragma once

// Verification suites and their reports.

#include <string>
#include <vector>

namespace piilab::report {

enum class Status { Pass, Fail, KnownDiscrepancy };
const char* status_name(Status s);  // "pass", "fail", "known-discrepancy"

struct Check {
    std::string id;
    std::string paper_ref;  // wording of the stated claim being checked
    Status status;
    std::string computed;
    std::string expected;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    std::size_t count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0; }
    // {suite, checks: [{id, paper_ref, status, computed, expected}]}
    std::string to_json() const;
    // One line per check.
    std::string to_text() const;
};

// Suites: "lattice" (lattice, blow-up and Weyl checks), "backlund", "atlas", "all".
Report run_suite(const std::string& name);
const std::vector<std::string>& suite_names();

}  // namespace piilab::report
