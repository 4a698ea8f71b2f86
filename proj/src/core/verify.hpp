#pragma once

#include <string>
#include <vector>

#include "core/state.hpp"

namespace gca {

struct CheckResult {
    std::string key;
    bool pass = false;
    std::string detail; // empty unless there is something to say
};

struct VerifyReport {
    long N = 0, n = 0;
    std::string suite;
    std::string backend;
    bool root_identified = true;
    std::vector<CheckResult> checks; // sorted by key
    long passed = 0, failed = 0;
};

// Runs one named family (relations | intertwiners | unitarity | ybe | moves |
// states) or "all".  Every individual check is keyed by its parameters so a
// failure names a reproducible instance.  Deterministic: results are sorted
// by key and carry no timing or environment data.
VerifyReport run_suite(const ScalarContext& ctx, long n, const std::string& suite);

std::string report_to_text(const VerifyReport& rep);
std::string report_to_json(const VerifyReport& rep);

} // namespace gca
