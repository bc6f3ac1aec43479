#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sympow::verify {

/**
 * Scale knobs for the cross-validation suites. Suites with brute-force
 * oracles clamp to their oracle guards; every suite reports the range it
 * actually ran.
 */
struct Options {
    int max_m = 8;
    int max_n = 6;
    int jobs = 1;
    /// Test seam: corrupts one closed-form level of the singular chain so
    /// the suite must fail. Never set outside fault-injection tests.
    bool inject_chain_fault = false;
};

struct SuiteResult {
    std::string name;
    std::string scope;  // the range the suite effectively covered
    std::uint64_t checks = 0;
    std::vector<std::string> failures;  // capped; see suppressed
    std::uint64_t suppressed = 0;
    double seconds = 0.0;

    bool passed() const { return failures.empty() && suppressed == 0; }
    bool vacuous() const { return checks == 0; }
};

struct Report {
    std::vector<SuiteResult> suites;

    bool all_passed() const;
    std::uint64_t total_checks() const;
};

/// Runs every oracle-equivalence suite at the given scale.
Report run(const Options& opts);

}  // namespace sympow::verify
