#pragma once

#include <span>
#include <string>
#include <vector>

namespace pineta {

struct SuiteResult {
    std::string name;
    bool passed;
    std::string detail;  // first counterexample, empty when passed
};

/// Run the cross-check suites: every closed form against its symbolic
/// pipeline, every classification list against the classifier, and the
/// algebraic property checks (fixed RNG seed).  Order and names are stable.
std::vector<SuiteResult> run_verification(bool parallel = false);

bool all_passed(std::span<const SuiteResult> results);

}  // namespace pineta
