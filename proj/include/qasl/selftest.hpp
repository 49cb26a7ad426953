#pragma once

#include <string>
#include <vector>

namespace qasl::selftest {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full acceptance suite. Each criterion is independent; failures
/// carry the first offending detail.
std::vector<CriterionResult> run_all(unsigned long seed);

/// True when every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

} // namespace qasl::selftest
