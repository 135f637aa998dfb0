#pragma once

#include <string>
#include <vector>

namespace runup {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // measured value vs tolerance
};

/// Runs the analytic anchors and cross-module consistency checks.
/// All checks are self-contained (no external oracle, no files).
std::vector<CheckResult> run_selftest();

} // namespace runup
