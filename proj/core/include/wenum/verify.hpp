#pragma once

#include <string>
#include <vector>

namespace wenum {

/// One entry of the built-in verification suite.
struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;  // first failure, or a short success summary
    double seconds = 0.0;
};

/// Runs the full built-in verification workflow against the bundled
/// reference data: golden derivative vectors for golay24/qr48/length-72,
/// eigenspace membership, the balance identity on every coordinate of every
/// bundled code, the length-8 candidate elimination, the recursion/halves
/// property sweeps, and the indicator round-trips.
std::vector<CheckResult> run_verification_suite();

} // namespace wenum
