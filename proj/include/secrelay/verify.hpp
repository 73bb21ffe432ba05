#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace secrelay {

struct CheckResult {
    std::string name;
    bool pass;             // false if the check failed or overran its budget
    double seconds;        // measured wall time
    double limit_seconds;  // budget the check must stay under
    std::string detail;    // deterministic summary (no timing), safe to diff
};

// Runs the full self-check battery: closed-form against numerical search,
// sign structure at the feasibility boundary, unimodality, simulation
// against the closed form, asymptotics, parameter monotonicity, optimal-
// versus-fixed dominance, channel statistics, and reproducibility. Every
// check is deterministic for a fixed seed (all sampling is single-worker),
// so two runs with the same seed produce identical CheckResult contents up
// to the measured seconds.
std::vector<CheckResult> run_verification(std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace secrelay
