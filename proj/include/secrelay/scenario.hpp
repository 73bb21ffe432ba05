#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secrelay/system_model.hpp"

namespace secrelay {

// What each sweep point computes.
enum class Objective {
    fixed_power,       // capacity at a given relay power
    optimal_power,     // capacity-maximizing relay power and its capacity
    fixed_vs_optimal,  // both, plus the gain of optimal over fixed
};

enum class SweepMode { analytic, monte_carlo, both };

// Sweep axes and curve parameters are named by CLI-facing identifiers.
// Power axes (snr_s, snr_r) take dB values; alpha_re is a linear factor;
// eps is a probability; r_l sets the relative path loss directly (the
// implied alpha_re is reported as a column).
struct CurveSpec {
    std::string param;           // empty: single unlabeled curve
    std::vector<double> values;  // one column group per value
};

struct Scenario {
    std::string name;
    SystemParams base;
    std::string axis_param;
    std::vector<double> axis_values;
    CurveSpec curves;
    Objective objective = Objective::fixed_power;
    SweepMode mode = SweepMode::analytic;
    double fixed_p_r = 100.0;       // linear; fixed_power / fixed_vs_optimal only
    bool include_ceiling = false;   // add the saturation ceiling per group
    std::uint64_t samples = 200000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // one per axis value, in axis order
};

// Runs every point of the sweep. Rows follow axis order; within a row,
// column groups follow curve order. Infeasible points under an optimal-power
// objective yield NaN result columns and feasible=0 instead of aborting.
// Deterministic for fixed (scenario, seed, workers): Monte Carlo points use
// a sub-seed mixed from (seed, row index, curve index).
SweepTable run_scenario(const Scenario& sc);

// Renders with shortest round-trip formatting, '.' decimal point, one
// header line, '\n' line endings. Output is bit-stable for equal tables.
std::string to_csv(const SweepTable& table);

// Built-in sweep definitions. Names: fig2, fig3, fig4, fig5, fig6.
// The base parameters, sample count, seed and worker count of `proto` are
// carried into the returned scenario; everything else (axis, curves,
// objective, mode) is fixed by the definition. fig3 accepts an alternate
// axis ("snr_s") which swaps the roles of source and relay SNR.
Scenario builtin_scenario(const std::string& name, const Scenario& proto,
                          const std::string& fig3_axis = "snr_r");

std::vector<std::string> builtin_scenario_names();

}  // namespace secrelay
