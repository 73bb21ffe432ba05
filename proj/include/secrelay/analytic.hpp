#pragma once

#include "secrelay/system_model.hpp"

namespace secrelay {

/// Outcome of the relay power optimization.
struct AllocationResult {
    double p_r_star;   ///< optimal relay power, linear
    double c_soc_max;  ///< secrecy outage capacity at p_r_star, bits/s
    double ceiling;    ///< high-source-power saturation capacity w*log2(1/r_l), bits/s
};

/// Closed-form secrecy outage capacity at relay power p_r, in bits/s.
///
/// Exactly zero at p_r = 0 and whenever r_l = 1; negative for r_l > 1 (the
/// sign is information, callers clamp for display if they want to). Uses a
/// log1p formulation so the value stays accurate down to vanishing p_r.
double secrecy_outage_capacity(const DerivedParams& derived, double w, double p_r);

/// d/dp_r of secrecy_outage_capacity. Positive below the optimal power,
/// zero at it, negative above. Requires p_r > 0.
double capacity_slope(const DerivedParams& derived, double w, double p_r);

/// The unique capacity-maximizing relay power, sqrt(r_l*(b+1))/(a*r_l).
/// Throws InfeasibleSecrecy when r_l >= 1 and DegenerateSource when b = 0.
double optimal_relay_power(const DerivedParams& derived);

/// Same optimum computed directly from the raw scenario parameters,
/// sqrt((p_s*alpha_sr*n_r + 1)/(alpha_re * rho * alpha_rd * n_r * (-ln eps))).
/// Kept as an independent algebraic route; the two agree to 1e-12 relative.
double optimal_relay_power_direct(const SystemParams& params);

/// Capacity at the optimal power evaluated through the direct two-log form
/// in b and r_l only (no power variable). Cross-check for allocate_power.
double peak_capacity(double b, double r_l, double w);

/// Saturation capacity w*log2(1/r_l) reached as the source power grows.
/// Throws InfeasibleSecrecy when r_l >= 1.
double saturation_ceiling(const DerivedParams& derived, double w);

/// True iff a positive secrecy outage capacity exists (0 < r_l < 1).
bool has_positive_capacity(const DerivedParams& derived);

/// Full allocation: optimal power, the capacity it achieves, and the
/// ceiling. Internally cross-validates both algebraic power forms (1e-12)
/// and both capacity forms (1e-9).
AllocationResult allocate_power(const SystemParams& params);

}  // namespace secrelay
