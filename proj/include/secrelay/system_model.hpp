#pragma once

#include <optional>

#include "secrelay/errors.hpp"

namespace secrelay {

/// Physical constants of one two-hop relay scenario.
///
/// All powers are linear and dimensionless: the noise variances at the
/// relay, the destination and the eavesdropper are normalized to 1, so a
/// transmit power is the per-hop transmit SNR. Path losses are linear
/// attenuation factors. `w` is half the spectral bandwidth in Hz (a full
/// transmission occupies two slots); capacities derived from it are in
/// bits/s.
struct SystemParams {
    double p_s = 10.0;                ///< source transmit power, > 0
    std::optional<double> p_r{};      ///< relay transmit power; empty when the library chooses it
    double alpha_sr = 1.0;            ///< source->relay path loss, > 0
    double alpha_rd = 1.0;            ///< relay->destination path loss, > 0
    double alpha_re = 1.0;            ///< relay->eavesdropper path loss, > 0
    double rho = 0.9;                 ///< CSI correlation coefficient, in (0, 1]
    double epsilon = 0.01;            ///< target outage probability, in (0, 1)
    int n_r = 100;                    ///< relay antenna count, >= 1
    double w = 10e3;                  ///< half spectral bandwidth, Hz, > 0

    /// Throws InvalidParameter naming the first violated field.
    void validate() const;
};

/// Shorthand quantities every closed-form expression is written in.
struct DerivedParams {
    double a;               ///< rho * alpha_rd * n_r
    double b;               ///< p_s * alpha_sr * n_r
    double r_l;             ///< alpha_re * (-ln epsilon) / a, relative path loss
    bool secrecy_feasible;  ///< true iff 0 < r_l < 1
};

/// Computes the shorthand quantities from validated parameters.
DerivedParams derive_params(const SystemParams& params);

double db_to_linear(double x_db);

/// Inverse of db_to_linear; rejects non-positive input.
double linear_to_db(double x_linear);

/// Smallest antenna count that makes secrecy feasible, i.e. the smallest
/// integer strictly greater than alpha_re * (-ln epsilon) / (rho * alpha_rd).
/// Ignores params.n_r.
int min_antennas(const SystemParams& params);

}  // namespace secrelay
