#pragma once

#include <complex>
#include <vector>

#include "secrelay/rng.hpp"
#include "secrelay/system_model.hpp"

namespace secrelay {

using ComplexVector = std::vector<std::complex<double>>;

// One draw of every fading vector the two-hop link needs. All vectors have
// length n_r. h_rd is the true relay-destination channel; h_rd_hat is the
// estimate the relay beamforms on, and e is the estimation error, so
// h_rd = sqrt(rho) * h_rd_hat + sqrt(1 - rho) * e.
struct ChannelRealization {
    ComplexVector h_sr;
    ComplexVector h_rd_hat;
    ComplexVector e;
    ComplexVector h_rd;
    ComplexVector h_re;

    static ChannelRealization from_components(double rho, ComplexVector h_sr,
                                              ComplexVector h_rd_hat, ComplexVector e,
                                              ComplexVector h_re);
};

// Draws all four independent vectors (fixed order: h_sr, h_rd_hat, e, h_re)
// and assembles h_rd. Entry variance is 1; path loss enters via the alphas.
ChannelRealization sample_channels(const SystemParams& params, GaussianStream& rng);

struct SnrPair {
    double snr_d;
    double snr_e;
};

// Post-combining SNRs at destination and eavesdropper for one realization,
// with the relay doing receive-MRC on h_sr and transmit-MRT on h_rd_hat.
// The amplify-and-forward gain chain is folded in algebraically; no relay
// weighting matrix is formed.
SnrPair snr_pair(const ChannelRealization& ch, const SystemParams& params, double p_r);

// w * (log2(1 + snr_d) - log2(1 + snr_e)); negative when the eavesdropper
// channel wins, intentionally not clamped.
double rate_difference(const SnrPair& snr, double w);

// Reusable per-thread sampler: one call draws a realization and returns its
// rate difference. Buffers are allocated once; copies are independent.
class ChannelSampler {
public:
    ChannelSampler(const SystemParams& params, double p_r);

    SnrPair draw_snr(GaussianStream& rng);
    double operator()(GaussianStream& rng);

    const SystemParams& params() const { return params_; }
    double p_r() const { return p_r_; }

private:
    SystemParams params_;
    double p_r_;
    ChannelRealization buf_;
};

}  // namespace secrelay
