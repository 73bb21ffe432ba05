#include "secrelay/channel.hpp"

#include <cmath>
#include <numbers>

#include "secrelay/errors.hpp"
#include "secrelay/kernels.hpp"

namespace secrelay {

ChannelRealization ChannelRealization::from_components(double rho, ComplexVector h_sr,
                                                       ComplexVector h_rd_hat, ComplexVector e,
                                                       ComplexVector h_re) {
    if (!(rho > 0.0) || rho > 1.0) throw InvalidParameter("rho must be in (0, 1]");
    const std::size_t n = h_sr.size();
    if (h_rd_hat.size() != n || e.size() != n || h_re.size() != n)
        throw DimensionMismatch("channel vectors must share one length");
    ChannelRealization ch;
    ch.h_sr = std::move(h_sr);
    ch.h_rd_hat = std::move(h_rd_hat);
    ch.e = std::move(e);
    ch.h_re = std::move(h_re);
    ch.h_rd.resize(n);
    kernels::weighted_sum(ch.h_rd, std::sqrt(rho), ch.h_rd_hat, std::sqrt(1.0 - rho), ch.e);
    return ch;
}

ChannelRealization sample_channels(const SystemParams& params, GaussianStream& rng) {
    params.validate();
    const std::size_t n = params.n_r;
    ComplexVector h_sr(n), h_rd_hat(n), e(n), h_re(n);
    rng.fill_complex_unit(h_sr);
    rng.fill_complex_unit(h_rd_hat);
    rng.fill_complex_unit(e);
    rng.fill_complex_unit(h_re);
    return ChannelRealization::from_components(params.rho, std::move(h_sr), std::move(h_rd_hat),
                                               std::move(e), std::move(h_re));
}

SnrPair snr_pair(const ChannelRealization& ch, const SystemParams& params, double p_r) {
    const std::size_t n = params.n_r;
    if (ch.h_sr.size() != n || ch.h_rd_hat.size() != n || ch.h_rd.size() != n ||
        ch.h_re.size() != n)
        throw DimensionMismatch("realization length does not match n_r");
    if (!(p_r >= 0.0) || !std::isfinite(p_r)) throw InvalidParameter("p_r must be finite and >= 0");

    const double ns = kernels::norm_sqr(ch.h_sr);
    const double nh = kernels::norm_sqr(ch.h_rd_hat);
    const double gd = std::norm(kernels::dot_conj(ch.h_rd, ch.h_rd_hat));
    const double ge = std::norm(kernels::dot_conj(ch.h_re, ch.h_rd_hat));

    // sig1 is the post-MRC first-hop SNR; sig1 + 1 carries the relay noise
    // into the second hop. nh multiplies it because the MRT weights are
    // normalized by ||h_rd_hat||^2.
    const double sig1 = params.p_s * params.alpha_sr * ns;
    const double noise2 = nh * (sig1 + 1.0);

    const double num_d = sig1 * p_r * params.alpha_rd * gd;
    const double den_d = p_r * params.alpha_rd * gd + noise2;
    const double num_e = sig1 * p_r * params.alpha_re * ge;
    const double den_e = p_r * params.alpha_re * ge + noise2;

    return {num_d / den_d, num_e / den_e};
}

double rate_difference(const SnrPair& snr, double w) {
    return w * (std::log1p(snr.snr_d) - std::log1p(snr.snr_e)) / std::numbers::ln2;
}

ChannelSampler::ChannelSampler(const SystemParams& params, double p_r)
    : params_(params), p_r_(p_r) {
    params_.validate();
    if (!(p_r > 0.0) || !std::isfinite(p_r))
        throw InvalidParameter("relay power must be finite and > 0");
    const std::size_t n = params_.n_r;
    buf_.h_sr.resize(n);
    buf_.h_rd_hat.resize(n);
    buf_.e.resize(n);
    buf_.h_rd.resize(n);
    buf_.h_re.resize(n);
}

SnrPair ChannelSampler::draw_snr(GaussianStream& rng) {
    rng.fill_complex_unit(buf_.h_sr);
    rng.fill_complex_unit(buf_.h_rd_hat);
    rng.fill_complex_unit(buf_.e);
    rng.fill_complex_unit(buf_.h_re);
    kernels::weighted_sum(buf_.h_rd, std::sqrt(params_.rho), buf_.h_rd_hat,
                          std::sqrt(1.0 - params_.rho), buf_.e);
    return snr_pair(buf_, params_, p_r_);
}

double ChannelSampler::operator()(GaussianStream& rng) {
    return rate_difference(draw_snr(rng), params_.w);
}

}  // namespace secrelay
