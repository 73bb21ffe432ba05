#include "secrelay/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "secrelay/analytic.hpp"
#include "secrelay/channel.hpp"
#include "secrelay/errors.hpp"
#include "secrelay/stats.hpp"

namespace secrelay {

namespace {

// ceil with a one-part-in-1e9 slack so that products like 0.01 * 200000,
// which land a few ulps above an integer, do not round up a full step.
std::uint64_t ceil_with_slack(double x) {
    return static_cast<std::uint64_t>(std::ceil(x - 1e-9));
}

}  // namespace

std::uint64_t min_sample_count(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidParameter("epsilon must be in (0, 1)");
    return ceil_with_slack(10.0 / eps);
}

OutageEstimate quantile_estimate(std::vector<double> samples, double eps) {
    const std::uint64_t n = samples.size();
    if (n < min_sample_count(eps))
        throw InsufficientSamples("need at least " + std::to_string(min_sample_count(eps)) +
                                  " samples for epsilon=" + std::to_string(eps) + ", got " +
                                  std::to_string(n));
    std::sort(samples.begin(), samples.end());

    const std::uint64_t k = std::max<std::uint64_t>(1, ceil_with_slack(eps * static_cast<double>(n)));
    std::uint64_t lo = std::max<std::uint64_t>(1, binomial_quantile(0.025, n, eps));
    std::uint64_t hi = std::min<std::uint64_t>(n, binomial_quantile(0.975, n, eps) + 1);
    lo = std::min(lo, k);
    hi = std::max(hi, k);

    OutageEstimate est;
    est.c_soc_hat = samples[k - 1];
    est.c_soc_hat_clamped = std::max(0.0, est.c_soc_hat);
    est.ci_low = samples[lo - 1];
    est.ci_high = samples[hi - 1];
    est.n_samples = n;
    est.epsilon = eps;
    return est;
}

OutageEstimate estimate_outage_quantile(const std::function<double(GaussianStream&)>& draw,
                                        double eps, std::uint64_t n, std::uint64_t seed,
                                        unsigned workers) {
    if (workers < 1) throw InvalidParameter("workers must be >= 1");
    if (n < min_sample_count(eps))
        throw InsufficientSamples("need at least " + std::to_string(min_sample_count(eps)) +
                                  " samples for epsilon=" + std::to_string(eps) + ", got " +
                                  std::to_string(n));

    std::vector<double> samples(n);
    if (workers == 1) {
        auto f = draw;
        GaussianStream rng(seed, 0);
        for (auto& s : samples) s = f(rng);
    } else {
        // Substream w always owns chunk w regardless of scheduling, so the
        // sample multiset depends only on (seed, n, workers).
        const std::uint64_t base = n / workers;
        const std::uint64_t rem = n % workers;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        std::uint64_t offset = 0;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t count = base + (w < rem ? 1 : 0);
            pool.emplace_back(
                [f = draw, seed, w, out = samples.data() + offset, count]() mutable {
                    GaussianStream rng(seed, w);
                    for (std::uint64_t i = 0; i < count; ++i) out[i] = f(rng);
                });
            offset += count;
        }
        for (auto& t : pool) t.join();
    }
    return quantile_estimate(std::move(samples), eps);
}

OutageEstimate estimate_outage_capacity(const SystemParams& params, double p_r, std::uint64_t n,
                                        std::uint64_t seed, unsigned workers) {
    ChannelSampler sampler(params, p_r);
    return estimate_outage_quantile(std::function<double(GaussianStream&)>(sampler),
                                    params.epsilon, n, seed, workers);
}

std::vector<ConvergencePoint> convergence_sweep(const SystemParams& base, double p_r,
                                                const std::vector<int>& n_r_list, std::uint64_t n,
                                                std::uint64_t seed, unsigned workers) {
    if (n_r_list.empty()) throw InvalidParameter("n_r_list must not be empty");
    std::vector<SystemParams> configs;
    configs.reserve(n_r_list.size());
    for (int n_r : n_r_list) {
        SystemParams p = base;
        p.n_r = n_r;
        const DerivedParams d = derive_params(p);
        if (!d.secrecy_feasible)
            throw InfeasibleSecrecy("n_r=" + std::to_string(n_r) +
                                    " gives relative path loss >= 1; no positive capacity");
        configs.push_back(p);
    }

    std::vector<ConvergencePoint> out;
    out.reserve(configs.size());
    for (const auto& p : configs) {
        ConvergencePoint pt;
        pt.n_r = p.n_r;
        pt.c_analytic = secrecy_outage_capacity(derive_params(p), p.w, p_r);
        pt.estimate = estimate_outage_capacity(p, p_r, n, seed, workers);
        pt.abs_error = std::abs(pt.estimate.c_soc_hat_clamped - pt.c_analytic);
        out.push_back(pt);
    }
    return out;
}

}  // namespace secrelay
