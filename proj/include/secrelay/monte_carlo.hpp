#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "secrelay/rng.hpp"
#include "secrelay/system_model.hpp"

namespace secrelay {

// Empirical epsilon-quantile of a sample set, with a distribution-free
// confidence interval. c_soc_hat keeps the sign of the order statistic;
// the clamped field floors it at zero for reporting achievable rate.
struct OutageEstimate {
    double c_soc_hat;
    double c_soc_hat_clamped;
    double ci_low;
    double ci_high;
    std::uint64_t n_samples;
    double epsilon;
};

// Smallest n that resolves the eps-quantile with at least ~10 expected
// samples below it.
std::uint64_t min_sample_count(double eps);

// Lower eps-quantile of the samples: the ceil(eps*n)-th order statistic
// (1-based, ascending). The CI brackets it with order-statistic ranks from
// the binomial distribution at 95% coverage. Sorts its argument.
OutageEstimate quantile_estimate(std::vector<double> samples, double eps);

// Draws n values from `draw` and returns their quantile estimate. With
// workers > 1 the draw functor is copied per worker and each worker uses its
// own substream, so the result is a pure function of (seed, n, workers).
OutageEstimate estimate_outage_quantile(const std::function<double(GaussianStream&)>& draw,
                                        double eps, std::uint64_t n, std::uint64_t seed,
                                        unsigned workers = 1);

// Full pipeline: channel draws -> rate differences -> outage quantile.
OutageEstimate estimate_outage_capacity(const SystemParams& params, double p_r, std::uint64_t n,
                                        std::uint64_t seed, unsigned workers = 1);

struct ConvergencePoint {
    int n_r;
    double c_analytic;
    OutageEstimate estimate;
    double abs_error;  // |clamped estimate - analytic|
};

// Runs the estimator at fixed p_r across antenna counts, against the
// closed-form value. Every n_r must keep secrecy feasible; the same master
// seed drives every point.
std::vector<ConvergencePoint> convergence_sweep(const SystemParams& base, double p_r,
                                                const std::vector<int>& n_r_list, std::uint64_t n,
                                                std::uint64_t seed, unsigned workers = 1);

}  // namespace secrelay
