#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "secrelay/analytic.hpp"
#include "secrelay/errors.hpp"
#include "secrelay/monte_carlo.hpp"
#include "secrelay/system_model.hpp"

using namespace secrelay;

namespace {

bool same_estimate(const OutageEstimate& a, const OutageEstimate& b) {
    return a.c_soc_hat == b.c_soc_hat && a.c_soc_hat_clamped == b.c_soc_hat_clamped &&
           a.ci_low == b.ci_low && a.ci_high == b.ci_high && a.n_samples == b.n_samples &&
           a.epsilon == b.epsilon;
}

}  // namespace

TEST_CASE("minimum sample counts resolve the quantile") {
    CHECK(min_sample_count(0.01) == 1000);
    CHECK(min_sample_count(0.05) == 200);
    CHECK(min_sample_count(0.1) == 100);
}

TEST_CASE("too few samples are rejected up front") {
    std::vector<double> samples(199, 1.0);
    CHECK_THROWS_AS(quantile_estimate(samples, 0.05), InsufficientSamples);
    CHECK_THROWS_AS(
        estimate_outage_quantile([](GaussianStream&) { return 1.0; }, 0.05, 199, 1),
        InsufficientSamples);
}

TEST_CASE("constant samples give a degenerate point estimate and interval") {
    const std::vector<double> samples(1000, 3.25);
    const OutageEstimate est = quantile_estimate(samples, 0.01);
    CHECK(est.c_soc_hat == 3.25);
    CHECK(est.c_soc_hat_clamped == 3.25);
    CHECK(est.ci_low == 3.25);
    CHECK(est.ci_high == 3.25);
    CHECK(est.n_samples == 1000);
    CHECK(est.epsilon == 0.01);
}

TEST_CASE("negative order statistic is kept but clamped for reporting") {
    std::vector<double> samples(1000, 5.0);
    for (int i = 0; i < 50; ++i) samples[i] = -2.0;
    const OutageEstimate est = quantile_estimate(samples, 0.01);
    CHECK(est.c_soc_hat == -2.0);
    CHECK(est.c_soc_hat_clamped == 0.0);
}

TEST_CASE("the estimate is the exact ceil(eps*n) order statistic") {
    // 0.02 * 500 = 10 exactly; the float guard must not push the rank to 11.
    std::vector<double> samples(500);
    for (int i = 0; i < 500; ++i) samples[i] = static_cast<double>(i);
    const OutageEstimate est = quantile_estimate(samples, 0.02);
    CHECK(est.c_soc_hat == 9.0);  // 10th smallest of 0..499

    const std::size_t below =
        std::count_if(samples.begin(), samples.end(), [&](double v) { return v < est.c_soc_hat; });
    CHECK(below == 9);
    CHECK(est.ci_low <= est.c_soc_hat);
    CHECK(est.ci_high >= est.c_soc_hat);
}

TEST_CASE("quantile estimate is monotone in eps on shared samples") {
    GaussianStream rng(40);
    std::vector<double> samples(5000);
    for (auto& v : samples) v = rng.normal();
    double prev = -1e300;
    for (double eps : {0.01, 0.02, 0.05, 0.2}) {
        const double q = quantile_estimate(samples, eps).c_soc_hat;
        CHECK(q >= prev);
        prev = q;
    }
}

TEST_CASE("estimator is a pure function of seed, n and workers") {
    SystemParams p;
    p.n_r = 32;
    const double p_r = optimal_relay_power(derive_params(p));
    const OutageEstimate a = estimate_outage_capacity(p, p_r, 4000, 99, 3);
    const OutageEstimate b = estimate_outage_capacity(p, p_r, 4000, 99, 3);
    CHECK(same_estimate(a, b));

    const OutageEstimate c = estimate_outage_capacity(p, p_r, 4000, 100, 3);
    CHECK(a.c_soc_hat != c.c_soc_hat);
}

TEST_CASE("worker counts shuffle substreams but agree statistically") {
    SystemParams p;
    p.n_r = 32;
    const double p_r = optimal_relay_power(derive_params(p));
    const OutageEstimate w1 = estimate_outage_capacity(p, p_r, 6000, 7, 1);
    const OutageEstimate w3 = estimate_outage_capacity(p, p_r, 6000, 7, 3);
    // Different sample partitions, same distribution: intervals must overlap.
    CHECK(w1.ci_low <= w3.ci_high);
    CHECK(w3.ci_low <= w1.ci_high);
    CHECK(w1.n_samples == w3.n_samples);
}

TEST_CASE("vanishing relay power drives the estimate to zero") {
    SystemParams p;
    p.n_r = 32;
    const OutageEstimate est = estimate_outage_capacity(p, 1e-12, 2000, 5);
    CHECK(std::abs(est.c_soc_hat) <= 1e-3 * p.w);
}

TEST_CASE("estimate agrees with the closed form at the optimal power") {
    SystemParams p;  // n_r = 100, eps = 0.01
    const AllocationResult al = allocate_power(p);
    const OutageEstimate est = estimate_outage_capacity(p, al.p_r_star, 20000, 11, 2);
    // The interval brackets the finite-antenna quantile, which sits slightly
    // below the closed form; only point agreement is asserted against it.
    CHECK(std::abs(est.c_soc_hat - al.c_soc_max) <= 0.05 * al.c_soc_max);
    CHECK(est.ci_low <= est.c_soc_hat);
    CHECK(est.c_soc_hat <= est.ci_high);
    CHECK(est.ci_low < est.ci_high);
}

TEST_CASE("antenna growth tightens the estimate toward the closed form") {
    SystemParams p;
    p.epsilon = 0.05;
    const double p_r = 2.0;
    const std::vector<int> antennas = {25, 400};
    double err_small = 0.0, err_big = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto pts = convergence_sweep(p, p_r, antennas, 4000, seed);
        REQUIRE(pts.size() == 2);
        CHECK(pts[0].n_r == 25);
        CHECK(pts[1].n_r == 400);
        err_small += pts[0].abs_error / pts[0].c_analytic;
        err_big += pts[1].abs_error / pts[1].c_analytic;
    }
    CHECK(err_big < err_small);
}

TEST_CASE("convergence points carry consistent fields") {
    SystemParams p;
    const double p_r = 2.0;
    const auto pts = convergence_sweep(p, p_r, {100}, 3000, 21, 2);
    REQUIRE(pts.size() == 1);
    SystemParams q = p;
    q.n_r = 100;
    CHECK(pts[0].c_analytic == secrecy_outage_capacity(derive_params(q), q.w, p_r));
    const OutageEstimate direct = estimate_outage_capacity(q, p_r, 3000, 21, 2);
    CHECK(same_estimate(pts[0].estimate, direct));
    CHECK(pts[0].abs_error == std::abs(pts[0].estimate.c_soc_hat_clamped - pts[0].c_analytic));
}

TEST_CASE("convergence sweeps reject infeasible antenna counts up front") {
    SystemParams p;
    CHECK_THROWS_AS(convergence_sweep(p, 2.0, {100, 5}, 3000, 21), InfeasibleSecrecy);
}

TEST_CASE("the raw estimator still runs outside the feasible region") {
    // The quantile of the rate difference is defined (and informative) even
    // when no positive secrecy capacity exists; only the clamp floors it.
    SystemParams p;
    p.n_r = 5;
    const OutageEstimate est = estimate_outage_capacity(p, 2.0, 2000, 21);
    CHECK(est.n_samples == 2000);
    CHECK(est.c_soc_hat_clamped >= 0.0);
    CHECK(est.c_soc_hat_clamped >= est.c_soc_hat);
}
