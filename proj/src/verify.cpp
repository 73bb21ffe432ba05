#include "secrelay/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <utility>

#include "secrelay/analytic.hpp"
#include "secrelay/channel.hpp"
#include "secrelay/kernels.hpp"
#include "secrelay/monte_carlo.hpp"
#include "secrelay/optimize.hpp"
#include "secrelay/rng.hpp"
#include "secrelay/scenario.hpp"

namespace secrelay {
namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// Broad but always-feasible parameter generator: powers and path losses
// log-uniform over several decades, resampled until 0 < r_l < 1.
SystemParams random_feasible(GaussianStream& g) {
    for (;;) {
        SystemParams p;
        p.p_s = std::pow(10.0, -0.5 + 4.0 * g.uniform());
        p.alpha_sr = 0.25 * std::pow(16.0, g.uniform());
        p.alpha_rd = 0.25 * std::pow(16.0, g.uniform());
        p.alpha_re = 0.25 * std::pow(16.0, g.uniform());
        p.rho = 0.5 + 0.5 * g.uniform();
        p.epsilon = std::pow(10.0, -2.7 + 1.7 * g.uniform());
        p.n_r = 32 + static_cast<int>(g.uniform() * 481.0);
        p.w = 1e4;
        if (derive_params(p).secrecy_feasible) return p;
    }
}

bool strictly_monotone(const std::vector<double>& v, bool increasing) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (increasing ? !(v[i] > v[i - 1]) : !(v[i] < v[i - 1])) return false;
    }
    return true;
}

using CheckFn = std::function<std::pair<bool, std::string>()>;

CheckResult timed(std::string name, double limit_seconds, const CheckFn& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    std::pair<bool, std::string> r;
    try {
        r = fn();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CheckResult out;
    out.name = std::move(name);
    out.seconds = seconds;
    out.limit_seconds = limit_seconds;
    out.pass = r.first && seconds <= limit_seconds;
    out.detail = std::move(r.second);
    if (r.first && seconds > limit_seconds) out.detail += " [time budget exceeded]";
    return out;
}

std::pair<bool, std::string> check_search_agreement(std::uint64_t seed) {
    GaussianStream g(seed, 101);
    double worst_search = 0.0;
    double worst_forms = 0.0;
    for (int i = 0; i < 200; ++i) {
        const SystemParams p = random_feasible(g);
        const DerivedParams d = derive_params(p);
        const double p_star = optimal_relay_power(d);
        const double p_direct = optimal_relay_power_direct(p);
        worst_forms = std::max(worst_forms, std::abs(p_star - p_direct) / p_star);
        auto f = [&](double pr) { return secrecy_outage_capacity(d, p.w, pr); };
        const SearchResult res = golden_section_max(f, bracket_maximum(f, 1.0), 1e-8);
        worst_search = std::max(worst_search, std::abs(res.argmax - p_star) / p_star);
    }
    const bool ok = worst_search <= 1e-6 && worst_forms <= 1e-12;
    return {ok, "search-vs-closed-form rel err " + num(worst_search) + ", algebraic forms rel err " +
                    num(worst_forms)};
}

std::pair<bool, std::string> check_boundary_signs() {
    bool ok = true;
    double worst_zero = 0.0;
    for (double snr_s : {10.0, 20.0, 30.0}) {
        const double b = db_to_linear(snr_s) * 100.0;
        for (int i = 1; i <= 7; ++i) {
            const double r_l = i / 5.0;  // 1.0 hit exactly at i = 5
            const DerivedParams d{90.0, b, r_l, r_l < 1.0};
            const double c = secrecy_outage_capacity(d, 1e4, 100.0);
            if (r_l < 1.0)
                ok = ok && c > 0.0;
            else if (r_l == 1.0) {
                worst_zero = std::max(worst_zero, std::abs(c));
                ok = ok && std::abs(c) <= 1e-12;
            } else
                ok = ok && c < 0.0;
        }
    }
    return {ok, "sign pattern over the boundary grid, |capacity| at the boundary " + num(worst_zero)};
}

std::pair<bool, std::string> check_unimodality_and_slope(std::uint64_t seed) {
    GaussianStream g(seed, 103);
    std::vector<SystemParams> sets;
    sets.reserve(50);
    bool unimodal = true;
    for (int i = 0; i < 50; ++i) {
        sets.push_back(random_feasible(g));
        const SystemParams& p = sets.back();
        const DerivedParams d = derive_params(p);
        const double p_star = optimal_relay_power(d);
        constexpr int grid_n = 10000;
        std::vector<double> f(grid_n);
        double fmax = 0.0;
        const double lo = std::log(p_star) - 4.0 * std::numbers::ln10;
        const double step = 8.0 * std::numbers::ln10 / (grid_n - 1);
        for (int k = 0; k < grid_n; ++k) {
            f[k] = secrecy_outage_capacity(d, p.w, std::exp(lo + k * step));
            fmax = std::max(fmax, std::abs(f[k]));
        }
        // First-difference signs with near-ties stripped; a unimodal curve
        // leaves a block of + followed by a block of -.
        bool seen_minus = false, seen_plus = false, broken = false;
        for (int k = 1; k < grid_n; ++k) {
            const double diff = f[k] - f[k - 1];
            if (std::abs(diff) <= 1e-14 * fmax) continue;
            if (diff > 0.0) {
                seen_plus = true;
                if (seen_minus) broken = true;
            } else {
                seen_minus = true;
            }
        }
        unimodal = unimodal && seen_plus && seen_minus && !broken;
    }

    double worst_slope = 0.0;
    for (int k = 0; k < 100; ++k) {
        const SystemParams& p = sets[k % 50];
        const DerivedParams d = derive_params(p);
        const double p_star = optimal_relay_power(d);
        const double x = p_star * std::pow(10.0, 4.0 * g.uniform() - 2.0);
        const double h = x * 1e-6;
        const double fd =
            (secrecy_outage_capacity(d, p.w, x + h) - secrecy_outage_capacity(d, p.w, x - h)) /
            (2.0 * h);
        const double sl = capacity_slope(d, p.w, x);
        const double scale =
            std::max(std::abs(fd), std::abs(secrecy_outage_capacity(d, p.w, x) / x));
        worst_slope = std::max(worst_slope, std::abs(sl - fd) / scale);
    }
    const bool ok = unimodal && worst_slope <= 1e-6;
    return {ok, std::string(unimodal ? "one sign change on every grid" : "sign pattern broken") +
                    ", slope-vs-difference rel err " + num(worst_slope)};
}

std::pair<bool, std::string> check_simulation_agreement(std::uint64_t seed) {
    double worst = 0.0;
    int cell = 0;
    for (double eps : {0.01, 0.05}) {
        for (double a_re : {1.0, 2.0, 4.0}) {
            SystemParams p;
            p.epsilon = eps;
            p.alpha_re = a_re;
            const AllocationResult al = allocate_power(p);
            const OutageEstimate est = estimate_outage_capacity(
                p, al.p_r_star, 200000, mix_seed(seed, 104, static_cast<std::uint64_t>(cell)), 1);
            worst = std::max(worst, std::abs(est.c_soc_hat - al.c_soc_max) / al.c_soc_max);
            ++cell;
        }
    }
    return {worst <= 0.05, "worst simulated-vs-closed-form rel gap " + num(worst)};
}

std::pair<bool, std::string> check_asymptotics() {
    double worst_gap = 0.0;
    for (double a_re : {1.0, 2.0, 4.0}) {
        SystemParams p;
        p.p_s = 1e6;
        p.alpha_re = a_re;
        const AllocationResult al = allocate_power(p);
        worst_gap = std::max(worst_gap, std::abs(al.c_soc_max - al.ceiling) / al.ceiling);
    }
    SystemParams low;
    low.p_s = 1e-8;
    const AllocationResult al_low = allocate_power(low);
    const bool ok = worst_gap <= 0.01 && al_low.c_soc_max < 1e-3 * low.w;
    return {ok, "high-power ceiling gap " + num(worst_gap) + ", low-power max " +
                    num(al_low.c_soc_max) + " bits/s"};
}

std::pair<bool, std::string> check_monotonicity() {
    struct Grid {
        const char* field;
        std::vector<double> values;
        bool p_star_up;   // +1 increasing, -1 decreasing, 0 not claimed
        bool c_max_up;
        bool claims_p_star;
    };
    auto with = [](const char* field, double v) {
        SystemParams p;
        if (std::string(field) == "p_s") p.p_s = v;
        else if (std::string(field) == "alpha_sr") p.alpha_sr = v;
        else if (std::string(field) == "alpha_rd") p.alpha_rd = v;
        else if (std::string(field) == "alpha_re") p.alpha_re = v;
        else if (std::string(field) == "rho") p.rho = v;
        else if (std::string(field) == "eps") p.epsilon = v;
        else if (std::string(field) == "n_r") p.n_r = static_cast<int>(v);
        return p;
    };
    auto logspace = [](double lo, double hi) {
        std::vector<double> v(7);
        for (int i = 0; i < 7; ++i) v[i] = lo * std::pow(hi / lo, i / 6.0);
        return v;
    };

    const std::vector<Grid> grids = {
        {"p_s", logspace(1.0, 1000.0), true, true, true},
        {"alpha_sr", logspace(0.5, 4.0), true, true, true},
        {"eps", logspace(0.004, 0.256), true, true, true},
        {"rho", {0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}, false, true, true},
        {"alpha_rd", logspace(0.5, 4.0), false, true, true},
        {"alpha_re", logspace(1.0, 4.0), false, false, true},
        {"n_r", {8, 16, 32, 64, 128, 256, 512}, false, true, false},
    };

    bool ok = true;
    std::string failed;
    for (const auto& grid : grids) {
        std::vector<double> p_stars, c_maxes;
        for (double v : grid.values) {
            const AllocationResult al = allocate_power(with(grid.field, v));
            p_stars.push_back(al.p_r_star);
            c_maxes.push_back(al.c_soc_max);
        }
        if (grid.claims_p_star && !strictly_monotone(p_stars, grid.p_star_up)) {
            ok = false;
            failed += std::string(" p_r_star(") + grid.field + ")";
        }
        if (!strictly_monotone(c_maxes, grid.c_max_up)) {
            ok = false;
            failed += std::string(" c_max(") + grid.field + ")";
        }
    }
    return {ok, ok ? "all claimed directions strict" : "violations:" + failed};
}

std::pair<bool, std::string> check_dominance(std::uint64_t seed) {
    bool ok = true;
    double strict_gain = 0.0;
    SystemParams last;
    double last_p_star = 0.0;
    for (double a_re = 1.0; a_re <= 4.0 + 1e-9; a_re += 0.5) {
        SystemParams p;
        p.alpha_re = a_re;
        const DerivedParams d = derive_params(p);
        const double c_fixed = secrecy_outage_capacity(d, p.w, 100.0);
        const AllocationResult al = allocate_power(p);
        ok = ok && al.c_soc_max + 1e-9 * std::abs(al.c_soc_max) >= c_fixed;
        if (a_re == 4.0) {
            strict_gain = al.c_soc_max - c_fixed;
            ok = ok && strict_gain > 0.0;
            last = p;
            last_p_star = al.p_r_star;
        }
    }
    const OutageEstimate est_fixed =
        estimate_outage_capacity(last, 100.0, 20000, mix_seed(seed, 107, 0), 1);
    const OutageEstimate est_opt =
        estimate_outage_capacity(last, last_p_star, 20000, mix_seed(seed, 107, 1), 1);
    ok = ok && est_opt.ci_low > est_fixed.ci_high;
    return {ok, "closed-form gain at the far grid end " + num(strict_gain) +
                    " bits/s, simulated intervals [" + num(est_fixed.ci_low) + ", " +
                    num(est_fixed.ci_high) + "] vs [" + num(est_opt.ci_low) + ", " +
                    num(est_opt.ci_high) + "]"};
}

std::pair<bool, std::string> check_channel_statistics(std::uint64_t seed) {
    GaussianStream g(seed, 108);
    std::vector<double> cvs;
    for (int n : {16, 64, 256, 1024}) {
        ComplexVector buf(static_cast<std::size_t>(n));
        double mean = 0.0, m2 = 0.0;
        for (int i = 0; i < 10000; ++i) {
            g.fill_complex_unit(buf);
            const double x = kernels::norm_sqr(buf);
            const double delta = x - mean;
            mean += delta / (i + 1);
            m2 += delta * (x - mean);
        }
        cvs.push_back(std::sqrt(m2 / 9999.0) / mean);
    }
    const bool hardening = strictly_monotone(cvs, false) && cvs.back() < 0.05;

    ComplexVector h_hat(100), h_re(100);
    double gain_mean = 0.0;
    for (int i = 0; i < 100000; ++i) {
        g.fill_complex_unit(h_hat);
        g.fill_complex_unit(h_re);
        const double gain =
            std::norm(kernels::dot_conj(h_re, h_hat)) / kernels::norm_sqr(h_hat);
        gain_mean += (gain - gain_mean) / (i + 1);
    }
    const bool beam = gain_mean >= 0.99 && gain_mean <= 1.01;
    return {hardening && beam, "norm spread ratios " + num(cvs[0]) + "/" + num(cvs[1]) + "/" +
                                   num(cvs[2]) + "/" + num(cvs[3]) + ", mean leaked beam gain " +
                                   num(gain_mean)};
}

std::pair<bool, std::string> check_reproducibility(std::uint64_t seed) {
    Scenario proto;
    proto.samples = 2000;
    proto.seed = seed;
    proto.workers = 1;
    const Scenario s2 = builtin_scenario("fig2", proto);
    const bool analytic_stable = to_csv(run_scenario(s2)) == to_csv(run_scenario(s2));

    proto.workers = 2;
    const Scenario s4 = builtin_scenario("fig4", proto);
    const bool mc_stable = to_csv(run_scenario(s4)) == to_csv(run_scenario(s4));

    SystemParams p;
    const OutageEstimate e1 = estimate_outage_capacity(p, 100.0, 20000, seed, 2);
    const OutageEstimate e2 = estimate_outage_capacity(p, 100.0, 20000, seed, 2);
    const bool est_stable = e1.c_soc_hat == e2.c_soc_hat && e1.ci_low == e2.ci_low &&
                            e1.ci_high == e2.ci_high;
    const bool ok = analytic_stable && mc_stable && est_stable;
    return {ok, std::string("analytic sweep ") + (analytic_stable ? "stable" : "UNSTABLE") +
                    ", sampled sweep " + (mc_stable ? "stable" : "UNSTABLE") + ", estimator " +
                    (est_stable ? "bit-identical" : "DIVERGED")};
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(timed("closed-form-vs-search-agreement", 2.0,
                        [seed] { return check_search_agreement(seed); }));
    out.push_back(timed("feasibility-boundary-signs", 1.0, [] { return check_boundary_signs(); }));
    out.push_back(timed("unimodality-and-slope", 5.0,
                        [seed] { return check_unimodality_and_slope(seed); }));
    out.push_back(timed("simulation-vs-closed-form", 120.0,
                        [seed] { return check_simulation_agreement(seed); }));
    out.push_back(timed("power-asymptotics", 1.0, [] { return check_asymptotics(); }));
    out.push_back(timed("parameter-monotonicity", 1.0, [] { return check_monotonicity(); }));
    out.push_back(timed("optimal-beats-fixed", 10.0, [seed] { return check_dominance(seed); }));
    out.push_back(timed("channel-statistics", 30.0,
                        [seed] { return check_channel_statistics(seed); }));
    out.push_back(timed("reproducibility", 30.0, [seed] { return check_reproducibility(seed); }));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace secrelay
