#include "secrelay/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace secrelay {

namespace {

void require_feasible(double r_l) {
    if (!(r_l > 0.0))
        throw InvalidParameter("r_l must be > 0, got " + std::to_string(r_l));
    if (!(r_l < 1.0))
        throw InfeasibleSecrecy("relative path loss r_l = " + std::to_string(r_l) +
                                " >= 1: no positive secrecy capacity at any relay power");
}

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

}  // namespace

double secrecy_outage_capacity(const DerivedParams& derived, double w, double p_r) {
    if (!(p_r >= 0.0)) throw InvalidParameter("p_r must be >= 0, got " + std::to_string(p_r));
    const double pa = p_r * derived.a;
    const double par = pa * derived.r_l;
    const double b1 = derived.b + 1.0;
    // log2((1+pa)(par+b+1) / ((1+par)(pa+b+1))), the factored form of the
    // two-branch expression. Term-wise log1p keeps both vanishing limits
    // (p_r -> 0 and p_r -> inf) and the r_l = 1 cancellation exact.
    return w * (log2_1p(pa) - log2_1p(par) - log2_1p(pa / b1) + log2_1p(par / b1));
}

double capacity_slope(const DerivedParams& derived, double w, double p_r) {
    if (!(p_r > 0.0)) throw InvalidParameter("p_r must be > 0, got " + std::to_string(p_r));
    const double pa = p_r * derived.a;
    const double par = pa * derived.r_l;
    const double b1 = derived.b + 1.0;
    const double den_d = (pa + b1) * (pa + b1 + pa * derived.b);
    const double den_e = (par + b1) * (par + b1 + par * derived.b);
    return w / std::numbers::ln2 * derived.b * b1 * (derived.a / den_d - derived.a * derived.r_l / den_e);
}

double optimal_relay_power(const DerivedParams& derived) {
    require_feasible(derived.r_l);
    if (!(derived.b > 0.0))
        throw DegenerateSource("source power is zero: capacity is identically zero");
    const double stationary = std::sqrt(derived.r_l * (derived.b + 1.0)) / (derived.a * derived.r_l);
    const double direct = std::sqrt((derived.b + 1.0) / (derived.a * derived.a * derived.r_l));
    if (std::abs(stationary - direct) > 1e-12 * stationary)
        throw std::logic_error("optimal power forms disagree beyond 1e-12 relative");
    return stationary;
}

double optimal_relay_power_direct(const SystemParams& params) {
    params.validate();
    const double denom = params.alpha_re * params.rho * params.alpha_rd *
                         static_cast<double>(params.n_r) * -std::log(params.epsilon);
    const DerivedParams derived = derive_params(params);
    require_feasible(derived.r_l);
    return std::sqrt((params.p_s * params.alpha_sr * static_cast<double>(params.n_r) + 1.0) / denom);
}

double peak_capacity(double b, double r_l, double w) {
    require_feasible(r_l);
    const double root = std::sqrt(r_l * (1.0 + b));
    return w * (log2_1p(b / (1.0 + root)) - log2_1p(b / (1.0 + std::sqrt((1.0 + b) / r_l))));
}

double saturation_ceiling(const DerivedParams& derived, double w) {
    require_feasible(derived.r_l);
    return w * std::log2(1.0 / derived.r_l);
}

bool has_positive_capacity(const DerivedParams& derived) {
    return derived.r_l > 0.0 && derived.r_l < 1.0;
}

AllocationResult allocate_power(const SystemParams& params) {
    const DerivedParams derived = derive_params(params);
    const double p_star = optimal_relay_power(derived);
    const double direct = optimal_relay_power_direct(params);
    if (std::abs(p_star - direct) > 1e-12 * p_star)
        throw std::logic_error("optimal power routes disagree beyond 1e-12 relative");
    const double c_max = secrecy_outage_capacity(derived, params.w, p_star);
    const double c_peak = peak_capacity(derived.b, derived.r_l, params.w);
    if (std::abs(c_max - c_peak) > 1e-9 * std::abs(c_peak))
        throw std::logic_error("peak capacity routes disagree beyond 1e-9 relative");
    return AllocationResult{p_star, c_max, saturation_ceiling(derived, params.w)};
}

}  // namespace secrelay
