#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "secrelay/analytic.hpp"
#include "secrelay/errors.hpp"
#include "secrelay/optimize.hpp"
#include "secrelay/system_model.hpp"

using namespace secrelay;

namespace {

SystemParams random_feasible(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        SystemParams p;
        p.p_s = std::pow(10.0, -0.5 + 4.0 * u(gen));
        p.alpha_sr = 0.25 * std::pow(16.0, u(gen));
        p.alpha_rd = 0.25 * std::pow(16.0, u(gen));
        p.alpha_re = 0.25 * std::pow(16.0, u(gen));
        p.rho = 0.5 + 0.5 * u(gen);
        p.epsilon = std::pow(10.0, -2.7 + 1.7 * u(gen));
        p.n_r = 32 + static_cast<int>(u(gen) * 481.0);
        if (derive_params(p).secrecy_feasible) return p;
    }
}

std::function<double(double)> capacity_objective(const SystemParams& p) {
    const DerivedParams d = derive_params(p);
    const double w = p.w;
    return [d, w](double x) { return secrecy_outage_capacity(d, w, x); };
}

}  // namespace

TEST_CASE("bracketing finds the peak from far below and far above") {
    SystemParams p;
    const auto f = capacity_objective(p);
    const double p_star = optimal_relay_power(derive_params(p));  // about 1.55

    for (double p_init : {1.0, 1.554e6, 1e-7}) {
        const Bracket br = bracket_maximum(f, p_init);
        CHECK(br.low < br.mid);
        CHECK(br.mid < br.high);
        CHECK(f(br.mid) > f(br.low));
        CHECK(f(br.mid) > f(br.high));
        CHECK(br.low < p_star);
        CHECK(p_star < br.high);
    }
}

TEST_CASE("bracketing reports when the objective is never positive") {
    CHECK_THROWS_AS(bracket_maximum([](double) { return 0.0; }, 1.0), NoPositiveValue);
    CHECK_THROWS_AS(bracket_maximum([](double x) { return -1.0 - x; }, 1.0), NoPositiveValue);

    // Infeasible scenario: the capacity is negative at every power.
    SystemParams p;
    p.n_r = 5;
    CHECK_THROWS_AS(bracket_maximum(capacity_objective(p), 1.0), NoPositiveValue);
}

TEST_CASE("golden section pins a known quadratic peak") {
    const auto f = [](double x) { return 10.0 - (x - 5.0) * (x - 5.0); };
    const SearchResult res = golden_section_max(f, Bracket{1.0, 5.0, 9.0}, 1e-6);
    CHECK(std::abs(res.argmax - 5.0) <= 5.0 * 1.1e-6);
    CHECK(res.max_value == doctest::Approx(10.0).epsilon(1e-10));
    CHECK(res.low < res.argmax);
    CHECK(res.argmax < res.high);
    CHECK(res.iterations <= 100);
    CHECK(std::log(res.high / res.low) <= 1.1e-6);
    CHECK(res.max_value >= f(res.low));
    CHECK(res.max_value >= f(res.high));
}

TEST_CASE("tightening the tolerance refines the same argmax") {
    SystemParams p;
    const auto f = capacity_objective(p);
    const Bracket br = bracket_maximum(f, 1.0);
    const SearchResult coarse = golden_section_max(f, br, 1e-3);
    const SearchResult fine = golden_section_max(f, br, 1e-9);
    CHECK(std::abs(std::log(coarse.argmax / fine.argmax)) <= 1e-3);
    CHECK(fine.max_value >= coarse.max_value - 1e-9 * coarse.max_value);
}

TEST_CASE("re-refining a converged bracket barely moves") {
    SystemParams p;
    const auto f = capacity_objective(p);
    const SearchResult res = golden_section_max(f, bracket_maximum(f, 1.0), 1e-8);
    const SearchResult again =
        golden_section_max(f, Bracket{res.low, res.argmax, res.high}, 1e-8);
    CHECK(std::abs(std::log(again.argmax / res.argmax)) <= 1e-8);
}

TEST_CASE("search recovers the closed-form optimum across random scenarios") {
    std::mt19937_64 gen(51);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const SystemParams p = random_feasible(gen);
        const auto f = capacity_objective(p);
        const double p_star = optimal_relay_power(derive_params(p));
        const SearchResult res = golden_section_max(f, bracket_maximum(f, 1.0), 1e-8);
        worst = std::max(worst, std::abs(res.argmax - p_star) / p_star);
        CHECK(res.max_value <= allocate_power(p).c_soc_max * (1.0 + 1e-12));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("tolerance and bracket validation") {
    const auto f = [](double x) { return 10.0 - (x - 5.0) * (x - 5.0); };
    const Bracket ok{1.0, 5.0, 9.0};
    CHECK_THROWS_AS(golden_section_max(f, ok, 1e-13), InvalidParameter);
    CHECK_THROWS_AS(golden_section_max(f, ok, 0.5), InvalidParameter);
    CHECK_THROWS_AS(golden_section_max(f, Bracket{5.0, 1.0, 9.0}, 1e-6), InvalidParameter);
    CHECK_THROWS_AS(golden_section_max(f, Bracket{0.0, 5.0, 9.0}, 1e-6), InvalidParameter);
    CHECK_THROWS_AS(golden_section_max(f, Bracket{1.0, 1.0, 9.0}, 1e-6), InvalidParameter);
    CHECK_THROWS_AS(bracket_maximum(f, 0.0), InvalidParameter);
    CHECK_THROWS_AS(bracket_maximum(f, -3.0), InvalidParameter);
}
