#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "secrelay/analytic.hpp"
#include "secrelay/system_model.hpp"

using namespace secrelay;

namespace {

// Reference scenario shorthand with a frozen literal path loss, used where
// the oracle values below were computed.
constexpr double kA = 90.0;
constexpr double kB = 1000.0;
constexpr double kRl = 0.0511686;
constexpr double kW = 1e4;

DerivedParams derived_of(double a, double b, double r_l) {
    return DerivedParams{a, b, r_l, r_l > 0.0 && r_l < 1.0};
}

// High-power simplification of the same two-branch rate difference with the
// unit noise offsets dropped from both branches. Valid only when p*a and b
// dominate 1; used as an independent cross-check in that regime.
double capacity_high_power_form(double a, double b, double r_l, double w, double p_r) {
    const double t1 = (p_r * a * b) / (p_r * a + b);
    const double t2 = (p_r * a * r_l * b) / (p_r * a * r_l + b);
    return w * (std::log2(t1) - std::log2(t2));
}

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

}  // namespace

TEST_CASE("capacity vanishes identically at the feasibility boundary") {
    for (double a : {1.0, 90.0, 400.0})
        for (double b : {0.5, 1000.0, 1e6})
            for (double p : {0.0, 0.3, 1.0, 55.0, 1e7})
                CHECK(secrecy_outage_capacity(derived_of(a, b, 1.0), kW, p) == 0.0);
}

TEST_CASE("capacity is exactly zero at zero relay power") {
    CHECK(secrecy_outage_capacity(derived_of(kA, kB, kRl), kW, 0.0) == 0.0);
}

TEST_CASE("capacity matches the frozen oracle value") {
    const double c = secrecy_outage_capacity(derived_of(kA, kB, kRl), kW, 1.5541);
    CHECK(c == doctest::Approx(39317.76267160558).epsilon(1e-13));
}

TEST_CASE("capacity sign tracks feasibility") {
    for (double p : {0.1, 1.0, 10.0, 100.0}) {
        CHECK(secrecy_outage_capacity(derived_of(kA, kB, 0.5), kW, p) > 0.0);
        CHECK(secrecy_outage_capacity(derived_of(kA, kB, 1.2), kW, p) < 0.0);
    }
    CHECK(has_positive_capacity(derived_of(kA, kB, 0.5)));
    CHECK_FALSE(has_positive_capacity(derived_of(kA, kB, 1.0)));
    CHECK_FALSE(has_positive_capacity(derived_of(kA, kB, 1.2)));
}

TEST_CASE("capacity vanishes toward both power extremes") {
    const DerivedParams d = derived_of(kA, kB, kRl);
    const double p_star = optimal_relay_power(d);
    CHECK(std::abs(secrecy_outage_capacity(d, kW, 1e-9 * p_star)) < 1e-3 * kW);
    CHECK(std::abs(secrecy_outage_capacity(d, kW, 1e9 * p_star)) < 1e-3 * kW);
}

TEST_CASE("slope is zero at the optimum and signed around it") {
    const DerivedParams d = derived_of(kA, kB, kRl);
    const double p_star = optimal_relay_power(d);
    const double scale = std::abs(capacity_slope(d, kW, p_star / 2.0));
    CHECK(std::abs(capacity_slope(d, kW, p_star)) <= 1e-9 * scale);
    CHECK(capacity_slope(d, kW, p_star / 2.0) > 0.0);
    CHECK(capacity_slope(d, kW, 2.0 * p_star) < 0.0);
}

TEST_CASE("slope matches central finite differences on random parameters") {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const SystemParams p = random_feasible(gen);
        const DerivedParams d = derive_params(p);
        const double p_star = optimal_relay_power(d);
        const double x = p_star * std::pow(10.0, 4.0 * u(gen) - 2.0);
        const double h = x * 1e-6;
        const double fd = (secrecy_outage_capacity(d, p.w, x + h) -
                           secrecy_outage_capacity(d, p.w, x - h)) /
                          (2.0 * h);
        const double scale =
            std::max(std::abs(fd), std::abs(secrecy_outage_capacity(d, p.w, x) / x));
        worst = std::max(worst, std::abs(capacity_slope(d, p.w, x) - fd) / scale);
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("optimal power matches the frozen oracle value") {
    CHECK(optimal_relay_power(derived_of(kA, kB, kRl)) ==
          doctest::Approx(1.5540778193409257).epsilon(1e-14));
}

TEST_CASE("optimal power scales as the square root of b + 1") {
    const DerivedParams d = derived_of(kA, kB, kRl);
    DerivedParams d4 = d;
    d4.b = 4.0 * (kB + 1.0) - 1.0;  // b + 1 becomes exactly 4 * (kB + 1)
    CHECK(optimal_relay_power(d4) == 2.0 * optimal_relay_power(d));
}

TEST_CASE("optimal power grows with the outage target") {
    SystemParams p;
    double prev = 0.0;
    for (double eps : {0.001, 0.01, 0.05, 0.1}) {
        p.epsilon = eps;
        const double star = optimal_relay_power(derive_params(p));
        CHECK(star > prev);
        prev = star;
    }
}

TEST_CASE("optimal power rejects degenerate inputs") {
    CHECK_THROWS_AS(optimal_relay_power(derived_of(kA, kB, 1.0)), InfeasibleSecrecy);
    CHECK_THROWS_AS(optimal_relay_power(derived_of(kA, kB, 1.7)), InfeasibleSecrecy);
    CHECK_THROWS_AS(optimal_relay_power(derived_of(kA, 0.0, kRl)), DegenerateSource);
}

TEST_CASE("both algebraic routes to the optimal power agree") {
    std::mt19937_64 gen(22);
    for (int i = 0; i < 200; ++i) {
        const SystemParams p = random_feasible(gen);
        const double a = optimal_relay_power(derive_params(p));
        const double b = optimal_relay_power_direct(p);
        CHECK(std::abs(a - b) <= 1e-12 * a);
    }
}

TEST_CASE("full allocation at the reference scenario") {
    SystemParams p;
    const AllocationResult al = allocate_power(p);
    CHECK(al.p_r_star == doctest::Approx(1.554078462886098).epsilon(1e-14));
    CHECK(al.c_soc_max == doctest::Approx(39317.773070664071).epsilon(1e-13));
    CHECK(al.ceiling == doctest::Approx(42885.986236299530).epsilon(1e-13));
    CHECK(al.c_soc_max < al.ceiling);
}

TEST_CASE("maximum capacity decreases with the eavesdropper path loss") {
    SystemParams p;
    double prev = 1e300;
    for (double a_re : {1.0, 2.0, 3.0, 4.0}) {
        p.alpha_re = a_re;
        const double c = allocate_power(p).c_soc_max;
        CHECK(c < prev);
        prev = c;
    }
}

TEST_CASE("maximum capacity approaches the ceiling at high source power") {
    SystemParams p;
    p.p_s = 1e8;
    const AllocationResult al = allocate_power(p);
    CHECK(al.c_soc_max == doctest::Approx(42884.77596725749).epsilon(1e-12));
    CHECK(std::abs(al.c_soc_max - al.ceiling) < 0.01 * al.ceiling);
}

TEST_CASE("saturation ceiling") {
    CHECK(saturation_ceiling(derived_of(kA, kB, 0.5), 1.0) == 1.0);
    CHECK(saturation_ceiling(derived_of(kA, kB, 1.0 - 1e-9), kW) < 1e-4 * kW);
    CHECK(saturation_ceiling(derived_of(kA, kB, kRl), kW) ==
          doctest::Approx(42885.97428787294).epsilon(1e-13));
    CHECK_THROWS_AS(saturation_ceiling(derived_of(kA, kB, 1.0), kW), InfeasibleSecrecy);
}

TEST_CASE("high-power simplification agrees in its regime and only there") {
    const DerivedParams d = derived_of(90.0, 1e7, 0.0511686);
    const double full = secrecy_outage_capacity(d, kW, 1e5);
    const double simplified = capacity_high_power_form(90.0, 1e7, 0.0511686, kW, 1e5);
    CHECK(std::abs(full - simplified) <= 1e-5 * std::abs(full));

    // At moderate power the dropped offsets matter; the canonical form is
    // the one all other results are built on.
    const DerivedParams dm = derived_of(kA, kB, kRl);
    const double full_m = secrecy_outage_capacity(dm, kW, 1.5541);
    const double simplified_m = capacity_high_power_form(kA, kB, kRl, kW, 1.5541);
    CHECK(std::abs(full_m - simplified_m) > 1e-3 * std::abs(full_m));
}

TEST_CASE("capacity rejects negative power") {
    CHECK_THROWS_AS(secrecy_outage_capacity(derived_of(kA, kB, kRl), kW, -1.0), InvalidParameter);
    CHECK_THROWS_AS(capacity_slope(derived_of(kA, kB, kRl), kW, 0.0), InvalidParameter);
}
