// Command-line front end: closed-form analysis, power optimization, Monte
// Carlo estimation, built-in sweeps, and the self-check battery.
//
// Exit codes: 0 success, 1 invalid parameters or usage, 2 infeasible
// secrecy (no positive-capacity operating point), 3 self-check failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "secrelay/analytic.hpp"
#include "secrelay/errors.hpp"
#include "secrelay/monte_carlo.hpp"
#include "secrelay/scenario.hpp"
#include "secrelay/system_model.hpp"
#include "secrelay/verify.hpp"

namespace {

struct CliValues {
    int n_r = 100;
    double rho = 0.9;
    double eps = 0.01;
    double alpha_sr = 1.0;
    double alpha_rd = 1.0;
    double alpha_re = 1.0;
    double snr_s_db = 10.0;
    std::optional<double> snr_r_db;
    double bandwidth = 10e3;
    std::uint64_t samples = 200000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string out;
    std::string format = "text";
};

secrelay::SystemParams to_system(const CliValues& c) {
    secrelay::SystemParams p;
    p.n_r = c.n_r;
    p.rho = c.rho;
    p.epsilon = c.eps;
    p.alpha_sr = c.alpha_sr;
    p.alpha_rd = c.alpha_rd;
    p.alpha_re = c.alpha_re;
    p.p_s = secrelay::db_to_linear(c.snr_s_db);
    if (c.snr_r_db) p.p_r = secrelay::db_to_linear(*c.snr_r_db);
    p.w = c.bandwidth;
    p.validate();
    return p;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw secrelay::InvalidParameter("cannot open output file: " + out_path);
    f << content;
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

// Relay power to operate at: the explicit request if given, otherwise the
// optimal power (which requires a feasible geometry).
double resolve_p_r(const secrelay::SystemParams& p) {
    if (p.p_r) return *p.p_r;
    return secrelay::optimal_relay_power(secrelay::derive_params(p));
}

int cmd_analyze(const secrelay::SystemParams& p, const CliValues& cli) {
    const secrelay::DerivedParams d = secrelay::derive_params(p);
    const double p_r = resolve_p_r(p);
    const double c = secrelay::secrecy_outage_capacity(d, p.w, p_r);
    if (cli.format == "csv") {
        secrelay::SweepTable t;
        t.columns = {"r_l", "p_r", "c_soc", "feasible"};
        t.rows = {{d.r_l, p_r, c, d.secrecy_feasible ? 1.0 : 0.0}};
        emit(secrelay::to_csv(t), cli.out);
    } else {
        std::string s;
        s += "r_l = " + fmt("%.6g", d.r_l) + "\n";
        s += std::string("feasible = ") + (d.secrecy_feasible ? "yes" : "no") + "\n";
        s += "p_r = " + fmt("%.6g", p_r) + " (" + fmt("%.4g", secrelay::linear_to_db(p_r)) +
             " dB)" + (p.p_r ? "" : " [optimal]") + "\n";
        s += "c_soc = " + fmt("%.6g", c) + " bits/s\n";
        emit(s, cli.out);
    }
    return 0;
}

int cmd_optimize(const secrelay::SystemParams& p, const CliValues& cli) {
    const secrelay::AllocationResult al = secrelay::allocate_power(p);
    const secrelay::DerivedParams d = secrelay::derive_params(p);
    if (cli.format == "csv") {
        secrelay::SweepTable t;
        t.columns = {"p_r_star", "p_r_star_db", "c_soc_max", "ceiling", "r_l"};
        t.rows = {{al.p_r_star, secrelay::linear_to_db(al.p_r_star), al.c_soc_max, al.ceiling,
                   d.r_l}};
        emit(secrelay::to_csv(t), cli.out);
    } else {
        std::string s;
        s += "p_r_star = " + fmt("%.6g", al.p_r_star) + " (" +
             fmt("%.4g", secrelay::linear_to_db(al.p_r_star)) + " dB)\n";
        s += "max capacity = " + fmt("%.6g", al.c_soc_max) + " bits/s\n";
        s += "saturation ceiling = " + fmt("%.6g", al.ceiling) + " bits/s\n";
        s += "r_l = " + fmt("%.6g", d.r_l) + "\n";
        emit(s, cli.out);
    }
    return 0;
}

int cmd_simulate(const secrelay::SystemParams& p, const CliValues& cli) {
    const secrelay::DerivedParams d = secrelay::derive_params(p);
    const double p_r = resolve_p_r(p);
    const secrelay::OutageEstimate est =
        secrelay::estimate_outage_capacity(p, p_r, cli.samples, cli.seed, cli.workers);
    const double closed = secrelay::secrecy_outage_capacity(d, p.w, p_r);
    if (cli.format == "csv") {
        secrelay::SweepTable t;
        t.columns = {"p_r", "n_samples", "c_soc_mc", "ci_low", "ci_high", "c_soc_closed_form"};
        t.rows = {{p_r, static_cast<double>(est.n_samples), est.c_soc_hat, est.ci_low,
                   est.ci_high, closed}};
        emit(secrelay::to_csv(t), cli.out);
    } else {
        std::string s;
        s += "p_r = " + fmt("%.6g", p_r) + (p.p_r ? "" : " [optimal]") + "\n";
        s += "samples = " + std::to_string(est.n_samples) + "\n";
        s += "c_soc estimate = " + fmt("%.6g", est.c_soc_hat) + " bits/s\n";
        s += "95% CI = [" + fmt("%.6g", est.ci_low) + ", " + fmt("%.6g", est.ci_high) + "]\n";
        s += "closed form = " + fmt("%.6g", closed) + " bits/s\n";
        emit(s, cli.out);
    }
    return 0;
}

int cmd_sweep(const secrelay::SystemParams& p, const CliValues& cli,
              const std::string& scenario_name, const std::string& axis_flag) {
    secrelay::Scenario proto;
    proto.base = p;
    proto.samples = cli.samples;
    proto.seed = cli.seed;
    proto.workers = cli.workers;
    const std::string axis = axis_flag == "snr-s" ? "snr_s" : "snr_r";
    const secrelay::Scenario sc = secrelay::builtin_scenario(scenario_name, proto, axis);
    emit(secrelay::to_csv(secrelay::run_scenario(sc)), cli.out);
    return 0;
}

int cmd_verify(std::uint64_t seed) {
    const auto results = secrelay::run_verification(seed);
    std::string s;
    std::size_t passed = 0;
    for (const auto& r : results) {
        s += (r.pass ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
        if (r.pass) ++passed;
    }
    s += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
    std::fputs(s.c_str(), stdout);
    return passed == results.size() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CliValues cli;
    std::string scenario_name;
    std::string axis_flag = "snr-r";

    CLI::App app{"secrecy outage capacity of a two-hop large-antenna relay link"};
    app.fallthrough();
    app.set_config("--config", "", "read key = value defaults from a file; flags override");
    app.add_option("--nr", cli.n_r, "relay antenna count")->capture_default_str();
    app.add_option("--rho", cli.rho, "channel estimate correlation in (0, 1]")
        ->capture_default_str();
    app.add_option("--eps", cli.eps, "target outage probability in (0, 1)")
        ->capture_default_str();
    app.add_option("--alpha-sr", cli.alpha_sr, "source->relay path loss, linear")
        ->capture_default_str();
    app.add_option("--alpha-rd", cli.alpha_rd, "relay->destination path loss, linear")
        ->capture_default_str();
    app.add_option("--alpha-re", cli.alpha_re, "relay->eavesdropper path loss, linear")
        ->capture_default_str();
    app.add_option("--snr-s", cli.snr_s_db, "source transmit SNR, dB")->capture_default_str();
    app.add_option("--snr-r", cli.snr_r_db,
                   "relay transmit SNR, dB (omit to use the optimal power)");
    app.add_option("--bandwidth", cli.bandwidth,
                   "capacity scale factor in Hz (the two-slot convention is folded in)")
        ->capture_default_str();
    app.add_option("--samples", cli.samples, "Monte Carlo sample count")->capture_default_str();
    app.add_option("--seed", cli.seed, "master random seed")
        ->envname("SECRELAY_SEED")
        ->capture_default_str();
    app.add_option("--workers", cli.workers, "sampling threads")->capture_default_str();
    app.add_option("--out", cli.out, "write output to this file instead of stdout");
    app.add_option("--format", cli.format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "closed-form capacity at the given relay power");
    auto* optimize = app.add_subcommand("optimize", "capacity-maximizing relay power");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo outage-capacity estimate");
    auto* sweep = app.add_subcommand("sweep", "run a built-in scenario and emit CSV");
    auto* verify = app.add_subcommand("verify", "run the full self-check battery");
    for (auto* sub : {analyze, optimize, simulate, sweep, verify}) sub->fallthrough();
    sweep->add_option("scenario", scenario_name, "one of: fig2 fig3 fig4 fig5 fig6")->required();
    sweep->add_option("--axis", axis_flag, "fig3 sweep axis")
        ->check(CLI::IsMember({"snr-r", "snr-s"}))
        ->capture_default_str();
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const secrelay::SystemParams params = to_system(cli);
        if (verify->parsed()) return cmd_verify(cli.seed);
        if (analyze->parsed()) return cmd_analyze(params, cli);
        if (optimize->parsed()) return cmd_optimize(params, cli);
        if (simulate->parsed()) return cmd_simulate(params, cli);
        if (sweep->parsed()) return cmd_sweep(params, cli, scenario_name, axis_flag);
        return 1;
    } catch (const secrelay::InfeasibleSecrecy& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        try {
            const secrelay::SystemParams p = to_system(cli);
            const double threshold =
                p.alpha_re * (-std::log(p.epsilon)) / (p.rho * p.alpha_rd);
            std::fprintf(stderr,
                         "the antenna count must exceed %.4g for a positive secrecy "
                         "capacity; the smallest feasible count is %d (requested: %d)\n",
                         threshold, secrelay::min_antennas(p), p.n_r);
        } catch (...) {
        }
        return 2;
    } catch (const secrelay::DegenerateSource& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const secrelay::NoPositiveValue& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
