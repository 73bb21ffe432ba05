#include "secrelay/scenario.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "secrelay/analytic.hpp"
#include "secrelay/errors.hpp"
#include "secrelay/monte_carlo.hpp"
#include "secrelay/rng.hpp"

namespace secrelay {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, static_cast<std::size_t>(ptr - buf));
}

// Parameters that move the relative path loss. Curves over one of these get
// a per-group feasibility column; otherwise one trailing column serves the
// whole row.
bool affects_r_l(const std::string& p) {
    return p == "eps" || p == "alpha_re" || p == "alpha_rd" || p == "rho";
}

void apply_param(SystemParams& params, const std::string& name, double value) {
    if (name == "snr_s")
        params.p_s = db_to_linear(value);
    else if (name == "snr_r")
        params.p_r = db_to_linear(value);
    else if (name == "eps")
        params.epsilon = value;
    else if (name == "alpha_re")
        params.alpha_re = value;
    else if (name == "alpha_sr")
        params.alpha_sr = value;
    else if (name == "alpha_rd")
        params.alpha_rd = value;
    else if (name == "rho")
        params.rho = value;
    else
        throw InvalidParameter("unknown sweep parameter: " + name);
}

std::string column_tag(const std::string& param) {
    if (param == "snr_s") return "snr_s_db";
    if (param == "snr_r") return "snr_r_db";
    return param;
}

}  // namespace

SweepTable run_scenario(const Scenario& sc) {
    if (sc.axis_values.empty()) throw InvalidParameter("sweep needs at least one axis value");
    const bool has_curves = !sc.curves.param.empty();
    if (has_curves && sc.curves.values.empty())
        throw InvalidParameter("curve parameter named but no curve values given");
    const std::size_t n_curves = has_curves ? sc.curves.values.size() : 1;
    const bool with_analytic = sc.mode != SweepMode::monte_carlo;
    const bool with_mc = sc.mode != SweepMode::analytic;
    const bool feasible_per_group = has_curves && affects_r_l(sc.curves.param);
    const bool axis_is_rl = sc.axis_param == "r_l";
    if (axis_is_rl && feasible_per_group)
        throw InvalidParameter(
            "an r_l axis fixes the path-loss geometry; curves may not move it");

    SweepTable table;
    if (axis_is_rl)
        table.columns = {"r_l", "alpha_re"};
    else if (sc.axis_param == "snr_r")
        table.columns = {"snr_r_db", "p_r"};
    else if (sc.axis_param == "snr_s")
        table.columns = {"snr_s_db", "p_s"};
    else if (sc.axis_param == "alpha_re")
        table.columns = {"alpha_re"};
    else
        throw InvalidParameter("unknown sweep axis: " + sc.axis_param);

    auto label = [&](const char* base_name, std::size_t ci) {
        std::string s(base_name);
        if (has_curves)
            s += "[" + column_tag(sc.curves.param) + "=" + format_double(sc.curves.values[ci]) + "]";
        return s;
    };
    for (std::size_t ci = 0; ci < n_curves; ++ci) {
        switch (sc.objective) {
            case Objective::fixed_power:
                if (with_analytic) table.columns.push_back(label("c_soc", ci));
                if (with_mc) {
                    table.columns.push_back(label("c_soc_mc", ci));
                    table.columns.push_back(label("ci_low", ci));
                    table.columns.push_back(label("ci_high", ci));
                }
                break;
            case Objective::optimal_power:
                table.columns.push_back(label("p_r_star", ci));
                if (with_analytic) {
                    table.columns.push_back(label("c_soc_max", ci));
                    if (sc.include_ceiling) table.columns.push_back(label("ceiling", ci));
                }
                if (with_mc) {
                    table.columns.push_back(label("c_soc_mc", ci));
                    table.columns.push_back(label("ci_low", ci));
                    table.columns.push_back(label("ci_high", ci));
                }
                break;
            case Objective::fixed_vs_optimal:
                table.columns.push_back(label("p_r_star", ci));
                if (with_analytic) {
                    table.columns.push_back(label("c_fixed", ci));
                    table.columns.push_back(label("c_opt", ci));
                    table.columns.push_back(label("gain", ci));
                }
                if (with_mc) {
                    table.columns.push_back(label("c_fixed_mc", ci));
                    table.columns.push_back(label("ci_low_fixed", ci));
                    table.columns.push_back(label("ci_high_fixed", ci));
                    table.columns.push_back(label("c_opt_mc", ci));
                    table.columns.push_back(label("ci_low_opt", ci));
                    table.columns.push_back(label("ci_high_opt", ci));
                }
                break;
        }
        if (feasible_per_group) table.columns.push_back(label("feasible", ci));
    }
    if (!feasible_per_group) table.columns.push_back("feasible");

    for (std::size_t ri = 0; ri < sc.axis_values.size(); ++ri) {
        const double av = sc.axis_values[ri];
        std::vector<double> row;
        row.reserve(table.columns.size());

        double implied_alpha_re = kNaN;
        if (axis_is_rl) {
            if (!(av > 0.0) || !std::isfinite(av))
                throw InvalidParameter("r_l axis values must be finite and > 0");
            const double a =
                (sc.base.rho * sc.base.alpha_rd) * static_cast<double>(sc.base.n_r);
            implied_alpha_re = av * a / (-std::log(sc.base.epsilon));
            row.push_back(av);
            row.push_back(implied_alpha_re);
        } else if (sc.axis_param == "snr_r" || sc.axis_param == "snr_s") {
            row.push_back(av);
            row.push_back(db_to_linear(av));
        } else {
            row.push_back(av);
        }

        bool trailing_feasible = true;
        for (std::size_t ci = 0; ci < n_curves; ++ci) {
            SystemParams params = sc.base;
            if (has_curves) apply_param(params, sc.curves.param, sc.curves.values[ci]);
            if (axis_is_rl)
                params.alpha_re = implied_alpha_re;
            else
                apply_param(params, sc.axis_param, av);
            params.validate();
            const double p_fixed = params.p_r.value_or(sc.fixed_p_r);

            DerivedParams derived = derive_params(params);
            if (axis_is_rl) {
                // The grid value is authoritative; re-deriving it from the
                // implied alpha_re would round-trip through a division and
                // miss exact boundary points like r_l = 1.
                derived.r_l = av;
                derived.secrecy_feasible = av < 1.0;
            }
            const bool feasible = derived.secrecy_feasible;
            const std::uint64_t point_seed = mix_seed(sc.seed, ri, ci);

            auto push_mc = [&](double p_r_mc, std::uint64_t slot) {
                const OutageEstimate est = estimate_outage_capacity(
                    params, p_r_mc, sc.samples, mix_seed(point_seed, slot), sc.workers);
                row.push_back(est.c_soc_hat);
                row.push_back(est.ci_low);
                row.push_back(est.ci_high);
            };
            auto push_nan = [&](int count) {
                for (int i = 0; i < count; ++i) row.push_back(kNaN);
            };

            switch (sc.objective) {
                case Objective::fixed_power: {
                    if (with_analytic)
                        row.push_back(secrecy_outage_capacity(derived, params.w, p_fixed));
                    if (with_mc) push_mc(p_fixed, 0);
                    break;
                }
                case Objective::optimal_power: {
                    double p_star = kNaN, c_max = kNaN, ceil_v = kNaN;
                    if (feasible) {
                        p_star = optimal_relay_power(derived);
                        c_max = secrecy_outage_capacity(derived, params.w, p_star);
                        ceil_v = saturation_ceiling(derived, params.w);
                    }
                    row.push_back(p_star);
                    if (with_analytic) {
                        row.push_back(c_max);
                        if (sc.include_ceiling) row.push_back(ceil_v);
                    }
                    if (with_mc) {
                        if (feasible)
                            push_mc(p_star, 0);
                        else
                            push_nan(3);
                    }
                    break;
                }
                case Objective::fixed_vs_optimal: {
                    const double c_fixed = secrecy_outage_capacity(derived, params.w, p_fixed);
                    double p_star = kNaN, c_opt = kNaN, gain = kNaN;
                    if (feasible) {
                        p_star = optimal_relay_power(derived);
                        c_opt = secrecy_outage_capacity(derived, params.w, p_star);
                        gain = c_opt - c_fixed;
                    }
                    row.push_back(p_star);
                    if (with_analytic) {
                        row.push_back(c_fixed);
                        row.push_back(c_opt);
                        row.push_back(gain);
                    }
                    if (with_mc) {
                        push_mc(p_fixed, 0);
                        if (feasible)
                            push_mc(p_star, 1);
                        else
                            push_nan(3);
                    }
                    break;
                }
            }
            if (feasible_per_group) row.push_back(feasible ? 1.0 : 0.0);
            trailing_feasible = trailing_feasible && feasible;
        }
        if (!feasible_per_group) row.push_back(trailing_feasible ? 1.0 : 0.0);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string to_csv(const SweepTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

Scenario builtin_scenario(const std::string& name, const Scenario& proto,
                          const std::string& fig3_axis) {
    Scenario sc = proto;
    sc.name = name;
    sc.axis_values.clear();
    sc.curves = {};
    sc.include_ceiling = false;
    sc.fixed_p_r = proto.base.p_r.value_or(100.0);
    sc.base.p_r.reset();

    auto grid = [](double lo, double hi, double step) {
        std::vector<double> v;
        for (int i = 0;; ++i) {
            const double x = lo + i * step;
            if (x > hi + 1e-9) break;
            v.push_back(x);
        }
        return v;
    };

    if (name == "fig2") {
        sc.axis_param = "r_l";
        for (int i = 1; i <= 28; ++i) sc.axis_values.push_back(i / 20.0);
        sc.curves = {"snr_s", {10.0, 20.0, 30.0}};
        sc.objective = Objective::fixed_power;
        sc.mode = SweepMode::analytic;
    } else if (name == "fig3") {
        if (fig3_axis != "snr_r" && fig3_axis != "snr_s")
            throw InvalidParameter("fig3 axis must be snr_r or snr_s");
        sc.axis_param = fig3_axis;
        sc.axis_values = grid(-10.0, 40.0, 1.0);
        sc.curves = {fig3_axis == "snr_r" ? "snr_s" : "snr_r", {10.0, 20.0, 30.0}};
        sc.objective = Objective::fixed_power;
        sc.mode = SweepMode::analytic;
    } else if (name == "fig4") {
        sc.axis_param = "alpha_re";
        sc.axis_values = grid(1.0, 4.0, 0.5);
        sc.curves = {"eps", {0.01, 0.05}};
        sc.objective = Objective::optimal_power;
        sc.mode = SweepMode::both;
    } else if (name == "fig5") {
        sc.axis_param = "alpha_re";
        sc.axis_values = grid(1.0, 4.0, 0.5);
        sc.objective = Objective::fixed_vs_optimal;
        sc.mode = SweepMode::both;
    } else if (name == "fig6") {
        sc.axis_param = "snr_s";
        sc.axis_values = grid(-10.0, 60.0, 2.0);
        sc.curves = {"alpha_re", {1.0, 2.0, 4.0}};
        sc.objective = Objective::optimal_power;
        sc.mode = SweepMode::analytic;
        sc.include_ceiling = true;
    } else {
        throw InvalidParameter("unknown scenario '" + name +
                               "' (known: fig2 fig3 fig4 fig5 fig6)");
    }
    return sc;
}

std::vector<std::string> builtin_scenario_names() {
    return {"fig2", "fig3", "fig4", "fig5", "fig6"};
}

}  // namespace secrelay
