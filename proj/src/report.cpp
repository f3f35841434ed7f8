#include "basketpricer/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "basketpricer/calibrate_lognormal.hpp"
#include "basketpricer/errors.hpp"
#include "basketpricer/greeks.hpp"
#include "basketpricer/metrics.hpp"
#include "basketpricer/mixing_law.hpp"
#include "basketpricer/moments.hpp"
#include "basketpricer/montecarlo.hpp"
#include "basketpricer/pricing.hpp"

namespace basket {

namespace {

std::string fixed(double v, int places) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", places, v);
    return buf;
}

std::string opt_fixed(const std::optional<double>& v, int places) {
    return v.has_value() ? fixed(*v, places) : std::string();
}

// Prices one case; rethrows with the scenario label attached.
CaseRow run_case(const ScenarioBlock& block, const std::string& law_name,
                 double strike, const RunOptions& opts) {
    CaseRow row;
    row.scenario = block.name;
    row.law = law_name;
    row.strike = strike;
    row.pooled_group = !block.strikes.empty();

    const BasketSpec spec = block.to_spec(strike);
    const bool lognormal = law_name == "lognormal";
    MixingLaw law;
    if (!lognormal) {
        law = builtin_law(law_name);
    }

    try {
        if (opts.method != RunMethod::mc) {
            const PriceResult pr =
                price_basket(spec, lognormal ? nullptr : &law);
            row.closed_price = pr.price;
            row.case_label = pr.case_label;
            row.quad_rel_error = pr.quad_rel_error;
            switch (pr.method) {
                case PriceMethod::closed_form_lognormal:
                    row.method = "closed_form_lognormal";
                    break;
                case PriceMethod::mixture_quadrature:
                    row.method = "mixture_quadrature";
                    break;
                case PriceMethod::normal_fallback:
                    row.method = "normal_fallback";
                    break;
                case PriceMethod::black_scholes:
                    row.method = "black_scholes";
                    break;
            }
        }
        if (opts.method != RunMethod::closed) {
            McConfig cfg;
            cfg.paths = block.paths.value_or(opts.paths);
            cfg.seed = block.seed.value_or(opts.seed);
            cfg.streams = opts.streams;
            cfg.antithetic = opts.antithetic;
            while (cfg.paths % cfg.streams != 0 && cfg.streams > 1) {
                --cfg.streams;  // keep paths divisible by streams
            }
            const McResult mc = lognormal
                                    ? mc_price_lognormal(spec, cfg)
                                    : mc_price_mixture(spec, law, cfg);
            row.mc_mean = mc.mean;
            row.mc_se = mc.std_error;
        }
        if (row.closed_price.has_value() && row.mc_mean.has_value() &&
            *row.mc_mean != 0.0) {
            row.abs_pct_err =
                100.0 * std::fabs((*row.closed_price - *row.mc_mean) / *row.mc_mean);
        }
    } catch (const Error& e) {
        throw Error("scenario '" + block.name + "', law " + law_name +
                    ", strike " + fixed(strike, 6) + ": " + e.what());
    }
    return row;
}

}  // namespace

RunReport run_scenarios(std::span<const ScenarioBlock> blocks,
                        const RunOptions& opts) {
    RunReport report;
    for (const auto& block : blocks) {
        const auto strikes = block.resolved_strikes();
        for (const auto& law_name : block.laws) {
            for (const double k : strikes) {
                report.rows.push_back(run_case(block, law_name, k, opts));
            }
        }
    }

    if (opts.method == RunMethod::both) {
        // moneyness scenarios score per (scenario, law); single-strike
        // scenarios pool per law
        std::map<std::string, std::vector<CaseResult>> groups;
        std::vector<std::string> order;
        for (const auto& row : report.rows) {
            if (!row.closed_price.has_value() || !row.mc_mean.has_value()) {
                continue;
            }
            const std::string key = row.pooled_group
                                        ? "pooled/" + row.law
                                        : row.scenario + "/" + row.law;
            if (groups.find(key) == groups.end()) {
                order.push_back(key);
            }
            groups[key].push_back(
                CaseResult{*row.closed_price, *row.mc_mean, key});
        }
        for (const auto& key : order) {
            const auto metrics = c1_c2(groups[key]);
            report.metrics.push_back(MetricRow{key, metrics.c1_pct, metrics.c2_pct});
        }
    }
    return report;
}

std::string render_report(const RunReport& report, TableFormat format,
                          bool tolerance_report) {
    std::ostringstream out;
    if (format == TableFormat::csv) {
        out << "scenario,law,strike,closed_price,mc_mean,mc_se,abs_pct_err\n";
        for (const auto& r : report.rows) {
            out << r.scenario << ',' << r.law << ',' << fixed(r.strike, 6)
                << ',' << opt_fixed(r.closed_price, 6) << ','
                << opt_fixed(r.mc_mean, 6) << ',' << opt_fixed(r.mc_se, 4)
                << ',' << opt_fixed(r.abs_pct_err, 2) << '\n';
        }
        for (const auto& m : report.metrics) {
            out << "C1," << m.group << ",,,,," << fixed(m.c1, 2) << '\n';
            out << "C2," << m.group << ",,,,," << fixed(m.c2, 2) << '\n';
        }
        if (tolerance_report) {
            out << "\ncase,method,quad_rel_error\n";
            for (const auto& r : report.rows) {
                out << r.scenario << '/' << r.law << '/' << fixed(r.strike, 6)
                    << ',' << r.method << '(' << r.case_label << ')' << ','
                    << r.quad_rel_error << '\n';
            }
        }
        return out.str();
    }

    out << "| scenario | law | strike | closed | mc_mean | mc_se | abs_pct_err |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : report.rows) {
        out << "| " << r.scenario << " | " << r.law << " | "
            << fixed(r.strike, 6) << " | " << opt_fixed(r.closed_price, 6)
            << " | " << opt_fixed(r.mc_mean, 6) << " | "
            << opt_fixed(r.mc_se, 4) << " | " << opt_fixed(r.abs_pct_err, 2)
            << " |\n";
    }
    if (!report.metrics.empty()) {
        out << "\n| group | C1 | C2 |\n|---|---|---|\n";
        for (const auto& m : report.metrics) {
            out << "| " << m.group << " | " << fixed(m.c1, 2) << " | "
                << fixed(m.c2, 2) << " |\n";
        }
    }
    if (tolerance_report) {
        out << "\n| case | method | quad_rel_error |\n|---|---|---|\n";
        for (const auto& r : report.rows) {
            out << "| " << r.scenario << '/' << r.law << '/'
                << fixed(r.strike, 6) << " | " << r.method << '(' << r.case_label
                << ") | " << r.quad_rel_error << " |\n";
        }
    }
    return out.str();
}

std::vector<GreeksRow> greeks_table(std::span<const ScenarioBlock> blocks,
                                    bool fd_check) {
    std::vector<GreeksRow> rows;
    for (const auto& block : blocks) {
        for (const auto& law : block.laws) {
            if (law != "lognormal") {
                throw InvalidSpecError(
                    "greeks are defined for the log-normal model only; "
                    "scenario '" + block.name + "' uses mixing law '" + law +
                    "'");
            }
        }
        for (const double k : block.resolved_strikes()) {
            const BasketSpec spec = block.to_spec(k);
            const MomentSummary ms = basket_moments_lognormal(spec);
            const ShiftedLognormalParams p = calibrate_lognormal(ms);
            const GreekTriple g =
                greeks_lognormal(p, ms, k, spec.rate, spec.horizon);
            GreeksRow row;
            row.scenario = block.name;
            row.strike = k;
            row.branch = to_string(g.branch);
            row.dmu = g.dprice_dmu;
            row.dsigma = g.dprice_dsigma;
            row.deta = g.dprice_deta;
            row.dxdeta = g.dx_deta;
            if (fd_check) {
                const auto price_at = [&](double mu, double sigma, double eta) {
                    MomentSummary bumped = ms;
                    bumped.mu = mu;
                    bumped.sigma = sigma;
                    bumped.eta = eta;
                    return price_lognormal(calibrate_lognormal(bumped), k,
                                           spec.rate, spec.horizon)
                        .price;
                };
                const double rel = 1e-5;
                const double hmu = rel * std::fabs(ms.mu) + 1e-12;
                const double hs = rel * ms.sigma;
                const double he = rel * std::fabs(ms.eta);
                row.fd_dmu = (price_at(ms.mu + hmu, ms.sigma, ms.eta) -
                              price_at(ms.mu - hmu, ms.sigma, ms.eta)) /
                             (2.0 * hmu);
                row.fd_dsigma = (price_at(ms.mu, ms.sigma + hs, ms.eta) -
                                 price_at(ms.mu, ms.sigma - hs, ms.eta)) /
                                (2.0 * hs);
                row.fd_deta = (price_at(ms.mu, ms.sigma, ms.eta + he) -
                               price_at(ms.mu, ms.sigma, ms.eta - he)) /
                              (2.0 * he);
                double worst = 0.0;
                const auto rel_err = [&](double a, double b) {
                    const double scale = std::fmax(std::fabs(b), 1e-12);
                    return std::fabs(a - b) / scale;
                };
                worst = std::fmax(worst, rel_err(row.dmu, *row.fd_dmu));
                worst = std::fmax(worst, rel_err(row.dsigma, *row.fd_dsigma));
                worst = std::fmax(worst, rel_err(row.deta, *row.fd_deta));
                row.max_rel_err = worst;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string render_greeks(std::span<const GreeksRow> rows, TableFormat format,
                          bool fd_check) {
    std::ostringstream out;
    if (format == TableFormat::csv) {
        out << "scenario,strike,branch,dP_dmu,dP_dsigma,dP_deta,dx_deta";
        if (fd_check) {
            out << ",fd_dmu,fd_dsigma,fd_deta,max_rel_err";
        }
        out << '\n';
        for (const auto& r : rows) {
            out << r.scenario << ',' << fixed(r.strike, 6) << ',' << r.branch
                << ',' << fixed(r.dmu, 10) << ',' << fixed(r.dsigma, 10) << ','
                << fixed(r.deta, 10) << ',' << fixed(r.dxdeta, 10);
            if (fd_check) {
                out << ',' << opt_fixed(r.fd_dmu, 10) << ','
                    << opt_fixed(r.fd_dsigma, 10) << ','
                    << opt_fixed(r.fd_deta, 10) << ',';
                if (r.max_rel_err.has_value()) {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%.3e", *r.max_rel_err);
                    out << buf;
                }
            }
            out << '\n';
        }
        return out.str();
    }
    out << "| scenario | strike | branch | dP/dmu | dP/dsigma | dP/deta |";
    out << (fd_check ? " max_rel_err |\n" : "\n");
    out << "|---|---|---|---|---|---|" << (fd_check ? "---|\n" : "\n");
    for (const auto& r : rows) {
        out << "| " << r.scenario << " | " << fixed(r.strike, 4) << " | "
            << r.branch << " | " << fixed(r.dmu, 8) << " | "
            << fixed(r.dsigma, 8) << " | " << fixed(r.deta, 8) << " |";
        if (fd_check && r.max_rel_err.has_value()) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), " %.3e |", *r.max_rel_err);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace basket
