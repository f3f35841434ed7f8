// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
// BASKET_ACCEPT_FULL_MC=1 additionally runs the optional 1e7-path benchmarks.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "basketpricer/calibrate_lognormal.hpp"
#include "basketpricer/calibrate_mixture.hpp"
#include "basketpricer/greeks.hpp"
#include "basketpricer/metrics.hpp"
#include "basketpricer/mixing_law.hpp"
#include "basketpricer/moments.hpp"
#include "basketpricer/montecarlo.hpp"
#include "basketpricer/pricing.hpp"
#include "basketpricer/rng.hpp"
#include "basketpricer/scenario.hpp"

using namespace basket;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
    }
    g_notes.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
}

void report(const std::string& criterion, int failures_before) {
    const bool pass = g_failures == failures_before;
    std::cout << (pass ? "PASS" : "FAIL") << " - " << criterion << "\n";
    for (const auto& line : g_notes) {
        std::cout << line << "\n";
    }
    g_notes.clear();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

BasketSpec table2(int scenario, double strike) {
    BasketSpec s;
    switch (scenario) {
        case 1: s.weights = {-1, 1}; s.spots = {100, 120}; s.vols = {0.2, 0.3};
                s.corr = {1, 0.9, 0.9, 1}; break;
        case 2: s.weights = {-1, 1}; s.spots = {150, 100}; s.vols = {0.3, 0.2};
                s.corr = {1, 0.3, 0.3, 1}; break;
        case 3: s.weights = {0.7, 0.3}; s.spots = {110, 90}; s.vols = {0.3, 0.2};
                s.corr = {1, 0.9, 0.9, 1}; break;
        case 4: s.weights = {-1, 1}; s.spots = {200, 50}; s.vols = {0.1, 0.15};
                s.corr = {1, 0.8, 0.8, 1}; break;
        case 5: s.weights = {1, -0.8, -0.5}; s.spots = {95, 90, 105};
                s.vols = {0.2, 0.3, 0.25};
                s.corr = {1, 0.9, 0.8, 0.9, 1, 0.9, 0.8, 0.9, 1}; break;
        default: s.weights = {0.6, 0.8, -1}; s.spots = {100, 90, 95};
                 s.vols = {0.25, 0.3, 0.2};
                 s.corr = {1, 0.9, 0.8, 0.9, 1, 0.9, 0.8, 0.9, 1}; break;
    }
    s.rate = 0.03;
    s.horizon = 1.0;
    s.strike = strike;
    return s;
}

struct BenchCell {
    int scenario;
    const char* law;
    double strike;
    double closed_ref;  // published method value
    double mc_ref;      // published benchmark mean
    double mc_se;       // published benchmark standard error (1e7 paths)
};

const BenchCell kClosedCells[] = {
    {1, "exp1", 16.0, 9.4214, 9.3540, 0.0064},
    {2, "gamma22", -50.0, 15.7861, 15.5660, 0.0070},
    {3, "ig12", 124.8, 5.3188, 5.3073, 0.0054},
    {4, "exp1", -140.0, 1.1473, 1.1595, 0.0013},
    {5, "gamma22", -30.0, 7.1307, 7.1012, 0.0029},
    {6, "ig12", 35.0, 9.4512, 9.4288, 0.0056},
};

const BenchCell kScenario1Column[] = {
    {1, "exp1", 16.0, 9.4214, 9.3540, 0.0064},
    {1, "exp1", 18.0, 8.4529, 8.3827, 0.0062},
    {1, "exp1", 20.0, 7.6117, 7.5417, 0.0061},
    {1, "exp1", 22.0, 6.8780, 6.8105, 0.0059},
    {1, "exp1", 24.0, 6.2353, 6.1717, 0.0058},
};

void criterion1_closed_form() {
    const int before = g_failures;
    for (const auto& cell : kClosedCells) {
        const auto law = builtin_law(cell.law);
        const auto spec = table2(cell.scenario, cell.strike);
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = price_basket(spec, &law);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        const double rel = std::fabs(res.price - cell.closed_ref) / cell.closed_ref;
        note(rel <= 0.005,
             std::string("scenario") + std::to_string(cell.scenario) + "/" +
                 cell.law + " closed " + fmt(res.price) + " vs " +
                 fmt(cell.closed_ref) + " (rel " + fmt(rel) + ")");
        note(secs <= 1.0, "runtime " + fmt(secs) + " s <= 1 s");
    }
    report("criterion 1: closed-form table reproduction within 0.5%", before);
}

void criterion2_mc_benchmark() {
    const int before = g_failures;
    const bool full = std::getenv("BASKET_ACCEPT_FULL_MC") != nullptr;
    const std::int64_t paths = full ? 10'000'000 : 1'000'000;
    const double widen = full ? 1.0 : std::sqrt(10.0);

    std::vector<BenchCell> cells(std::begin(kScenario1Column),
                                 std::end(kScenario1Column));
    for (std::size_t i = 1; i < std::size(kClosedCells); ++i) {
        cells.push_back(kClosedCells[i]);
    }
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& cell : cells) {
        const auto law = builtin_law(cell.law);
        const auto spec = table2(cell.scenario, cell.strike);
        McConfig cfg;
        cfg.paths = paths;
        cfg.seed = 20260808;
        cfg.streams = 40;
        const auto mc = mc_price_mixture(spec, law, cfg);
        const double tol = 3.0 * cell.mc_se * widen;
        note(std::fabs(mc.mean - cell.mc_ref) <= tol,
             std::string("scenario") + std::to_string(cell.scenario) + "/" +
                 cell.law + "/K=" + fmt(cell.strike) + " mc " + fmt(mc.mean) +
                 " vs " + fmt(cell.mc_ref) + " +- " + fmt(tol));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    // ten cells; the budget is 30 s per scenario column of five
    note(secs <= 60.0, "total MC runtime " + fmt(secs) + " s <= 60 s");
    report(full ? "criterion 2: MC benchmark (full 1e7 paths, 3 x paper SE)"
                : "criterion 2: MC benchmark (1e6 paths, 3 x paper SE x sqrt(10))",
           before);
}

void criterion3_metrics() {
    const int before = g_failures;

    // published columns, hard-coded: (method value, benchmark) pairs
    struct Fixture {
        const char* name;
        std::vector<CaseResult> cases;
        double c2_printed;
    };
    const Fixture fixtures[] = {
        {"scenario1/exp1",
         {{9.4214, 9.3540, ""}, {8.4529, 8.3827, ""}, {7.6117, 7.5417, ""},
          {6.8780, 6.8105, ""}, {6.2353, 6.1717, ""}},
         0.90},
        {"scenario1/gamma22",
         {{9.7275, 9.7012, ""}, {8.7581, 8.7296, ""}, {7.8858, 7.8562, ""},
          {7.1043, 7.0747, ""}, {6.4060, 6.3771, ""}},
         0.37},
        {"scenario1/ig12",
         {{9.8083, 9.7601, ""}, {8.8378, 8.7898, ""}, {7.9579, 7.9112, ""},
          {7.1639, 7.1194, ""}, {6.4502, 6.4085, ""}},
         0.58},
        {"pooled/exp1",
         {{1.1473, 1.1595, ""}, {6.8238, 6.7895, ""}, {9.0029, 8.9799, ""}},
         0.60},
        {"pooled/gamma22",
         {{1.1438, 1.1457, ""}, {7.1307, 7.1012, ""}, {9.3764, 9.3498, ""}},
         0.29},
        {"pooled/ig12",
         {{1.1279, 1.1310, ""}, {7.1926, 7.1661, ""}, {9.4512, 9.4288, ""}},
         0.29},
    };
    for (const auto& f : fixtures) {
        const auto metrics = c1_c2(f.cases);
        const double c2_rounded = std::round(metrics.c2_pct * 100.0) / 100.0;
        note(metrics.c1_pct == 100.0 && c2_rounded == f.c2_printed,
             std::string(f.name) + " -> C1 " + fmt(metrics.c1_pct) + ", C2 " +
                 fmt(c2_rounded) + " (printed " + fmt(f.c2_printed) + ")");
    }

    // desk-scale: our closed form vs our 1e6-path MC, scenario 1 / exp1
    const auto law = builtin_law("exp1");
    std::vector<CaseResult> ours;
    for (const auto& cell : kScenario1Column) {
        const auto spec = table2(1, cell.strike);
        McConfig cfg;
        cfg.paths = 1'000'000;
        cfg.seed = 7070;
        cfg.streams = 40;
        ours.push_back(CaseResult{price_basket(spec, &law).price,
                                  mc_price_mixture(spec, law, cfg).mean, ""});
    }
    const auto metrics = c1_c2(ours);
    note(metrics.c1_pct == 100.0,
         "desk-scale C1 " + fmt(metrics.c1_pct) + " == 100");
    note(std::fabs(metrics.c2_pct - 0.90) <= 0.30,
         "desk-scale C2 " + fmt(metrics.c2_pct) + " within 0.90 +- 0.30");
    report("criterion 3: C1/C2 metrics reproduce the printed footers", before);
}

double pipeline_price(const MomentSummary& base, double mu, double sigma,
                      double eta, double strike) {
    MomentSummary ms = base;
    ms.mu = mu;
    ms.sigma = sigma;
    ms.eta = eta;
    return price_lognormal(calibrate_lognormal(ms), strike, 0.03, 1.0).price;
}

void criterion4_properties() {
    const int before = g_failures;
    PathRng draws(424243, 0);
    const auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * draws.next_uniform();
    };
    const auto log_uniform = [&](double lo, double hi) {
        return lo * std::exp(uniform(0.0, std::log(hi / lo)));
    };
    const auto sign = [&]() { return draws.next_uniform() < 0.5 ? -1.0 : 1.0; };

    // log-normal moment round-trip <= 1e-9
    {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            MomentSummary ms;
            ms.sigma = log_uniform(0.1, 100.0);
            ms.eta = sign() * log_uniform(0.01, 10.0);
            ms.mu = sign() * uniform(0.5, 3.0) * ms.sigma;
            ms.m1 = ms.mu;
            ms.m2 = ms.sigma * ms.sigma + ms.mu * ms.mu;
            ms.m3 = ms.eta * ms.sigma * ms.sigma * ms.sigma +
                    3.0 * ms.mu * ms.m2 - 2.0 * ms.mu * ms.mu * ms.mu;
            const auto back =
                approximant_moments_lognormal(calibrate_lognormal(ms));
            worst = std::fmax(worst, std::fabs(back.m1 - ms.m1) / std::fabs(ms.m1));
            worst = std::fmax(worst, std::fabs(back.m2 - ms.m2) / std::fabs(ms.m2));
            worst = std::fmax(worst, std::fabs(back.m3 - ms.m3) / std::fabs(ms.m3));
        }
        note(worst <= 1e-9, "log-normal round-trip worst rel " + fmt(worst));
    }

    // mixture moment round-trip <= 1e-6
    {
        const char* names[] = {"exp1", "gamma22", "ig12"};
        double worst = 0.0;
        for (int i = 0; i < 120; ++i) {
            MomentSummary ms;
            ms.sigma = log_uniform(0.1, 100.0);
            ms.eta = sign() * log_uniform(0.05, 5.0);
            ms.mu = sign() * uniform(0.5, 3.0) * ms.sigma;
            ms.m1 = ms.mu;
            ms.m2 = ms.sigma * ms.sigma + ms.mu * ms.mu;
            ms.m3 = ms.eta * ms.sigma * ms.sigma * ms.sigma +
                    3.0 * ms.mu * ms.m2 - 2.0 * ms.mu * ms.mu * ms.mu;
            const auto law = builtin_law(names[i % 3]);
            const auto back =
                approximant_moments_mixture(calibrate_mixture(ms, law));
            worst = std::fmax(worst, std::fabs(back.m1 - ms.m1) / std::fabs(ms.m1));
            worst = std::fmax(worst, std::fabs(back.m2 - ms.m2) / std::fabs(ms.m2));
            worst = std::fmax(worst, std::fabs(back.m3 - ms.m3) / std::fabs(ms.m3));
        }
        note(worst <= 1e-6, "mixture round-trip worst rel " + fmt(worst));
    }

    // cubic residual and Cardano-vs-bisection
    {
        double worst_res = 0.0, worst_diff = 0.0;
        for (double eta = 0.01; eta <= 50.0; eta *= 1.12) {
            const double x = solve_cubic_skew(eta);
            worst_res = std::fmax(
                worst_res, std::fabs(x * x * x + 3 * x * x - 4 - eta * eta) /
                               (1.0 + eta * eta));
            double lo = 1.0, hi = 2.0 + eta * eta;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                (mid * mid * mid + 3 * mid * mid - 4 - eta * eta < 0 ? lo : hi) =
                    mid;
            }
            worst_diff = std::fmax(worst_diff, std::fabs(x - 0.5 * (lo + hi)));
        }
        note(worst_res <= 1e-10, "cubic residual worst " + fmt(worst_res));
        note(worst_diff <= 1e-10, "Cardano vs bisection worst " + fmt(worst_diff));
    }

    // single-asset Black-Scholes equivalence <= 1e-8
    {
        BasketSpec spec;
        spec.weights = {1};
        spec.spots = {100};
        spec.vols = {0.2};
        spec.corr = {1};
        spec.rate = 0.03;
        spec.horizon = 1.0;
        spec.strike = 100.0;
        const double pipeline = price_basket(spec).price;
        const double bs = black_scholes_call(100, 100, 0.2, 0.03, 1.0);
        note(std::fabs(pipeline - bs) <= 1e-8 * bs,
             "single-asset pipeline " + fmt(pipeline) + " vs BS " + fmt(bs));
    }

    // degenerate mixing (unit clock) equivalence <= 1e-6
    {
        const auto pm = builtin_law("pointmass");
        double worst = 0.0;
        int priced = 0;
        for (int rep = 0; rep < 300 && priced < 50; ++rep) {
            BasketSpec spec;
            const int n = 1 + static_cast<int>(draws.next_uniform() * 4) % 4;
            std::vector<double> load(n);
            spec.weights.resize(n);
            spec.spots.resize(n);
            spec.vols.resize(n);
            for (int i = 0; i < n; ++i) {
                spec.weights[i] = sign() * uniform(0.2, 2.0);
                spec.spots[i] = uniform(20.0, 200.0);
                spec.vols[i] = uniform(0.05, 0.5);
                load[i] = uniform(-0.9, 0.9);
            }
            spec.corr.assign(n * n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    spec.corr[i * n + j] = i == j ? 1.0 : load[i] * load[j];
            spec.rate = uniform(-0.01, 0.08);
            spec.horizon = 1.0;
            spec.strike = uniform(-50.0, 150.0);
            const auto ln = price_basket(spec);
            if (ln.method != PriceMethod::closed_form_lognormal ||
                ln.price < 1e-6) {
                continue;
            }
            ++priced;
            const auto mix = price_basket(spec, &pm);
            worst = std::fmax(worst, std::fabs(mix.price - ln.price) / ln.price);
        }
        note(priced == 50 && worst <= 1e-6,
             "unit-clock equivalence worst rel " + fmt(worst) + " over " +
                 std::to_string(priced) + " baskets");
    }

    // analytic greeks vs finite differences <= 1e-4 relative
    {
        MomentSummary pos;
        pos.mu = 107.167271530961;
        pos.sigma = 29.4864048715;
        pos.eta = 0.877767641997;
        MomentSummary neg;
        neg.mu = 5.0;
        neg.sigma = 2.0;
        neg.eta = -1.5;
        double worst = 0.0;
        const auto fd_check = [&](const MomentSummary& ms, double strike) {
            const auto p = calibrate_lognormal(ms);
            const auto g = greeks_lognormal(p, ms, strike, 0.03, 1.0);
            const double rel = 1e-5;
            const double hm = rel * std::fabs(ms.mu);
            const double hs = rel * ms.sigma;
            const double he = rel * std::fabs(ms.eta);
            const double fd_mu =
                (pipeline_price(ms, ms.mu + hm, ms.sigma, ms.eta, strike) -
                 pipeline_price(ms, ms.mu - hm, ms.sigma, ms.eta, strike)) /
                (2 * hm);
            const double fd_sigma =
                (pipeline_price(ms, ms.mu, ms.sigma + hs, ms.eta, strike) -
                 pipeline_price(ms, ms.mu, ms.sigma - hs, ms.eta, strike)) /
                (2 * hs);
            const double fd_eta =
                (pipeline_price(ms, ms.mu, ms.sigma, ms.eta + he, strike) -
                 pipeline_price(ms, ms.mu, ms.sigma, ms.eta - he, strike)) /
                (2 * he);
            worst = std::fmax(worst, std::fabs(g.dprice_dmu - fd_mu) /
                                         std::fmax(std::fabs(fd_mu), 1e-10));
            worst = std::fmax(worst, std::fabs(g.dprice_dsigma - fd_sigma) /
                                         std::fmax(std::fabs(fd_sigma), 1e-10));
            worst = std::fmax(worst, std::fabs(g.dprice_deta - fd_eta) /
                                         std::fmax(std::fabs(fd_eta), 1e-10));
        };
        fd_check(pos, pos.mu);
        fd_check(pos, pos.mu * 1.15);
        fd_check(neg, 2.0);
        fd_check(neg, -2.0);
        note(worst <= 1e-4, "greeks vs FD worst rel " + fmt(worst));
    }

    // monotonicity in the strike and case-boundary continuity
    {
        MomentSummary ms;
        ms.mu = 20.0;
        ms.sigma = 8.0;
        ms.eta = 1.4;
        const auto p = calibrate_lognormal(ms);
        bool monotone = true;
        double prev = 1e300;
        for (int i = 0; i <= 100; ++i) {
            const double k = p.tau - 5.0 + 40.0 * i / 100.0;
            const double cur = price_lognormal(p, k, 0.03, 1.0).price;
            monotone = monotone && cur <= prev + 1e-10;
            prev = cur;
        }
        note(monotone, "price nonincreasing over 100 strikes");

        const double eps = 1e-11;
        const double jump_pos =
            std::fabs(price_lognormal(p, p.tau - eps, 0.03, 1.0).price -
                      price_lognormal(p, p.tau + eps, 0.03, 1.0).price);
        MomentSummary msn = ms;
        msn.eta = -1.4;
        const auto q = calibrate_lognormal(msn);
        const double jump_neg =
            std::fabs(price_lognormal(q, -q.tau - eps, 0.03, 1.0).price -
                      price_lognormal(q, -q.tau + eps, 0.03, 1.0).price);
        note(jump_pos <= 1e-8 && jump_neg <= 1e-8,
             "case-boundary continuity gaps " + fmt(jump_pos) + ", " +
                 fmt(jump_neg));
    }

    report("criterion 4: property suite (no Monte-Carlo)", before);
}

void criterion5_external_comparison() {
    const int before = g_failures;

    // the six-basket comparison study rests on externally published basket
    // parameters that this repo does not redistribute; document that and
    // accept user-supplied parameters instead
    std::ifstream readme(std::string(BASKET_SOURCE_DIR) + "/README.md");
    std::stringstream buf;
    buf << readme.rdbuf();
    const std::string text = buf.str();
    note(text.find("not redistributed") != std::string::npos,
         "README documents the non-redistributed comparison parameters");

    std::istringstream user_supplied(
        "scenario user_basket {\n"
        "  spots   = 95, 105, 100\n"
        "  vols    = 0.25, 0.2, 0.3\n"
        "  weights = 1, -0.5, -0.3\n"
        "  corr    = 0.4, 0.2, 0.6\n"
        "  rate    = 0.02\n"
        "  horizon = 0.5\n"
        "  strikes = 12\n"
        "  law     = lognormal\n"
        "}\n");
    const auto blocks = parse_scenarios(user_supplied);
    const auto res = price_basket(blocks.front().to_spec(12.0));
    note(std::isfinite(res.price) && res.price > 0.0,
         "user-supplied log-normal basket prices to " + fmt(res.price));
    report("criterion 5: external comparison accepted via user parameters",
           before);
}

}  // namespace

int main() {
    criterion1_closed_form();
    criterion2_mc_benchmark();
    criterion3_metrics();
    criterion4_properties();
    criterion5_external_comparison();
    if (g_failures > 0) {
        std::cout << g_failures << " acceptance check(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
