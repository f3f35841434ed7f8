#include "basketpricer/calibrate_mixture.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "basketpricer/calibrate_lognormal.hpp"
#include "basketpricer/errors.hpp"
#include "basketpricer/rootfind.hpp"

namespace basket {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Normalized skewness ratio of the approximant as a function of x = s^2.
// As x -> 0+ the three-term numerator cancels catastrophically while the
// true ratio tends to 0+, so evaluations drowned in roundoff are classified
// as "below eta", i.e. g < 0. Arguments past the mgf domain (overflow /
// non-finite values) classify as "above", i.e. g = +inf.
double g_value(double x, const MixingLaw& law, double abs_eta) {
    const double t1 = law.mgf(4.5 * x);
    const double t2 = 3.0 * law.mgf(0.5 * x) * law.mgf(2.0 * x);
    const double t3 = 2.0 * std::pow(law.mgf(0.5 * x), 3);
    if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(t3)) {
        return kInf;
    }
    const double var = law.mgf(2.0 * x) - std::pow(law.mgf(0.5 * x), 2);
    if (!(var > 0.0)) {
        return -abs_eta;
    }
    const double num = t1 - t2 + t3;
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() *
                         (std::fabs(t1) + std::fabs(t2) + std::fabs(t3));
    if (std::fabs(num) <= noise) {
        return -abs_eta;
    }
    return num / (var * std::sqrt(var)) - abs_eta;
}

}  // namespace

double solve_mixture_shape(double eta, const MixingLaw& law,
                           ShapeRootDiagnostics* diag) {
    const double abs_eta = std::fabs(eta);
    if (abs_eta <= kEtaMin) {
        throw DegenerateSkewError("|eta| at or below " + std::to_string(kEtaMin));
    }
    const double bound = law.mgf_domain_bound;
    if (!(bound > 0.0)) {
        throw NoRootError("mgf domain of law " + law.label + " is empty");
    }
    // phi(9x/2) is the widest argument, so x stays below (2/9) * bound. For
    // unbounded mgfs cap where exp-type mgfs would overflow anyway.
    const double hi =
        std::isfinite(bound) ? (2.0 / 9.0) * bound * (1.0 - 1e-9) : 150.0;
    const double lo = 1e-12;

    constexpr int kGridPoints = 256;
    std::vector<double> xs(kGridPoints), gs(kGridPoints);
    const double step = std::log(hi / lo) / (kGridPoints - 1);
    double g_min = kInf, g_max = -kInf;
    for (int i = 0; i < kGridPoints; ++i) {
        xs[i] = lo * std::exp(step * i);
        gs[i] = g_value(xs[i], law, abs_eta);
        if (std::isfinite(gs[i])) {
            g_min = std::fmin(g_min, gs[i]);
            g_max = std::fmax(g_max, gs[i]);
        }
    }

    int first_change = -1;
    int sign_changes = 0;
    for (int i = 0; i + 1 < kGridPoints; ++i) {
        const bool neg = gs[i] < 0.0;
        const bool next_neg = gs[i + 1] < 0.0;
        if (gs[i] == 0.0 || neg != next_neg) {
            ++sign_changes;
            if (first_change < 0) {
                first_change = i;
            }
        }
    }
    if (first_change < 0) {
        throw NoRootError("no sign change of the shape equation for law " +
                          law.label + ", |eta| = " + std::to_string(abs_eta) +
                          ", g in [" + std::to_string(g_min) + ", " +
                          std::to_string(g_max) + "]");
    }

    const auto g = [&](double x) { return g_value(x, law, abs_eta); };
    double root = gs[first_change] == 0.0
                      ? xs[first_change]
                      : brent_root(g, xs[first_change], xs[first_change + 1],
                                   gs[first_change], gs[first_change + 1]);
    if (diag != nullptr) {
        diag->sign_changes = sign_changes;
        diag->residual = std::fabs(g(root));
        diag->g_min = g_min;
        diag->g_max = g_max;
    }
    return root;
}

MixtureParams calibrate_mixture(const MomentSummary& ms, const MixingLaw& law) {
    if (ms.sigma <= 0.0 || !ms.skew_defined) {
        throw ZeroVarianceError("calibration requires sigma_B > 0");
    }
    if (std::fabs(ms.eta) <= kEtaMin) {
        throw DegenerateSkewError("|eta_B| = " + std::to_string(ms.eta) +
                                  " at or below " + std::to_string(kEtaMin) +
                                  "; use the normal-approximation fallback");
    }
    MixtureParams p;
    p.law = law;
    p.x = solve_mixture_shape(ms.eta, law);
    p.c = ms.eta > 0.0 ? 1.0 : -1.0;
    p.s = std::sqrt(p.x);
    const double phi_half = law.mgf(0.5 * p.x);
    const double var_term = law.mgf(2.0 * p.x) - phi_half * phi_half;
    if (!(var_term > 0.0)) {
        throw NoRootError("variance term phi(2x) - phi(x/2)^2 not positive at "
                          "the calibrated root");
    }
    p.m = 0.5 * std::log(ms.sigma * ms.sigma / var_term);
    p.tau = p.c * ms.mu - phi_half * ms.sigma / std::sqrt(var_term);
    return p;
}

MomentSummary approximant_moments_mixture(const MixtureParams& p) {
    // Central-moment route, same rearrangement as the log-normal case:
    //   M2 - M1^2          = e^{2m} (phi(2x) - phi(x/2)^2)
    //   M3 - 3M1M2 + 2M1^3 = c e^{3m} (phi(9x/2) - 3phi(x/2)phi(2x) + 2phi(x/2)^3)
    const double phi_half = p.law.mgf(0.5 * p.x);
    const double phi_two = p.law.mgf(2.0 * p.x);
    const double phi_nine = p.law.mgf(4.5 * p.x);
    const double em = std::exp(p.m);
    const double m1 = p.c * (em * phi_half + p.tau);
    const double variance = em * em * (phi_two - phi_half * phi_half);
    const double third =
        p.c * em * em * em *
        (phi_nine - 3.0 * phi_half * phi_two + 2.0 * phi_half * phi_half * phi_half);
    const double m2 = variance + m1 * m1;
    const double m3 = third + 3.0 * m1 * m2 - 2.0 * m1 * m1 * m1;
    return summarize_raw_moments(m1, m2, m3);
}

}  // namespace basket
