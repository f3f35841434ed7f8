#include "basketpricer/pricing.hpp"

#include <cmath>
#include <string>

#include "basketpricer/errors.hpp"
#include "basketpricer/moments.hpp"
#include "basketpricer/normal.hpp"
#include "basketpricer/quadrature.hpp"

namespace basket {

namespace {

constexpr double kQuadRelTol = 1e-8;
constexpr double kQuadAbsTol = 1e-13;
constexpr double kTailTarget = 1e-12;
constexpr double kSmallYCutoff = 1e-12;

// Truncation point for the Y integral: walk outward until the local
// exponential tail estimate of density(y) e^{growth y} drops below the
// target. Returns the estimated law mass beyond the cut.
struct TailCut {
    double y_max = 0.0;
    double tail_mass = 0.0;
};

TailCut find_tail_cut(const MixingLaw& law, double growth) {
    TailCut cut;
    double y = 16.0;
    for (int i = 0; i < 60; ++i) {
        const double f1 = law.density(y);
        const double f0 = law.density(y * 0.95);
        // local decay rate of the density, floor keeps the estimate sane
        double rate = 0.0;
        if (f1 > 0.0 && f0 > f1) {
            rate = std::log(f0 / f1) / (0.05 * y);
        }
        if (rate > growth + 1e-3) {
            const double weighted_tail =
                f1 * std::exp(growth * y) / (rate - growth);
            if (weighted_tail < kTailTarget) {
                cut.y_max = y;
                cut.tail_mass = f1 / rate;
                return cut;
            }
        }
        y *= 1.5;
    }
    cut.y_max = y;
    cut.tail_mass = law.density(y);  // could not certify the tail
    return cut;
}

double positive_part(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace

const char* to_string(PricingCase c) {
    switch (c) {
        case PricingCase::C1_KleTau: return "c=1,K<=tau";
        case PricingCase::C1_KgtTau: return "c=1,K>tau";
        case PricingCase::Cneg_KgeNegTau: return "c=-1,K>=-tau";
        case PricingCase::Cneg_KltNegTau: return "c=-1,K<-tau";
    }
    return "?";
}

PricingTerms pricing_terms(const ShiftedLognormalParams& p, double strike) {
    PricingTerms t;
    if (p.c > 0.0) {
        if (strike <= p.tau) {
            t.branch = PricingCase::C1_KleTau;
            return t;
        }
        t.branch = PricingCase::C1_KgtTau;
        t.d12 = (-std::log(strike - p.tau) + p.m) / p.s;
        t.d11 = t.d12 + p.s;
        return t;
    }
    if (strike >= -p.tau) {
        t.branch = PricingCase::Cneg_KgeNegTau;
        return t;
    }
    t.branch = PricingCase::Cneg_KltNegTau;
    t.d22 = (std::log(-strike - p.tau) - p.m) / p.s;
    t.d21 = t.d22 - p.s;
    return t;
}

PriceResult price_lognormal(const ShiftedLognormalParams& p, double strike,
                            double rate, double horizon) {
    const double df = std::exp(-rate * horizon);
    const double forward = std::exp(p.m + 0.5 * p.s * p.s);
    const PricingTerms t = pricing_terms(p, strike);

    PriceResult out;
    out.method = PriceMethod::closed_form_lognormal;
    out.case_label = to_string(t.branch);
    switch (t.branch) {
        case PricingCase::C1_KleTau:
            out.price = df * (forward + p.tau - strike);
            break;
        case PricingCase::C1_KgtTau:
            if (strike - p.tau < 1e-300) {
                // ln(K - tau) would underflow; the Phi terms are saturated
                // and the branch-1 limit applies
                out.price = df * (forward + p.tau - strike);
            } else {
                out.price = df * (forward * norm_cdf(t.d11) -
                                  (strike - p.tau) * norm_cdf(t.d12));
            }
            break;
        case PricingCase::Cneg_KgeNegTau:
            out.price = 0.0;
            break;
        case PricingCase::Cneg_KltNegTau:
            out.price = df * (-forward * norm_cdf(t.d21) +
                              (-strike - p.tau) * norm_cdf(t.d22));
            break;
    }
    out.price = positive_part(out.price);
    return out;
}

PriceResult price_mixture(const MixtureParams& p, double strike, double rate,
                          double horizon) {
    const double df = std::exp(-rate * horizon);
    const double s2 = p.x;  // s^2
    const auto& law = p.law;

    PriceResult out;
    out.method = PriceMethod::mixture_quadrature;

    const bool positive_branch = p.c > 0.0;
    if (positive_branch && strike <= p.tau) {
        out.case_label = to_string(PricingCase::C1_KleTau);
        out.price =
            positive_part(df * (std::exp(p.m) * law.mgf(0.5 * s2) + p.tau - strike));
        return out;
    }
    if (!positive_branch && strike >= -p.tau) {
        out.case_label = to_string(PricingCase::Cneg_KgeNegTau);
        out.price = 0.0;
        return out;
    }

    // q is the standardized log boundary; for a realized clock Y = y,
    //   d11(y) = (q + s^2 y) / (s sqrt(y)),  d12(y) = q / (s sqrt(y))
    // (branch b mirrors the signs). The bracket below is the conditional
    // closed-form price given Y = y, which is nonnegative.
    const double q = positive_branch
                         ? -std::log(strike - p.tau) + p.m
                         : std::log(-strike - p.tau) - p.m;
    const double k_term = positive_branch ? strike - p.tau : -strike - p.tau;
    const double s = p.s;

    const auto bracket = [&](double y) {
        const double sy = s * std::sqrt(y);
        const double grow = std::exp(0.5 * s2 * y + p.m);
        if (positive_branch) {
            return grow * norm_cdf(q / sy + sy) - k_term * norm_cdf(q / sy);
        }
        return -grow * norm_cdf(q / sy - sy) + k_term * norm_cdf(q / sy);
    };
    const auto bracket_limit = [&]() {
        // y -> 0+: Phi terms saturate to the same indicator of q > 0
        if (q > 0.0) {
            return positive_branch ? std::exp(p.m) - k_term
                                   : -std::exp(p.m) + k_term;
        }
        return 0.0;
    };

    if (law.point_mass.has_value()) {
        const double y0 = *law.point_mass;
        out.case_label = positive_branch
                             ? to_string(PricingCase::C1_KgtTau)
                             : to_string(PricingCase::Cneg_KltNegTau);
        out.price = positive_part(
            df * (y0 < kSmallYCutoff ? bracket_limit() : bracket(y0)));
        return out;
    }
    if (!law.density) {
        throw QuadratureError("law " + law.label +
                              " has no density; cannot integrate over Y");
    }

    const TailCut cut = find_tail_cut(law, 0.5 * s2);
    const auto integrand = [&](double y) {
        if (y < kSmallYCutoff) {
            return law.density(y) * bracket_limit();
        }
        return law.density(y) * bracket(y);
    };
    const QuadratureResult quad = integrate_adaptive(
        integrand, 0.0, cut.y_max, kQuadRelTol, kQuadAbsTol);
    if (!quad.converged) {
        throw QuadratureError(
            "quadrature did not reach relative tolerance 1e-8 within the "
            "interval budget (error estimate " +
            std::to_string(quad.abs_error) + ")");
    }

    out.case_label = positive_branch ? to_string(PricingCase::C1_KgtTau)
                                     : to_string(PricingCase::Cneg_KltNegTau);
    out.price = positive_part(df * quad.value);
    out.quad_rel_error =
        quad.value != 0.0 ? quad.abs_error / std::fabs(quad.value) : quad.abs_error;
    out.tail_mass = cut.tail_mass;
    out.tail_warning = cut.tail_mass > 1e-10;
    return out;
}

PriceResult price_basket(const BasketSpec& spec, const MixingLaw* law) {
    spec.validate();
    const MomentSummary ms = law != nullptr ? basket_moments_mixture(spec, *law)
                                            : basket_moments_lognormal(spec);
    const double df = std::exp(-spec.rate * spec.horizon);
    const double strike = spec.strike;

    if (ms.sigma == 0.0) {
        PriceResult out;
        out.method = PriceMethod::normal_fallback;
        out.case_label = "deterministic";
        out.price = df * positive_part(ms.mu - strike);
        return out;
    }
    if (std::fabs(ms.eta) <= kEtaMin) {
        // symmetric basket: the shifted log-normal calibration is singular
        // at eta = 0, price by the matching normal distribution instead
        const double d = (ms.mu - strike) / ms.sigma;
        PriceResult out;
        out.method = PriceMethod::normal_fallback;
        out.case_label = "normal_fallback";
        out.price =
            positive_part(df * ((ms.mu - strike) * norm_cdf(d) + ms.sigma * norm_pdf(d)));
        return out;
    }
    if (law != nullptr) {
        return price_mixture(calibrate_mixture(ms, *law), strike, spec.rate,
                             spec.horizon);
    }
    return price_lognormal(calibrate_lognormal(ms), strike, spec.rate,
                           spec.horizon);
}

double black_scholes_call(double spot, double strike, double vol, double rate,
                          double horizon) {
    if (spot <= 0.0 || vol < 0.0 || horizon <= 0.0) {
        throw InvalidSpecError("black_scholes_call: need spot > 0, vol >= 0, "
                               "horizon > 0");
    }
    const double df = std::exp(-rate * horizon);
    if (strike <= 0.0) {
        return spot - strike * df;
    }
    const double stdev = vol * std::sqrt(horizon);
    if (stdev == 0.0) {
        return positive_part(spot - strike * df);
    }
    const double d1 =
        (std::log(spot / strike) + (rate + 0.5 * vol * vol) * horizon) / stdev;
    const double d2 = d1 - stdev;
    return spot * norm_cdf(d1) - strike * df * norm_cdf(d2);
}

}  // namespace basket
