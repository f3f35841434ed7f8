#include "basketpricer/greeks.hpp"

#include <cmath>
#include <string>

#include "basketpricer/errors.hpp"
#include "basketpricer/normal.hpp"

namespace basket {

double dx_deta(double eta) {
    if (std::fabs(eta) <= kEtaMin) {
        throw DegenerateSkewError("dx_deta undefined at |eta| <= " +
                                  std::to_string(kEtaMin));
    }
    const double e2 = eta * eta;
    const double disc = std::sqrt(1.0 + 0.25 * e2);
    const double u = 1.0 + 0.5 * e2 + eta * disc;
    const double v = 1.0 + 0.5 * e2 - eta * disc;
    const double ratio = (1.0 + 0.5 * e2) / disc;
    return (std::pow(u, -2.0 / 3.0) * (eta + ratio) +
            std::pow(v, -2.0 / 3.0) * (eta - ratio)) /
           3.0;
}

GreekTriple greeks_lognormal(const ShiftedLognormalParams& p,
                             const MomentSummary& ms, double strike,
                             double rate, double horizon) {
    const double boundary = p.c > 0.0 ? strike - p.tau : strike + p.tau;
    if (std::fabs(boundary) < 1e-12 * (1.0 + std::fabs(p.tau))) {
        throw BoundaryError("strike lies on the pricing-case boundary; the "
                            "derivative is one-sided there");
    }

    const PricingTerms t = pricing_terms(p, strike);
    const double df = std::exp(-rate * horizon);
    GreekTriple g;
    g.branch = t.branch;
    g.dx_deta = dx_deta(ms.eta);

    const double sqrt_xm1 = std::sqrt(p.x - 1.0);
    switch (t.branch) {
        case PricingCase::C1_KleTau:
            g.dprice_dmu = df;
            break;
        case PricingCase::Cneg_KgeNegTau:
            break;  // all zero
        case PricingCase::C1_KgtTau: {
            const double cdf11 = norm_cdf(t.d11);
            const double cdf12 = norm_cdf(t.d12);
            g.dprice_dmu = df * cdf12;
            g.dprice_dsigma = df / sqrt_xm1 * (cdf11 - cdf12);
            g.dprice_deta = df * ms.sigma / (2.0 * sqrt_xm1) *
                            ((-cdf11 + cdf12) / (p.x - 1.0) +
                             norm_pdf(t.d11) /
                                 (p.x * std::sqrt(std::log(p.x)))) *
                            g.dx_deta;
            break;
        }
        case PricingCase::Cneg_KltNegTau: {
            const double cdf21 = norm_cdf(t.d21);
            const double cdf22 = norm_cdf(t.d22);
            g.dprice_dmu = df * cdf22;
            g.dprice_dsigma = df / sqrt_xm1 * (-cdf21 + cdf22);
            g.dprice_deta = df * ms.sigma / (2.0 * sqrt_xm1) *
                            ((cdf21 - cdf22) / (p.x - 1.0) +
                             norm_pdf(t.d21) /
                                 (p.x * std::sqrt(std::log(p.x)))) *
                            g.dx_deta;
            break;
        }
    }
    return g;
}

SkewAsymptotics small_skew_diagnostic(const ShiftedLognormalParams& p,
                                      const MomentSummary& ms, double strike,
                                      double rate, double horizon) {
    const PricingTerms t = pricing_terms(p, strike);
    if (t.branch != PricingCase::Cneg_KltNegTau) {
        throw WrongBranchError(
            std::string("small-skew asymptotics are defined on the "
                        "(c=-1, K<-tau) branch, got ") +
            to_string(t.branch));
    }
    const double df = std::exp(-rate * horizon);
    SkewAsymptotics a;
    a.coef_a = 3.0 * df * ms.sigma * (norm_cdf(t.d21) - norm_cdf(t.d22));
    a.coef_b = df * ms.sigma * norm_pdf(t.d21);
    return a;
}

}  // namespace basket
