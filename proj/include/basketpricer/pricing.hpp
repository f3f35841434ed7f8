#pragma once

#include <string>

#include "basketpricer/basket_spec.hpp"
#include "basketpricer/calibrate_lognormal.hpp"
#include "basketpricer/calibrate_mixture.hpp"
#include "basketpricer/mixing_law.hpp"

namespace basket {

// The four pricing branches, set by the approximant sign c and the position
// of the strike against the shift tau.
enum class PricingCase {
    C1_KleTau,       // c = +1, K <= tau: forward value, no optionality left
    C1_KgtTau,       // c = +1, K >  tau
    Cneg_KgeNegTau,  // c = -1, K >= -tau: approximant price is 0
    Cneg_KltNegTau,  // c = -1, K <  -tau
};

const char* to_string(PricingCase c);

// Standardized log-boundary terms. d11 = d12 + s and d21 = d22 - s by
// construction; only the pair matching the branch is populated.
struct PricingTerms {
    double d11 = 0.0;
    double d12 = 0.0;
    double d21 = 0.0;
    double d22 = 0.0;
    PricingCase branch = PricingCase::C1_KleTau;
};

PricingTerms pricing_terms(const ShiftedLognormalParams& p, double strike);

enum class PriceMethod {
    closed_form_lognormal,
    mixture_quadrature,
    normal_fallback,
    black_scholes,
};

struct PriceResult {
    double price = 0.0;
    PriceMethod method = PriceMethod::closed_form_lognormal;
    std::string case_label;
    double quad_rel_error = 0.0;   // quadrature only
    double tail_mass = 0.0;        // law mass beyond the truncation point
    bool tail_warning = false;     // tail_mass above 1e-10
};

// Four-branch closed form for the shifted log-normal approximant.
PriceResult price_lognormal(const ShiftedLognormalParams& p, double strike,
                            double rate, double horizon);

// Time-changed price: the branch-1 / branch-3 cases are exact in the mgf;
// the Phi-branches take the expectation over Y_T by adaptive quadrature
// against the law's density (relative tolerance 1e-8). Point-mass laws
// evaluate the integrand at the atom directly.
PriceResult price_mixture(const MixtureParams& p, double strike, double rate,
                          double horizon);

// Full pipeline: moments -> calibration -> price. law == nullptr selects the
// plain log-normal model. Degenerate baskets take documented fallbacks:
// sigma_B == 0 prices the deterministic payoff, |eta_B| <= kEtaMin prices by
// the normal (Bachelier-style) approximation, both labeled in the result.
PriceResult price_basket(const BasketSpec& spec,
                         const MixingLaw* law = nullptr);

// Reference Black-Scholes call (oracle for the single-asset tests).
double black_scholes_call(double spot, double strike, double vol, double rate,
                          double horizon);

}  // namespace basket
