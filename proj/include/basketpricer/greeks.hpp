#pragma once

#include "basketpricer/basket_spec.hpp"
#include "basketpricer/calibrate_lognormal.hpp"
#include "basketpricer/pricing.hpp"

namespace basket {

// First-order sensitivities of the log-normal approximation price with
// respect to the basket's moment summary (mu_B, sigma_B, eta_B).
struct GreekTriple {
    double dprice_dmu = 0.0;
    double dprice_dsigma = 0.0;
    double dprice_deta = 0.0;
    double dx_deta = 0.0;
    PricingCase branch = PricingCase::C1_KleTau;
};

// Derivative of the Cardano root with respect to the skewness (two-term
// closed form). Requires |eta| > kEtaMin; the expression is 0/0 at eta = 0
// where dx/deta ~ (2/9) eta. Odd in eta by construction.
double dx_deta(double eta);

// Closed forms per branch:
//   c=+1, K<=tau:  (e^{-rT}, 0, 0)
//   c=-1, K>=-tau: (0, 0, 0)
// and the Phi/phi expressions otherwise. A strike within 1e-12 (1 + |tau|)
// of a case boundary raises BoundaryError (the derivative is one-sided).
GreekTriple greeks_lognormal(const ShiftedLognormalParams& p,
                             const MomentSummary& ms, double strike,
                             double rate, double horizon);

// Leading coefficients of the small-skew expansion
//   dPrice/deta = A / eta^2 + B / eta + O(1)
// on the (c=-1, K<-tau) branch:
//   A = 3 e^{-rT} sigma_B (Phi(d21) - Phi(d22)),  B = e^{-rT} sigma_B phi(d21).
// Any other branch raises WrongBranchError.
struct SkewAsymptotics {
    double coef_a = 0.0;
    double coef_b = 0.0;
};

SkewAsymptotics small_skew_diagnostic(const ShiftedLognormalParams& p,
                                      const MomentSummary& ms, double strike,
                                      double rate, double horizon);

}  // namespace basket
