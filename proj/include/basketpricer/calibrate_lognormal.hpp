#pragma once

#include "basketpricer/basket_spec.hpp"

namespace basket {

// Below this skewness the shifted log-normal calibration degenerates
// (x - 1 ~ eta^2/9 underflows the log-scale); pricing switches to the
// normal approximation instead.
inline constexpr double kEtaMin = 1e-8;

// Parameters of the approximant c (e^{s N + m} + tau) fitted to the basket's
// first three moments, plus the auxiliary cubic root x = e^{s^2}.
struct ShiftedLognormalParams {
    double c = 1.0;    // sign, +1 or -1
    double s = 0.0;    // shape, > 0
    double m = 0.0;    // log scale
    double tau = 0.0;  // location shift
    double x = 1.0;    // real root of x^3 + 3x^2 - 4 - eta^2 = 0, > 1
};

// Unique real root of x^3 + 3x^2 - 4 - eta^2 = 0 by the explicit two-cube-root
// Cardano expression; x >= 1 with equality iff eta == 0. Total over all finite
// eta (the cubic depends only on eta^2).
double solve_cubic_skew(double eta);

// Closed-form moment match:
//   c = sgn(eta), s = sqrt(ln x), m = ln(sigma^2 / (x(x-1))) / 2,
//   tau = sgn(eta) mu - sigma / sqrt(x - 1).
// Requires sigma > 0 (ZeroVarianceError) and |eta| > kEtaMin
// (DegenerateSkewError).
ShiftedLognormalParams calibrate_lognormal(const MomentSummary& ms);

// Closed-form raw moments of c (e^{s N + m} + tau); the self-verification
// oracle for the round-trip property.
MomentSummary approximant_moments_lognormal(const ShiftedLognormalParams& p);

}  // namespace basket
