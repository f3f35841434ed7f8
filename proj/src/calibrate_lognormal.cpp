#include "basketpricer/calibrate_lognormal.hpp"

#include <cmath>
#include <string>

#include "basketpricer/errors.hpp"

namespace basket {

namespace {

// A few Newton steps on x^3 + 3x^2 - 4 - eta^2; the cube-root cancellation
// in the Cardano expression grows with eta, the polish keeps the residual at
// evaluation precision uniformly.
double polish_cubic(double x, double e2) {
    for (int i = 0; i < 3; ++i) {
        const double f = x * x * x + 3.0 * x * x - 4.0 - e2;
        const double fp = 3.0 * x * x + 6.0 * x;
        const double step = f / fp;
        x -= step;
        if (std::fabs(step) <= 1e-15 * x) {
            break;
        }
    }
    return x;
}

}  // namespace

double solve_cubic_skew(double eta) {
    const double e2 = eta * eta;
    if (e2 == 0.0) {
        return 1.0;  // x^3 + 3x^2 - 4 = (x - 1)(x + 2)^2
    }
    if (std::fabs(eta) > 1e6) {
        // the Cardano difference of cube roots drowns in roundoff here; seed
        // from the asymptotic root x ~ eta^(2/3) - 1 instead
        return polish_cubic(std::cbrt(e2) - 1.0, e2);
    }
    const double disc = std::sqrt(1.0 + 0.25 * e2);
    const double u = 1.0 + 0.5 * e2 + std::fabs(eta) * disc;
    const double v = 1.0 + 0.5 * e2 - std::fabs(eta) * disc;
    // sign-preserving cube roots keep the real branch when v rounds negative
    const double x =
        std::cbrt(u) + std::copysign(std::cbrt(std::fabs(v)), v) - 1.0;
    return std::fmax(polish_cubic(x, e2), 1.0);
}

ShiftedLognormalParams calibrate_lognormal(const MomentSummary& ms) {
    if (ms.sigma <= 0.0 || !ms.skew_defined) {
        throw ZeroVarianceError("calibration requires sigma_B > 0");
    }
    if (std::fabs(ms.eta) <= kEtaMin) {
        throw DegenerateSkewError("|eta_B| = " + std::to_string(ms.eta) +
                                  " at or below " + std::to_string(kEtaMin) +
                                  "; use the normal-approximation fallback");
    }
    ShiftedLognormalParams p;
    p.x = solve_cubic_skew(ms.eta);
    p.c = ms.eta > 0.0 ? 1.0 : -1.0;
    p.s = std::sqrt(std::log(p.x));
    p.m = 0.5 * std::log(ms.sigma * ms.sigma / (p.x * (p.x - 1.0)));
    p.tau = p.c * ms.mu - ms.sigma / std::sqrt(p.x - 1.0);
    return p;
}

MomentSummary approximant_moments_lognormal(const ShiftedLognormalParams& p) {
    // Central-moment route, algebraically identical to expanding
    // E[(c(e^{sN+m}+tau))^k] directly but stable when x is close to 1, where
    // the direct four-term sums cancel to the tiny skew residual:
    //   M2 - M1^2          = e^{2m} x (x - 1)
    //   M3 - 3M1M2 + 2M1^3 = c e^{3m} x^{3/2} (x - 1)^2 (x + 2)
    const double em = std::exp(p.m);
    const double xm1 = p.x - 1.0;
    const double m1 = p.c * (em * std::sqrt(p.x) + p.tau);
    const double variance = em * em * p.x * xm1;
    const double third = p.c * em * em * em * p.x * std::sqrt(p.x) * xm1 *
                         xm1 * (p.x + 2.0);
    const double m2 = variance + m1 * m1;
    const double m3 = third + 3.0 * m1 * m2 - 2.0 * m1 * m1 * m1;
    return summarize_raw_moments(m1, m2, m3);
}

}  // namespace basket
