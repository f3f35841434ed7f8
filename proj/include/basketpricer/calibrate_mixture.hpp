#pragma once

#include "basketpricer/basket_spec.hpp"
#include "basketpricer/mixing_law.hpp"

namespace basket {

// Parameters of the approximant c (e^{s sqrt(Y_T) N + m} + tau); here
// x = s^2 solves the shape equation in solve_mixture_shape.
struct MixtureParams {
    double c = 1.0;
    double s = 0.0;
    double m = 0.0;
    double tau = 0.0;
    double x = 0.0;
    MixingLaw law;
};

struct ShapeRootDiagnostics {
    int sign_changes = 0;   // > 1 means the smallest root was taken
    double residual = 0.0;  // |g| at the returned root
    double g_min = 0.0;     // range of g seen on the scan grid
    double g_max = 0.0;
};

// Strictly positive root x of
//   phi(9x/2) - 3 phi(x/2) phi(2x) + 2 phi(x/2)^3
//     = |eta| (phi(2x) - phi(x/2)^2)^(3/2),
// solved in the normalized ratio form g(x) = LHS/(variance term)^(3/2) - |eta|
// by a 256-point geometric scan of (0, (2/9) bound) followed by Brent. When
// several sign changes appear, the smallest root wins and the diagnostics
// record it. Raises NoRootError (with the achieved range of g) when the scan
// finds no sign change.
double solve_mixture_shape(double eta, const MixingLaw& law,
                           ShapeRootDiagnostics* diag = nullptr);

// Moment match for the time-changed approximant:
//   c = sgn(eta), s = sqrt(x),
//   m = ln(sigma^2 / (phi(2x) - phi(x/2)^2)) / 2,
//   tau = sgn(eta) mu - phi(x/2) sigma / sqrt(phi(2x) - phi(x/2)^2).
MixtureParams calibrate_mixture(const MomentSummary& ms, const MixingLaw& law);

// Closed-form raw moments of c (e^{s sqrt(Y_T) N + m} + tau), both sign
// branches; the mixture round-trip oracle.
MomentSummary approximant_moments_mixture(const MixtureParams& p);

}  // namespace basket
