#include "basketpricer/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace basket {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kInvSqrtPi = 0.56418958354775628695;

// Cody, "Rational Chebyshev approximation for the error function" (1969),
// the CALERF coefficient set for double precision.
constexpr double A[5] = {
    3.16112374387056560e+00, 1.13864154151050156e+02, 3.77485237685302021e+02,
    3.20937758913846947e+03, 1.85777706184603153e-01};
constexpr double B[4] = {
    2.36012909523441209e+01, 2.44024637934444173e+02, 1.28261652607737228e+03,
    2.84423683343917062e+03};
constexpr double C[9] = {
    5.64188496988670089e-01, 8.88314979438837594e+00, 6.61191906371416295e+01,
    2.98635138197400131e+02, 8.81952221241769090e+02, 1.71204761263407058e+03,
    2.05107837782607147e+03, 1.23033935479799725e+03, 2.15311535474403846e-08};
constexpr double D[8] = {
    1.57449261107098347e+01, 1.17693950891312499e+02, 5.37181101862009858e+02,
    1.62138957456669019e+03, 3.29079923573345963e+03, 4.36261909014324716e+03,
    3.43936767414372164e+03, 1.23033935480374942e+03};
constexpr double P[6] = {
    3.05326634961232344e-01, 3.60344899949804439e-01, 1.25781726111229246e-01,
    1.60837851487422766e-02, 6.58749161529837803e-04, 1.63153871373020978e-02};
constexpr double Q[5] = {
    2.56852019228982242e+00, 1.87295284992346047e+00, 5.27905102951428412e-01,
    6.05183413124413191e-02, 2.33520497626869185e-03};

// exp(-y^2) split as exp(-ysq^2) * exp(-del) with ysq a 1/16 grid point,
// which keeps the scaled tail accurate (the classic CALERF trick).
double scaled_exp(double y) {
    const double ysq = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del);
}

double erfc_positive(double y) {
    if (y <= 0.46875) {
        const double z = y * y;
        double xnum = A[4] * z;
        double xden = z;
        for (int i = 0; i < 3; ++i) {
            xnum = (xnum + A[i]) * z;
            xden = (xden + B[i]) * z;
        }
        return 1.0 - y * (xnum + A[3]) / (xden + B[3]);
    }
    if (y <= 4.0) {
        double xnum = C[8] * y;
        double xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + C[i]) * y;
            xden = (xden + D[i]) * y;
        }
        return scaled_exp(y) * (xnum + C[7]) / (xden + D[7]);
    }
    if (y >= 26.5) {
        return 0.0;
    }
    const double z = 1.0 / (y * y);
    double xnum = P[5] * z;
    double xden = z;
    for (int i = 0; i < 4; ++i) {
        xnum = (xnum + P[i]) * z;
        xden = (xden + Q[i]) * z;
    }
    double r = z * (xnum + P[4]) / (xden + Q[4]);
    r = (kInvSqrtPi - r) / y;
    return scaled_exp(y) * r;
}

}  // namespace

double erfc_rational(double x) {
    if (std::isnan(x)) {
        return x;
    }
    return x < 0.0 ? 2.0 - erfc_positive(-x) : erfc_positive(x);
}

double norm_pdf(double z) {
    return std::exp(-0.5 * z * z) / kSqrt2Pi;
}

double norm_cdf(double z) {
    if (std::isnan(z)) {
        return z;
    }
    // Phi(z) = erfc(-z / sqrt(2)) / 2
    return 0.5 * erfc_rational(-z * 0.7071067811865475244);
}

// Wichura, Algorithm AS 241, PPND16 variant.
double norm_cdf_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("norm_cdf_inv: p must be in (0,1)");
    }
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                      6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                    1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                  1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                      3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                    5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                  4.2313330701600911252e+1) * r + 1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                   2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                 3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
               4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                   1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                 6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
               2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                   1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                 2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
               5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                   1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                 1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
               5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -x : x;
}

}  // namespace basket
