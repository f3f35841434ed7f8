#include "basketpricer/mixing_law.hpp"

#include <cmath>
#include <string>

#include "basketpricer/errors.hpp"
#include "basketpricer/rng.hpp"

namespace basket {

namespace {

// Michael, Schucany and Haas transform for IG(mu, lambda): one squared
// normal, the smaller root of the quadratic, then a uniform picks between
// the root and its reciprocal image.
double sample_inverse_gaussian(PathRng& rng, double mu, double lambda) {
    const double nu = rng.next_normal();
    const double y = nu * nu;
    const double x = mu + mu * mu * y / (2.0 * lambda) -
                     mu / (2.0 * lambda) *
                         std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
    const double u = rng.next_uniform();
    return u <= mu / (mu + x) ? x : mu * mu / x;
}

}  // namespace

MixingLaw point_mass_law(double value) {
    MixingLaw law;
    law.label = value == 1.0 ? "pointmass" : "pointmass(" + std::to_string(value) + ")";
    law.mgf_domain_bound = std::numeric_limits<double>::infinity();
    law.mgf = [value](double s) { return std::exp(s * value); };
    law.sampler = [value](PathRng&) { return value; };
    law.point_mass = value;
    return law;
}

MixingLaw builtin_law(std::string_view name) {
    if (name == "exp1") {
        MixingLaw law;
        law.label = "exp1";
        law.mgf_domain_bound = 1.0;
        law.mgf = [](double s) { return 1.0 / (1.0 - s); };
        law.density = [](double y) { return std::exp(-y); };
        law.sampler = [](PathRng& rng) { return rng.next_exponential(); };
        return law;
    }
    if (name == "gamma22") {
        MixingLaw law;
        law.label = "gamma22";
        law.mgf_domain_bound = 2.0;
        law.mgf = [](double s) {
            const double q = 2.0 / (2.0 - s);
            return q * q;
        };
        law.density = [](double y) { return 4.0 * y * std::exp(-2.0 * y); };
        // Gamma(shape 2, rate 2) as the sum of two Exp(2) draws.
        law.sampler = [](PathRng& rng) {
            return 0.5 * (rng.next_exponential() + rng.next_exponential());
        };
        return law;
    }
    if (name == "ig12") {
        MixingLaw law;
        law.label = "ig12";
        law.mgf_domain_bound = 1.0;
        law.mgf = [](double s) {
            return std::exp(2.0 * (1.0 - std::sqrt(1.0 - s)));
        };
        law.density = [](double y) {
            // IG(mu=1, lambda=2): sqrt(lambda/(2 pi y^3)) exp(-lambda (y-1)^2 / (2 y))
            return std::sqrt(2.0 / (2.0 * M_PI * y * y * y)) *
                   std::exp(-(y - 1.0) * (y - 1.0) / y);
        };
        law.sampler = [](PathRng& rng) {
            return sample_inverse_gaussian(rng, 1.0, 2.0);
        };
        return law;
    }
    if (name == "pointmass") {
        return point_mass_law(1.0);
    }
    throw UnknownLawError("unknown mixing law '" + std::string(name) +
                          "' (expected exp1, gamma22, ig12 or pointmass)");
}

}  // namespace basket
