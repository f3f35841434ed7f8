#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace basket {

class PathRng;

// A time-change distribution Y_T, described by everything the pricing and
// simulation layers need: its moment generating function phi (with the sup of
// its finiteness domain), its density on (0, inf), and an exact sampler.
//
// A law may instead be a point mass (deterministic clock); then `point_mass`
// holds the constant and `density` stays empty.
struct MixingLaw {
    std::string label;
    double mgf_domain_bound = std::numeric_limits<double>::infinity();
    std::function<double(double)> mgf;
    std::function<double(double)> density;
    std::function<double(PathRng&)> sampler;
    std::optional<double> point_mass;
};

// Built-in laws:
//   exp1    Exp(1),       phi(s) = 1/(1-s),        bound 1
//   gamma22 Gamma(2,2),   phi(s) = (2/(2-s))^2,    bound 2   (shape 2, rate 2)
//   ig12    IG(1,2),      phi(s) = e^{2(1-sqrt(1-s))}, bound 1
//   pointmass  Y == 1 (the deterministic unit clock)
// Samplers: inverse-cdf exponential, sum of two exponentials, and the
// Michael-Schucany-Haas transform for the inverse Gaussian.
MixingLaw builtin_law(std::string_view name);

// Point mass at an arbitrary positive value. A clock fixed at the horizon T
// reproduces the plain log-normal model with horizon T.
MixingLaw point_mass_law(double value);

}  // namespace basket
