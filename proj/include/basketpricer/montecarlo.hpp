#pragma once

#include <cstdint>

#include "basketpricer/basket_spec.hpp"
#include "basketpricer/mixing_law.hpp"

namespace basket {

// Simulation layout. Paths split into `streams` equal blocks whose partial
// sums merge pairwise in block order, so a fixed (seed, streams, antithetic)
// triple gives bit-identical results for any number of worker threads.
// With antithetic on, `paths` counts mirrored pairs and each sample is the
// pair average.
struct McConfig {
    std::int64_t paths = 1'000'000;
    std::uint64_t seed = 42;
    int streams = 1;
    bool antithetic = false;

    void validate() const;  // throws InvalidSpecError
};

struct McResult {
    double mean = 0.0;
    double std_error = 0.0;  // sample stdev / sqrt(paths)
    std::int64_t paths = 0;
};

// Sample raw moments of B(T) plus, when streams >= 2, standard errors of the
// moment estimates taken across the stream blocks.
struct McMoments {
    MomentSummary moments;
    double se_m1 = 0.0;
    double se_m2 = 0.0;
    double se_m3 = 0.0;
    double se_mu = 0.0;
    double se_sigma = 0.0;
    double se_eta = 0.0;
};

// Discounted payoff mean of the correlated terminal log-normal model.
McResult mc_price_lognormal(const BasketSpec& spec, const McConfig& cfg);

// Time-changed model: one common subordinator draw per path, then correlated
// normals, with the martingale normalization 1/phi(vol^2/2).
McResult mc_price_mixture(const BasketSpec& spec, const MixingLaw& law,
                          const McConfig& cfg);

// Moment sampler backing the moment-formula tests. law == nullptr simulates
// the plain log-normal model.
McMoments mc_moments(const BasketSpec& spec, const MixingLaw* law,
                     const McConfig& cfg);

namespace detail {
// Worker-pool width override for determinism tests; 0 picks
// hardware_concurrency.
void set_mc_threads(int n);
}  // namespace detail

}  // namespace basket
