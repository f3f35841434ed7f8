#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "basketpricer/basket_spec.hpp"
#include "basketpricer/rng.hpp"

namespace testutil {

inline basket::BasketSpec two_asset(std::vector<double> weights,
                                    std::vector<double> spots,
                                    std::vector<double> vols, double rho,
                                    double rate, double horizon,
                                    double strike) {
    basket::BasketSpec spec;
    spec.weights = std::move(weights);
    spec.spots = std::move(spots);
    spec.vols = std::move(vols);
    spec.corr = {1.0, rho, rho, 1.0};
    spec.rate = rate;
    spec.horizon = horizon;
    spec.strike = strike;
    return spec;
}

inline basket::BasketSpec single_asset(double spot, double vol, double rate,
                                       double horizon, double strike) {
    basket::BasketSpec spec;
    spec.weights = {1.0};
    spec.spots = {spot};
    spec.vols = {vol};
    spec.corr = {1.0};
    spec.rate = rate;
    spec.horizon = horizon;
    spec.strike = strike;
    return spec;
}

// The six benchmark baskets (r = 0.03, T = 1). Strike must be supplied;
// scenarios 1-3 quote it as moneyness times B(0).
inline basket::BasketSpec table2(int scenario, double strike) {
    using S = basket::BasketSpec;
    S spec;
    switch (scenario) {
        case 1:
            spec = two_asset({-1, 1}, {100, 120}, {0.2, 0.3}, 0.9, 0.03, 1.0,
                             strike);
            break;
        case 2:
            spec = two_asset({-1, 1}, {150, 100}, {0.3, 0.2}, 0.3, 0.03, 1.0,
                             strike);
            break;
        case 3:
            spec = two_asset({0.7, 0.3}, {110, 90}, {0.3, 0.2}, 0.9, 0.03, 1.0,
                             strike);
            break;
        case 4:
            spec = two_asset({-1, 1}, {200, 50}, {0.1, 0.15}, 0.8, 0.03, 1.0,
                             strike);
            break;
        case 5:
            spec.weights = {1, -0.8, -0.5};
            spec.spots = {95, 90, 105};
            spec.vols = {0.2, 0.3, 0.25};
            break;
        case 6:
            spec.weights = {0.6, 0.8, -1};
            spec.spots = {100, 90, 95};
            spec.vols = {0.25, 0.3, 0.2};
            break;
    }
    if (scenario >= 5) {
        spec.corr = {1.0, 0.9, 0.8, 0.9, 1.0, 0.9, 0.8, 0.9, 1.0};
        spec.rate = 0.03;
        spec.horizon = 1.0;
        spec.strike = strike;
    }
    return spec;
}

// Deterministic uniform helper for randomized property tests (counter-based,
// so results never depend on the standard library's distributions).
class TestDraws {
public:
    explicit TestDraws(std::uint64_t seed) : rng_(seed, 0) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * rng_.next_uniform();
    }

    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform(0.0, std::log(hi / lo)));
    }

    double sign() { return rng_.next_uniform() < 0.5 ? -1.0 : 1.0; }

    int index(int n) {
        return static_cast<int>(rng_.next_uniform() * n) % n;
    }

    // Random valid basket: 1..4 assets, single-factor-perturbed correlation
    // (positive definite by construction).
    basket::BasketSpec spec(double horizon = 1.0) {
        basket::BasketSpec s;
        const int n = 1 + index(4);
        s.weights.resize(n);
        s.spots.resize(n);
        s.vols.resize(n);
        std::vector<double> load(n);
        for (int i = 0; i < n; ++i) {
            s.weights[i] = sign() * uniform(0.2, 2.0);
            s.spots[i] = uniform(20.0, 200.0);
            s.vols[i] = uniform(0.05, 0.5);
            load[i] = uniform(-0.9, 0.9);
        }
        s.corr.assign(n * n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                s.corr[i * n + j] = i == j ? 1.0 : load[i] * load[j];
            }
        }
        s.rate = uniform(-0.01, 0.08);
        s.horizon = horizon;
        s.strike = uniform(-50.0, 150.0);
        return s;
    }

private:
    basket::PathRng rng_;
};

}  // namespace testutil
