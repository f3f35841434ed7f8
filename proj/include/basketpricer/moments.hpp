#pragma once

#include <cstddef>
#include <vector>

#include "basketpricer/basket_spec.hpp"
#include "basketpricer/mixing_law.hpp"

namespace basket {

// Lower-triangular factor A with A A^T = Sigma.
struct CorrelationFactor {
    std::size_t n = 0;
    std::vector<double> lower;  // n*n row-major, zero above the diagonal

    double at(std::size_t i, std::size_t j) const { return lower[i * n + j]; }
};

// Cholesky with a zero-pivot rule: a pivot inside [-1e-10, 1e-12] is treated
// as exactly singular and its column is zeroed, so positive-semidefinite but
// rank-deficient matrices still factor. A pivot below -1e-10 raises
// NotPsdError.
CorrelationFactor factorize_correlation(const std::vector<double>& corr,
                                        std::size_t n);

// Exact raw moments of B(T) = sum_i w_i S_i(0) e^{(r - vol_i^2/2)T + vol_i sqrt(T) N_i}:
//   m1 = e^{rT} sum_i w_i S_i(0)
//   m2 = e^{2rT} sum_ij  w_i w_j S_i S_j e^{rho_ij vol_i vol_j T}
//   m3 = e^{3rT} sum_ijk w_i w_j w_k S_i S_j S_k
//          e^{(rho_ij vol_i vol_j + rho_ik vol_i vol_k + rho_jk vol_j vol_k) T}
// Sums run compensated; O(n^3).
MomentSummary basket_moments_lognormal(const BasketSpec& spec);

// Raw moments under a common time change Y_T with mgf phi. The martingale
// normalization 1/phi(vol_i^2/2) turns each sum into a ratio of mgf values;
// every mgf argument is checked against the law's finiteness bound first.
MomentSummary basket_moments_mixture(const BasketSpec& spec,
                                     const MixingLaw& law);

}  // namespace basket
