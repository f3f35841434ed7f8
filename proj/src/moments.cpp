#include "basketpricer/moments.hpp"

#include <cmath>
#include <string>

#include "basketpricer/accumulate.hpp"
#include "basketpricer/errors.hpp"

namespace basket {

CorrelationFactor factorize_correlation(const std::vector<double>& corr,
                                        std::size_t n) {
    if (corr.size() != n * n || n == 0) {
        throw InvalidSpecError("correlation matrix must be n x n");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(corr[i * n + i] - 1.0) > 1e-12) {
            throw InvalidSpecError("correlation diagonal must be 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (std::fabs(corr[i * n + j] - corr[j * n + i]) > 1e-12) {
                throw InvalidSpecError("correlation matrix must be symmetric");
            }
        }
    }

    CorrelationFactor f;
    f.n = n;
    f.lower.assign(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = corr[j * n + j];
        for (std::size_t k = 0; k < j; ++k) {
            pivot -= f.lower[j * n + k] * f.lower[j * n + k];
        }
        if (pivot < -1e-10) {
            throw NotPsdError("correlation matrix is not positive semidefinite "
                              "(pivot " + std::to_string(pivot) + " at column " +
                              std::to_string(j) + ")");
        }
        if (pivot <= 1e-12) {
            continue;  // singular direction: column stays zero
        }
        const double d = std::sqrt(pivot);
        f.lower[j * n + j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = corr[i * n + j];
            for (std::size_t k = 0; k < j; ++k) {
                s -= f.lower[i * n + k] * f.lower[j * n + k];
            }
            f.lower[i * n + j] = s / d;
        }
    }
    return f;
}

MomentSummary basket_moments_lognormal(const BasketSpec& spec) {
    spec.validate();
    const std::size_t n = spec.size();
    factorize_correlation(spec.corr, n);  // PSD verification
    const double t = spec.horizon;

    // cov_ij = rho_ij vol_i vol_j T
    std::vector<double> cov(n * n);
    std::vector<double> ws(n);
    for (std::size_t i = 0; i < n; ++i) {
        ws[i] = spec.weights[i] * spec.spots[i];
        for (std::size_t j = 0; j < n; ++j) {
            cov[i * n + j] = spec.corr_at(i, j) * spec.vols[i] * spec.vols[j] * t;
        }
    }

    KahanSum s1, s2, s3;
    for (std::size_t i = 0; i < n; ++i) {
        s1.add(ws[i]);
        for (std::size_t j = 0; j < n; ++j) {
            s2.add(ws[i] * ws[j] * std::exp(cov[i * n + j]));
            for (std::size_t k = 0; k < n; ++k) {
                s3.add(ws[i] * ws[j] * ws[k] *
                       std::exp(cov[i * n + j] + cov[i * n + k] + cov[j * n + k]));
            }
        }
    }
    const double ert = std::exp(spec.rate * t);
    return summarize_raw_moments(ert * s1.value(), ert * ert * s2.value(),
                                 ert * ert * ert * s3.value());
}

MomentSummary basket_moments_mixture(const BasketSpec& spec,
                                     const MixingLaw& law) {
    spec.validate();
    const std::size_t n = spec.size();
    factorize_correlation(spec.corr, n);  // PSD verification
    const double bound = law.mgf_domain_bound;

    const auto mgf_checked = [&](double arg) {
        if (arg >= bound) {
            throw MgfDomainError("mgf argument " + std::to_string(arg) +
                                 " reaches the finiteness bound " +
                                 std::to_string(bound) + " of law " + law.label);
        }
        return law.mgf(arg);
    };

    std::vector<double> half_var(n), phi_half(n), ws(n);
    std::vector<double> cross(n * n);  // rho_ij vol_i vol_j, no time factor
    for (std::size_t i = 0; i < n; ++i) {
        half_var[i] = 0.5 * spec.vols[i] * spec.vols[i];
        phi_half[i] = mgf_checked(half_var[i]);
        ws[i] = spec.weights[i] * spec.spots[i];
        for (std::size_t j = 0; j < n; ++j) {
            cross[i * n + j] = spec.corr_at(i, j) * spec.vols[i] * spec.vols[j];
        }
    }

    KahanSum s1, s2, s3;
    for (std::size_t i = 0; i < n; ++i) {
        s1.add(ws[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const double arg2 = half_var[i] + half_var[j] + cross[i * n + j];
            s2.add(ws[i] * ws[j] * mgf_checked(arg2) /
                   (phi_half[i] * phi_half[j]));
            for (std::size_t k = 0; k < n; ++k) {
                const double arg3 = half_var[i] + half_var[j] + half_var[k] +
                                    cross[i * n + j] + cross[i * n + k] +
                                    cross[j * n + k];
                s3.add(ws[i] * ws[j] * ws[k] * mgf_checked(arg3) /
                       (phi_half[i] * phi_half[j] * phi_half[k]));
            }
        }
    }
    const double ert = std::exp(spec.rate * spec.horizon);
    return summarize_raw_moments(ert * s1.value(), ert * ert * s2.value(),
                                 ert * ert * ert * s3.value());
}

}  // namespace basket
