#pragma once

#include <functional>

namespace basket {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;  // accumulated Kronrod error estimate
    int intervals = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7, K15) on [lo, hi]: repeatedly bisect the
// interval with the largest error estimate until
//   sum(err) <= max(rel_tol * |value|, abs_tol)
// or the interval budget runs out (converged == false in that case).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi, double rel_tol,
                                    double abs_tol, int max_intervals = 4000);

}  // namespace basket
