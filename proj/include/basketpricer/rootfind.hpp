#pragma once

#include <functional>

namespace basket {

// Brent's method on a bracketing interval [lo, hi] with f(lo) f(hi) <= 0.
// Converges to machine precision in x; returns the final abscissa.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double flo, double fhi, int max_iter = 200);

}  // namespace basket
