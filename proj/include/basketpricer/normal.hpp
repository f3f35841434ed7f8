#pragma once

namespace basket {

// Standard normal density.
double norm_pdf(double z);

// Standard normal cdf via a rational-approximation erfc (Cody's algorithm),
// absolute error below 1e-15 on [-8, 8]. Smooth, no table lookup.
double norm_cdf(double z);

// Inverse of norm_cdf (Wichura's PPND16). Used for quantile-exact normal
// draws in the Monte-Carlo engine; p must lie strictly inside (0, 1).
double norm_cdf_inv(double p);

// The underlying complementary error function, exposed for accuracy tests.
double erfc_rational(double x);

}  // namespace basket
