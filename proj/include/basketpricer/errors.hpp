#pragma once

#include <stdexcept>
#include <string>

namespace basket {

class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spec/input validation failures (array shapes, parameter ranges).
class InvalidSpecError : public Error {
    using Error::Error;
};

// Correlation matrix has a pivot below -1e-10 during factorization.
class NotPsdError : public Error {
    using Error::Error;
};

// Basket variance m2 - m1^2 negative beyond the cancellation tolerance.
class DegenerateBasketError : public Error {
    using Error::Error;
};

// sigma_B == 0: calibration has no log-normal to fit.
class ZeroVarianceError : public Error {
    using Error::Error;
};

// |eta_B| at or below the calibration floor; caller must take the normal
// fallback branch instead.
class DegenerateSkewError : public Error {
    using Error::Error;
};

// An MGF evaluation was requested at or beyond the law's finiteness bound.
class MgfDomainError : public Error {
    using Error::Error;
};

// The shape equation has no sign change on the admissible domain.
class NoRootError : public Error {
    using Error::Error;
};

class UnknownLawError : public Error {
    using Error::Error;
};

class QuadratureError : public Error {
    using Error::Error;
};

// Time-change sampler produced a non-positive or non-finite draw.
class SamplerError : public Error {
    using Error::Error;
};

// Strike sits on a pricing-case boundary; one-sided derivative only.
class BoundaryError : public Error {
    using Error::Error;
};

// Operation called outside the pricing branch it is defined for.
class WrongBranchError : public Error {
    using Error::Error;
};

// Scenario file syntax or consistency problem.
class ParseError : public Error {
    using Error::Error;
};

}  // namespace basket
