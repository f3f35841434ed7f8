#pragma once

#include <cstdint>

namespace basket {

// Counter-based generator (Philox2x64-10) keyed by (seed, path index).
// Every simulation path owns an independent stream, so any parallel
// partition of the path range replays the exact same draws.
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t path)
        : seed_(seed), path_(path) {}

    std::uint64_t next_u64();

    // Uniform on the open interval (0, 1), 53-bit resolution.
    double next_uniform();

    // Standard normal via the inverse cdf, so antithetic pairing and tail
    // quantiles are exact.
    double next_normal();

    // Exp(1) via inverse cdf.
    double next_exponential();

private:
    std::uint64_t seed_;
    std::uint64_t path_;
    std::uint64_t block_ = 0;
    std::uint64_t spare_ = 0;
    bool has_spare_ = false;
};

}  // namespace basket
