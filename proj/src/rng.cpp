#include "basketpricer/rng.hpp"

#include <cmath>

#include "basketpricer/normal.hpp"

namespace basket {

namespace {

constexpr std::uint64_t kPhiloxM = 0xD2B74407B1CE6E93ull;
constexpr std::uint64_t kPhiloxW = 0x9E3779B97F4A7C15ull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(prod >> 64);
    lo = static_cast<std::uint64_t>(prod);
}

// Philox2x64, 10 rounds.
inline void philox(std::uint64_t key, std::uint64_t c0, std::uint64_t c1,
                   std::uint64_t& o0, std::uint64_t& o1) {
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi, lo;
        mulhilo(kPhiloxM, c0, hi, lo);
        c0 = hi ^ key ^ c1;
        c1 = lo;
        key += kPhiloxW;
    }
    o0 = c0;
    o1 = c1;
}

}  // namespace

std::uint64_t PathRng::next_u64() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    std::uint64_t o0, o1;
    philox(seed_, block_++, path_, o0, o1);
    spare_ = o1;
    has_spare_ = true;
    return o0;
}

double PathRng::next_uniform() {
    // (k + 1/2) * 2^-53 for k in [0, 2^53): strictly inside (0, 1).
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double PathRng::next_normal() {
    return norm_cdf_inv(next_uniform());
}

double PathRng::next_exponential() {
    return -std::log1p(-next_uniform());
}

}  // namespace basket
