#pragma once

#include <cstddef>
#include <vector>

namespace basket {

// Kahan compensated accumulator. The basket moment sums mix large positive
// and negative terms, so plain summation can lose the small residual that
// the skewness lives in.
class KahanSum {
public:
    void add(double v) {
        const double y = v - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Deterministic pairwise reduction of per-block partial sums. Merge order
// depends only on the block count, never on thread scheduling.
inline double pairwise_merge(std::vector<double> parts) {
    if (parts.empty()) {
        return 0.0;
    }
    while (parts.size() > 1) {
        std::vector<double> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
            next.push_back(parts[i] + parts[i + 1]);
        }
        if (parts.size() % 2 == 1) {
            next.push_back(parts.back());
        }
        parts.swap(next);
    }
    return parts.front();
}

}  // namespace basket
