#include "basketpricer/metrics.hpp"

#include <cmath>

#include "basketpricer/errors.hpp"

namespace basket {

AccuracyMetrics c1_c2(std::span<const CaseResult> cases) {
    if (cases.empty()) {
        throw InvalidSpecError("c1_c2 needs at least one case");
    }
    double good = 0.0;
    double abs_err_sum = 0.0;
    for (const auto& c : cases) {
        if (c.mc == 0.0) {
            throw InvalidSpecError("zero Monte-Carlo benchmark in case '" +
                                   c.label + "'");
        }
        const double rel = std::fabs((c.val - c.mc) / c.mc);
        if (rel < 0.02) {
            good += 1.0;
        }
        abs_err_sum += rel;
    }
    const double n = static_cast<double>(cases.size());
    return AccuracyMetrics{100.0 * good / n, 100.0 * abs_err_sum / n};
}

}  // namespace basket
