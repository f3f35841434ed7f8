#pragma once

#include <span>
#include <string>

namespace basket {

// One accuracy case: method value against its Monte-Carlo benchmark.
struct CaseResult {
    double val = 0.0;
    double mc = 0.0;
    std::string label;
};

struct AccuracyMetrics {
    double c1_pct = 0.0;  // share of cases with |val - mc| / |mc| < 2%
    double c2_pct = 0.0;  // mean absolute percentage error
};

// Both in percent. Empty input or a zero benchmark raises InvalidSpecError.
// The 2% threshold is a strict inequality.
AccuracyMetrics c1_c2(std::span<const CaseResult> cases);

}  // namespace basket
