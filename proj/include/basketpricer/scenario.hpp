#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basketpricer/basket_spec.hpp"

namespace basket {

// One `scenario <name> { ... }` block of a scenario file (grammar documented
// in the README). Strikes are given either absolutely or as moneyness
// K / B(0); the two forms may not coexist in a block.
struct ScenarioBlock {
    std::string name;
    std::vector<double> spots;
    std::vector<double> vols;
    std::vector<double> weights;
    std::vector<double> corr;  // full matrix row-major
    double rate = 0.0;
    double horizon = 1.0;
    std::vector<double> strikes;    // absolute strikes, or
    std::vector<double> moneyness;  // K = m * B(0)
    std::vector<std::string> laws;  // "lognormal" or mixing-law names
    std::optional<std::int64_t> paths;
    std::optional<std::uint64_t> seed;

    // Absolute strikes after the moneyness conversion K = m * B(0).
    std::vector<double> resolved_strikes() const;

    BasketSpec to_spec(double strike) const;
};

std::vector<ScenarioBlock> parse_scenarios(std::istream& in);
std::vector<ScenarioBlock> parse_scenario_file(const std::string& path);

// Inverse of the parser: emitted text re-parses to identical blocks.
std::string emit_scenarios(std::span<const ScenarioBlock> blocks);

}  // namespace basket
