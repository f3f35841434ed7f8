#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basketpricer/scenario.hpp"

namespace basket {

enum class RunMethod { closed, mc, both };
enum class TableFormat { csv, markdown };

struct RunOptions {
    RunMethod method = RunMethod::both;
    std::int64_t paths = 1'000'000;
    std::uint64_t seed = 42;
    int streams = 8;
    bool antithetic = false;
    TableFormat format = TableFormat::csv;
    bool tolerance_report = false;
};

struct CaseRow {
    std::string scenario;
    std::string law;
    double strike = 0.0;
    std::optional<double> closed_price;
    std::optional<double> mc_mean;
    std::optional<double> mc_se;
    std::optional<double> abs_pct_err;
    std::string case_label;
    std::string method;
    double quad_rel_error = 0.0;
    // moneyness blocks group per (scenario, law); absolute-strike blocks pool
    // per law across scenarios
    bool pooled_group = false;
};

struct MetricRow {
    std::string group;
    double c1 = 0.0;
    double c2 = 0.0;
};

struct RunReport {
    std::vector<CaseRow> rows;
    std::vector<MetricRow> metrics;
};

// Prices every (scenario, law, strike) case; rows keep input order. C1/C2
// footers are computed when both methods ran.
RunReport run_scenarios(std::span<const ScenarioBlock> blocks,
                        const RunOptions& opts);

std::string render_report(const RunReport& report, TableFormat format,
                          bool tolerance_report);

struct GreeksRow {
    std::string scenario;
    double strike = 0.0;
    std::string branch;
    double dmu = 0.0, dsigma = 0.0, deta = 0.0, dxdeta = 0.0;
    std::optional<double> fd_dmu, fd_dsigma, fd_deta;
    std::optional<double> max_rel_err;
};

// Analytic Greeks for log-normal scenario blocks; a block naming any mixing
// law is rejected (InvalidSpecError). fd_check re-runs the calibration per
// bump and reports central finite differences.
std::vector<GreeksRow> greeks_table(std::span<const ScenarioBlock> blocks,
                                    bool fd_check);

std::string render_greeks(std::span<const GreeksRow> rows, TableFormat format,
                          bool fd_check);

}  // namespace basket
