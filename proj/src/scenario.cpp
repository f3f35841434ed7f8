#include "basketpricer/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "basketpricer/errors.hpp"

namespace basket {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

double parse_number(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size() || !std::isfinite(v)) {
            fail(line_no, "bad number '" + tok + "'");
        }
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(line_no, "bad number '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    if (!out.empty() && out.back().empty()) {
        out.pop_back();
    }
    return out;
}

std::vector<double> parse_numbers(const std::string& s, int line_no) {
    std::vector<double> out;
    for (const auto& tok : split(s, ',')) {
        if (tok.empty()) {
            fail(line_no, "empty entry in number list");
        }
        out.push_back(parse_number(tok, line_no));
    }
    return out;
}

// corr accepts a strict upper-triangle list (n(n-1)/2 values, row-major) or
// the full n*n matrix.
std::vector<double> expand_corr(const std::vector<double>& vals, std::size_t n,
                                int line_no) {
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = 1.0;
    }
    if (vals.size() == n * (n - 1) / 2) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                m[i * n + j] = vals[k];
                m[j * n + i] = vals[k];
                ++k;
            }
        }
        return m;
    }
    if (vals.size() == n * n) {
        return vals;
    }
    fail(line_no, "corr needs n(n-1)/2 upper-triangle values or the full n*n "
                  "matrix");
}

void finalize(ScenarioBlock& b, int line_no) {
    const std::size_t n = b.spots.size();
    if (n == 0) {
        fail(line_no, "scenario '" + b.name + "' has no spots");
    }
    if (b.vols.size() != n || b.weights.size() != n) {
        fail(line_no, "scenario '" + b.name +
                          "': spots, vols and weights must share one length");
    }
    if (b.corr.empty()) {
        b.corr.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            b.corr[i * n + i] = 1.0;
        }
    }
    if (b.corr.size() != n * n) {
        fail(line_no, "scenario '" + b.name + "': correlation size mismatch");
    }
    if (b.strikes.empty() == b.moneyness.empty()) {
        fail(line_no, "scenario '" + b.name +
                          "' needs exactly one of strikes or moneyness");
    }
    if (b.laws.empty()) {
        b.laws.emplace_back("lognormal");
    }
    b.to_spec(b.resolved_strikes().front()).validate();
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<double> ScenarioBlock::resolved_strikes() const {
    if (!strikes.empty()) {
        return strikes;
    }
    double b0 = 0.0;
    for (std::size_t i = 0; i < spots.size(); ++i) {
        b0 += weights[i] * spots[i];
    }
    std::vector<double> out;
    out.reserve(moneyness.size());
    for (const double m : moneyness) {
        out.push_back(m * b0);
    }
    return out;
}

BasketSpec ScenarioBlock::to_spec(double strike) const {
    BasketSpec spec;
    spec.weights = weights;
    spec.spots = spots;
    spec.vols = vols;
    spec.corr = corr;
    spec.rate = rate;
    spec.horizon = horizon;
    spec.strike = strike;
    return spec;
}

std::vector<ScenarioBlock> parse_scenarios(std::istream& in) {
    std::vector<ScenarioBlock> blocks;
    ScenarioBlock cur;
    bool in_block = false;
    std::string raw;
    int line_no = 0;
    std::vector<double> corr_vals;
    bool corr_full = false;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) {
            continue;
        }
        if (!in_block) {
            if (line.rfind("scenario", 0) != 0) {
                fail(line_no, "expected 'scenario <name> {'");
            }
            std::string rest = trim(line.substr(8));
            if (rest.empty() || rest.back() != '{') {
                fail(line_no, "expected '{' at end of scenario header");
            }
            rest = trim(rest.substr(0, rest.size() - 1));
            if (rest.empty()) {
                fail(line_no, "scenario needs a name");
            }
            cur = ScenarioBlock{};
            cur.name = rest;
            corr_vals.clear();
            corr_full = false;
            in_block = true;
            continue;
        }
        if (line == "}") {
            if (!corr_vals.empty()) {
                cur.corr = corr_full
                               ? corr_vals
                               : expand_corr(corr_vals, cur.spots.size(), line_no);
                if (corr_full && cur.corr.size() != cur.spots.size() * cur.spots.size()) {
                    fail(line_no, "corr_matrix size mismatch");
                }
            }
            finalize(cur, line_no);
            blocks.push_back(cur);
            in_block = false;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(line_no, "expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) {
            fail(line_no, "empty value for '" + key + "'");
        }
        if (key == "spots") {
            cur.spots = parse_numbers(value, line_no);
        } else if (key == "vols") {
            cur.vols = parse_numbers(value, line_no);
        } else if (key == "weights") {
            cur.weights = parse_numbers(value, line_no);
        } else if (key == "corr") {
            corr_vals = parse_numbers(value, line_no);
            corr_full = false;
        } else if (key == "corr_matrix") {
            corr_vals.clear();
            for (const auto& row : split(value, ';')) {
                for (const double v : parse_numbers(row, line_no)) {
                    corr_vals.push_back(v);
                }
            }
            corr_full = true;
        } else if (key == "rate") {
            cur.rate = parse_number(value, line_no);
        } else if (key == "horizon") {
            cur.horizon = parse_number(value, line_no);
        } else if (key == "strikes") {
            cur.strikes = parse_numbers(value, line_no);
        } else if (key == "moneyness") {
            cur.moneyness = parse_numbers(value, line_no);
        } else if (key == "law") {
            cur.laws = split(value, ',');
            for (const auto& l : cur.laws) {
                if (l.empty()) {
                    fail(line_no, "empty law name");
                }
            }
        } else if (key == "paths") {
            cur.paths = static_cast<std::int64_t>(parse_number(value, line_no));
        } else if (key == "seed") {
            cur.seed = static_cast<std::uint64_t>(parse_number(value, line_no));
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }
    if (in_block) {
        fail(line_no, "unterminated scenario block '" + cur.name + "'");
    }
    if (blocks.empty()) {
        throw ParseError("scenario file contains no scenario blocks");
    }
    return blocks;
}

std::vector<ScenarioBlock> parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open scenario file '" + path + "'");
    }
    return parse_scenarios(in);
}

std::string emit_scenarios(std::span<const ScenarioBlock> blocks) {
    std::ostringstream out;
    for (const auto& b : blocks) {
        out << "scenario " << b.name << " {\n";
        const auto list = [&](const char* key, const std::vector<double>& v) {
            out << "  " << key << " = ";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out << (i > 0 ? ", " : "") << format_number(v[i]);
            }
            out << "\n";
        };
        list("spots", b.spots);
        list("vols", b.vols);
        list("weights", b.weights);
        const std::size_t n = b.spots.size();
        if (n > 1) {
            std::vector<double> upper;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    upper.push_back(b.corr[i * n + j]);
                }
            }
            list("corr", upper);
        }
        out << "  rate = " << format_number(b.rate) << "\n";
        out << "  horizon = " << format_number(b.horizon) << "\n";
        if (!b.strikes.empty()) {
            list("strikes", b.strikes);
        } else {
            list("moneyness", b.moneyness);
        }
        out << "  law = ";
        for (std::size_t i = 0; i < b.laws.size(); ++i) {
            out << (i > 0 ? ", " : "") << b.laws[i];
        }
        out << "\n";
        if (b.paths.has_value()) {
            out << "  paths = " << *b.paths << "\n";
        }
        if (b.seed.has_value()) {
            out << "  seed = " << *b.seed << "\n";
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace basket
