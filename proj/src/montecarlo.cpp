#include "basketpricer/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "basketpricer/accumulate.hpp"
#include "basketpricer/errors.hpp"
#include "basketpricer/moments.hpp"
#include "basketpricer/rng.hpp"

namespace basket {

namespace {

std::atomic<int> g_mc_threads{0};

int worker_count(int streams) {
    int t = g_mc_threads.load();
    if (t <= 0) {
        t = static_cast<int>(std::thread::hardware_concurrency());
        if (t <= 0) {
            t = 1;
        }
    }
    return std::min<int>(t, streams);
}

// Terminal basket value B(T) for one correlated normal vector. For the
// log-normal model the per-asset exponent scale is vol sqrt(T); for the
// time-changed model it is vol sqrt(Y) with Y drawn once per path.
struct TerminalModel {
    std::size_t n = 0;
    std::vector<double> base;   // w_i S_i(0) with drift / martingale factors
    std::vector<double> vol;    // multiplies sqrt(T) or sqrt(Y)
    std::vector<double> lower;  // correlation factor
    const MixingLaw* law = nullptr;
    double sqrt_t = 1.0;

    static TerminalModel build(const BasketSpec& spec, const MixingLaw* law) {
        spec.validate();
        TerminalModel m;
        m.n = spec.size();
        m.lower = factorize_correlation(spec.corr, m.n).lower;
        m.base.resize(m.n);
        m.vol = spec.vols;
        m.law = law;
        if (law == nullptr) {
            m.sqrt_t = std::sqrt(spec.horizon);
            for (std::size_t i = 0; i < m.n; ++i) {
                m.base[i] = spec.weights[i] * spec.spots[i] *
                            std::exp((spec.rate -
                                      0.5 * spec.vols[i] * spec.vols[i]) *
                                     spec.horizon);
            }
        } else {
            for (std::size_t i = 0; i < m.n; ++i) {
                const double arg = 0.5 * spec.vols[i] * spec.vols[i];
                if (arg >= law->mgf_domain_bound) {
                    throw MgfDomainError(
                        "martingale factor needs mgf(" + std::to_string(arg) +
                        ") beyond the bound of law " + law->label);
                }
                m.base[i] = spec.weights[i] * spec.spots[i] *
                            std::exp(spec.rate * spec.horizon) /
                            law->mgf(arg);
            }
        }
        return m;
    }

    // Correlate, exponentiate, sum; sign = -1 evaluates the antithetic leg.
    double terminal(const std::vector<double>& zraw, double scale,
                    double sign) const {
        double b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double zi = 0.0;
            for (std::size_t k = 0; k <= i; ++k) {
                zi += lower[i * n + k] * zraw[k];
            }
            b += base[i] * std::exp(vol[i] * scale * sign * zi);
        }
        return b;
    }
};

struct BlockSums {
    KahanSum s1, s2, s3;
    std::int64_t count = 0;
};

// Runs `streams` equal blocks over a worker pool. Results land in
// block-index order regardless of scheduling; the first failing block's
// exception is rethrown after all workers join.
template <typename PerPath>
std::vector<BlockSums> run_blocks(std::int64_t paths, int streams,
                                  const PerPath& per_path) {
    const std::int64_t per_block = paths / streams;
    std::vector<BlockSums> blocks(static_cast<std::size_t>(streams));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(streams));

    std::atomic<int> next{0};
    const auto work = [&]() {
        std::vector<double> zraw;
        for (;;) {
            const int b = next.fetch_add(1);
            if (b >= streams) {
                return;
            }
            try {
                BlockSums sums;
                const std::int64_t first = per_block * b;
                for (std::int64_t p = first; p < first + per_block; ++p) {
                    per_path(static_cast<std::uint64_t>(p), zraw, sums);
                }
                sums.count = per_block;
                blocks[static_cast<std::size_t>(b)] = sums;
            } catch (...) {
                failures[static_cast<std::size_t>(b)] = std::current_exception();
            }
        }
    };

    const int workers = worker_count(streams);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) {
            pool.emplace_back(work);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return blocks;
}

double draw_clock(const MixingLaw& law, PathRng& rng, std::uint64_t path) {
    const double y = law.sampler(rng);
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw SamplerError("law " + law.label + " produced draw " +
                           std::to_string(y) + " at path " +
                           std::to_string(path));
    }
    return y;
}

McResult payoff_result(const std::vector<BlockSums>& blocks,
                       std::int64_t paths) {
    std::vector<double> p1, p2;
    p1.reserve(blocks.size());
    p2.reserve(blocks.size());
    for (const auto& b : blocks) {
        p1.push_back(b.s1.value());
        p2.push_back(b.s2.value());
    }
    McResult r;
    r.paths = paths;
    r.mean = pairwise_merge(p1) / static_cast<double>(paths);
    if (paths > 1) {
        const double msq = pairwise_merge(p2) / static_cast<double>(paths);
        const double var = std::fmax(msq - r.mean * r.mean, 0.0) *
                           (static_cast<double>(paths) /
                            static_cast<double>(paths - 1));
        r.std_error = std::sqrt(var / static_cast<double>(paths));
    }
    return r;
}

template <typename Terminal>
McResult run_price(const BasketSpec& spec, const McConfig& cfg,
                   const Terminal& terminal_pair) {
    const double df = std::exp(-spec.rate * spec.horizon);
    const double strike = spec.strike;
    const auto per_path = [&](std::uint64_t p, std::vector<double>& zraw,
                              BlockSums& sums) {
        double b_plus = 0.0, b_minus = 0.0;
        const bool pair = terminal_pair(p, zraw, b_plus, b_minus);
        double sample = df * std::fmax(b_plus - strike, 0.0);
        if (pair) {
            sample = 0.5 * (sample + df * std::fmax(b_minus - strike, 0.0));
        }
        sums.s1.add(sample);
        sums.s2.add(sample * sample);
    };
    const auto blocks = run_blocks(cfg.paths, cfg.streams, per_path);
    return payoff_result(blocks, cfg.paths);
}

}  // namespace

namespace detail {
void set_mc_threads(int n) { g_mc_threads.store(n); }
}  // namespace detail

void McConfig::validate() const {
    if (paths < 1) {
        throw InvalidSpecError("paths must be >= 1");
    }
    if (streams < 1) {
        throw InvalidSpecError("streams must be >= 1");
    }
    if (paths % streams != 0) {
        throw InvalidSpecError("paths must be divisible by streams");
    }
}

McResult mc_price_lognormal(const BasketSpec& spec, const McConfig& cfg) {
    cfg.validate();
    const TerminalModel model = TerminalModel::build(spec, nullptr);
    const bool anti = cfg.antithetic;
    const auto terminal_pair = [&](std::uint64_t p, std::vector<double>& zraw,
                                   double& b_plus, double& b_minus) {
        PathRng rng(cfg.seed, p);
        zraw.resize(model.n);
        for (std::size_t i = 0; i < model.n; ++i) {
            zraw[i] = rng.next_normal();
        }
        b_plus = model.terminal(zraw, model.sqrt_t, 1.0);
        if (anti) {
            b_minus = model.terminal(zraw, model.sqrt_t, -1.0);
        }
        return anti;
    };
    return run_price(spec, cfg, terminal_pair);
}

McResult mc_price_mixture(const BasketSpec& spec, const MixingLaw& law,
                          const McConfig& cfg) {
    cfg.validate();
    const TerminalModel model = TerminalModel::build(spec, &law);
    const bool anti = cfg.antithetic;
    const auto terminal_pair = [&](std::uint64_t p, std::vector<double>& zraw,
                                   double& b_plus, double& b_minus) {
        PathRng rng(cfg.seed, p);
        const double scale = std::sqrt(draw_clock(law, rng, p));
        zraw.resize(model.n);
        for (std::size_t i = 0; i < model.n; ++i) {
            zraw[i] = rng.next_normal();
        }
        b_plus = model.terminal(zraw, scale, 1.0);
        if (anti) {
            b_minus = model.terminal(zraw, scale, -1.0);
        }
        return anti;
    };
    return run_price(spec, cfg, terminal_pair);
}

McMoments mc_moments(const BasketSpec& spec, const MixingLaw* law,
                     const McConfig& cfg) {
    cfg.validate();
    const TerminalModel model = TerminalModel::build(spec, law);
    const bool anti = cfg.antithetic;
    const auto per_path = [&](std::uint64_t p, std::vector<double>& zraw,
                              BlockSums& sums) {
        PathRng rng(cfg.seed, p);
        const double scale =
            law != nullptr ? std::sqrt(draw_clock(*law, rng, p)) : model.sqrt_t;
        zraw.resize(model.n);
        for (std::size_t i = 0; i < model.n; ++i) {
            zraw[i] = rng.next_normal();
        }
        const double b = model.terminal(zraw, scale, 1.0);
        double v1 = b, v2 = b * b, v3 = b * b * b;
        if (anti) {
            const double bm = model.terminal(zraw, scale, -1.0);
            v1 = 0.5 * (v1 + bm);
            v2 = 0.5 * (v2 + bm * bm);
            v3 = 0.5 * (v3 + bm * bm * bm);
        }
        sums.s1.add(v1);
        sums.s2.add(v2);
        sums.s3.add(v3);
    };
    const auto blocks = run_blocks(cfg.paths, cfg.streams, per_path);

    std::vector<double> p1, p2, p3;
    for (const auto& b : blocks) {
        p1.push_back(b.s1.value());
        p2.push_back(b.s2.value());
        p3.push_back(b.s3.value());
    }
    const double inv_n = 1.0 / static_cast<double>(cfg.paths);
    McMoments out;
    out.moments = summarize_raw_moments(pairwise_merge(p1) * inv_n,
                                        pairwise_merge(p2) * inv_n,
                                        pairwise_merge(p3) * inv_n);
    if (cfg.streams >= 2) {
        const double inv_b = static_cast<double>(cfg.streams) /
                             static_cast<double>(cfg.paths);
        std::vector<MomentSummary> batch;
        batch.reserve(blocks.size());
        for (const auto& b : blocks) {
            batch.push_back(summarize_raw_moments(b.s1.value() * inv_b,
                                                  b.s2.value() * inv_b,
                                                  b.s3.value() * inv_b));
        }
        const auto spread = [&](auto field) {
            KahanSum mean, sq;
            for (const auto& ms : batch) {
                mean.add(field(ms));
            }
            const double mu = mean.value() / static_cast<double>(batch.size());
            for (const auto& ms : batch) {
                const double d = field(ms) - mu;
                sq.add(d * d);
            }
            const double var =
                sq.value() / static_cast<double>(batch.size() - 1);
            return std::sqrt(var / static_cast<double>(batch.size()));
        };
        out.se_m1 = spread([](const MomentSummary& ms) { return ms.m1; });
        out.se_m2 = spread([](const MomentSummary& ms) { return ms.m2; });
        out.se_m3 = spread([](const MomentSummary& ms) { return ms.m3; });
        out.se_mu = spread([](const MomentSummary& ms) { return ms.mu; });
        out.se_sigma = spread([](const MomentSummary& ms) { return ms.sigma; });
        bool eta_ok = true;
        for (const auto& ms : batch) {
            eta_ok = eta_ok && ms.skew_defined;
        }
        out.se_eta =
            eta_ok ? spread([](const MomentSummary& ms) { return ms.eta; }) : 0.0;
    }
    return out;
}

}  // namespace basket
