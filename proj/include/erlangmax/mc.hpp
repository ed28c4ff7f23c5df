// mc.hpp -- Monte Carlo oracle for the sampled random walk. Paths carry
// independent substreams keyed by (seed, path index), so serial and parallel
// runs produce bit-identical estimates; chunk reduction is order-fixed.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "erlangmax/errors.hpp"
#include "erlangmax/params.hpp"

namespace erlangmax::mc {

struct McConfig {
    std::int64_t paths = 100000;
    std::uint64_t seed = 0;
    double margin_eps = 1e-9;          // target recovery probability per path
    std::int64_t max_steps = 10000000;  // per-path safety cap
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t paths = 0;
    double bias_bound = 0.0;
    std::int64_t truncated_paths = 0;
};

inline void validate(const McConfig& cfg) {
    if (cfg.paths < 1) throw std::invalid_argument("McConfig: paths must be >= 1");
    if (!(cfg.margin_eps > 0.0 && cfg.margin_eps < 1.0))
        throw std::invalid_argument("McConfig: margin_eps must lie in (0,1)");
    if (cfg.max_steps < 1) throw std::invalid_argument("McConfig: max_steps must be >= 1");
}

// xoshiro256++ with splitmix64 seeding; one instance per path.
struct Rng {
    std::array<std::uint64_t, 4> s{};

    static std::uint64_t splitmix(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        for (auto& w : s) w = splitmix(x);
        if ((s[0] | s[1] | s[2] | s[3]) == 0) s[0] = 1;
    }

    static std::uint64_t rotl(std::uint64_t v, int b) { return (v << b) | (v >> (64 - b)); }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // uniform on (0,1), symmetric, never 0 or 1
    double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
};

namespace detail {

// -log of a product of k uniforms, i.e. an Erlang(k, 1) draw. The running
// product is flushed into the log well before underflow.
inline double erlang_unit(int k, Rng& rng) {
    double prod = 1.0;
    double logs = 0.0;
    for (int i = 0; i < k; ++i) {
        prod *= rng.uniform();
        if (prod < 1e-280) {
            logs += std::log(prod);
            prod = 1.0;
        }
    }
    return -(logs + std::log(prod));
}

inline int worker_count() {
    if (const char* env = std::getenv("ERLANGMAX_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, 256);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

}  // namespace detail

// One step increment: B_beta(T) for T ~ Erlang(k, k omega), distributed as
// Erlang(k, gamma2) - Erlang(k, gamma1). The gamma2 draw comes first.
inline double sample_increment(const DerivedParams& d, Rng& rng) {
    const double e2 = detail::erlang_unit(d.k, rng) / d.gamma2;
    const double e1 = detail::erlang_unit(d.k, rng) / d.gamma1;
    return e2 - e1;
}

namespace detail {

struct ChunkAccum {
    double sum = 0.0;
    double sumsq = 0.0;
    std::int64_t truncated = 0;
    std::vector<std::int64_t> tail_counts;
};

// Runs [begin, end) paths. A path stops once it has fallen `margin` below its
// running maximum; the chance the walk ever recovers that far is at most
// e^{-2 beta margin} for the underlying continuous motion.
template <typename PerPath>
inline void run_paths(const DerivedParams& d, const McConfig& cfg, double margin,
                      std::int64_t begin, std::int64_t end, ChunkAccum& acc, PerPath&& per_path) {
    for (std::int64_t i = begin; i < end; ++i) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(i));
        double pos = 0.0, peak = 0.0;
        std::int64_t steps = 0;
        while (peak - pos < margin) {
            if (steps >= cfg.max_steps) {
                ++acc.truncated;
                break;
            }
            pos += sample_increment(d, rng);
            ++steps;
            if (pos > peak) peak = pos;
        }
        acc.sum += peak;
        acc.sumsq += peak * peak;
        per_path(peak, acc);
    }
}

template <typename PerPath>
inline ChunkAccum run_all(const DerivedParams& d, const McConfig& cfg, double margin,
                          std::size_t tail_slots, PerPath&& per_path) {
    constexpr std::int64_t kChunk = 8192;
    const std::int64_t nchunks = (cfg.paths + kChunk - 1) / kChunk;
    std::vector<ChunkAccum> parts(static_cast<std::size_t>(nchunks));
    for (auto& part : parts) part.tail_counts.assign(tail_slots, 0);

    const int workers = std::min<std::int64_t>(worker_count(), nchunks);
    auto work = [&](std::atomic<std::int64_t>& next) {
        for (;;) {
            const std::int64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            const std::int64_t begin = c * kChunk;
            const std::int64_t end = std::min(cfg.paths, begin + kChunk);
            run_paths(d, cfg, margin, begin, end, parts[static_cast<std::size_t>(c)], per_path);
        }
    };
    if (workers <= 1) {
        std::atomic<std::int64_t> next{0};
        work(next);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back([&] { work(next); });
        for (auto& t : pool) t.join();
    }

    ChunkAccum total;
    total.tail_counts.assign(tail_slots, 0);
    for (const auto& part : parts) {  // order-fixed reduction
        total.sum += part.sum;
        total.sumsq += part.sumsq;
        total.truncated += part.truncated;
        for (std::size_t t = 0; t < tail_slots; ++t) total.tail_counts[t] += part.tail_counts[t];
    }
    return total;
}

inline double stop_margin(const SamplingParams& p, const McConfig& cfg) {
    // continuous-BM recovery bound e^{-2 beta x}, with a safety factor 2
    return 2.0 * std::log(1.0 / cfg.margin_eps) / (2.0 * p.beta);
}

inline McEstimate summarize(const SamplingParams& p, const McConfig& cfg,
                            const ChunkAccum& acc) {
    McEstimate est;
    est.paths = cfg.paths;
    est.truncated_paths = acc.truncated;
    est.mean = acc.sum / static_cast<double>(cfg.paths);
    if (cfg.paths > 1) {
        const double n = static_cast<double>(cfg.paths);
        const double var = std::max(0.0, (acc.sumsq - n * est.mean * est.mean) / (n - 1.0));
        est.std_error = std::sqrt(var / n);
    }
    // a stopped path misses future gains with probability < margin_eps^2
    // (safety factor 2 squared the exponent); each miss is worth at most the
    // exponential-tail mean 1/(2 beta), so margin_eps/(2 beta) over-covers
    est.bias_bound = cfg.margin_eps / (2.0 * p.beta);
    if (static_cast<double>(acc.truncated) > 1e-3 * static_cast<double>(cfg.paths))
        throw TruncationExcess("estimate: truncated paths exceed 0.1% (" +
                               std::to_string(acc.truncated) + " of " +
                               std::to_string(cfg.paths) + ")");
    return est;
}

}  // namespace detail

inline McEstimate estimate_max(const SamplingParams& p, const McConfig& cfg) {
    erlangmax::validate(p);
    validate(cfg);
    const DerivedParams d = derive(p);
    const double margin = detail::stop_margin(p, cfg);
    const auto acc = detail::run_all(d, cfg, margin, 0, [](double, detail::ChunkAccum&) {});
    return detail::summarize(p, cfg, acc);
}

struct TailPoint {
    double t = 0.0;
    double prob = 0.0;
};

// Empirical survival function of the per-path maxima on the given grid.
inline std::vector<TailPoint> estimate_tail(const SamplingParams& p,
                                            const std::vector<double>& t_grid,
                                            const McConfig& cfg) {
    erlangmax::validate(p);
    validate(cfg);
    for (double t : t_grid)
        if (!(t >= 0.0)) throw std::invalid_argument("estimate_tail: t values must be >= 0");
    const DerivedParams d = derive(p);
    const double margin = detail::stop_margin(p, cfg);
    const auto acc = detail::run_all(
        d, cfg, margin, t_grid.size(), [&t_grid](double peak, detail::ChunkAccum& a) {
            for (std::size_t i = 0; i < t_grid.size(); ++i)
                if (peak > t_grid[i]) ++a.tail_counts[i];
        });
    detail::summarize(p, cfg, acc);  // enforces the truncation contract
    std::vector<TailPoint> out(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        out[i] = {t_grid[i],
                  static_cast<double>(acc.tail_counts[i]) / static_cast<double>(cfg.paths)};
    return out;
}

}  // namespace erlangmax::mc
