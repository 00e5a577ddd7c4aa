#include "lcsfinder/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "lcsfinder/lcs_index.hpp"
#include "lcsfinder/token_io.hpp"

namespace lcsfinder {

namespace {

volatile std::int64_t g_sink = 0;  // keeps the measured work observable

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    // splitmix64 over the combined words
    std::uint64_t x = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b + 0xbf58476d1ce4e5b9ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

std::int64_t lambda_sum_lcsfinder(const TokenSequence& x) {
    const std::int64_t n = x.size();
    const LcsIndex idx(x, x);
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        sum += idx.lambda_length({i, i});
    }
    return sum;
}

std::int64_t lambda_sum_brute(const TokenSequence& x) {
    const std::int64_t n = x.size();
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        sum += brute_force_strict(x, x, {i, i}) + 1;
    }
    return sum;
}

}  // namespace

void BenchConfig::validate() const {
    if (min_exp > max_exp) throw std::invalid_argument("bench: min_exp > max_exp");
    if (step <= 0) throw std::invalid_argument("bench: step must be > 0");
    if (trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
    if (vocab < 1) throw std::invalid_argument("bench: vocab must be >= 1");
    if (brute_cap < 1) throw std::invalid_argument("bench: brute_cap must be >= 1");
    for (const std::string& a : algorithms) {
        if (a != "lcsfinder" && a != "brute") {
            throw std::invalid_argument("bench: unknown algorithm \"" + a + "\"");
        }
    }
}

std::vector<std::int64_t> bench_grid(const BenchConfig& cfg) {
    std::vector<std::int64_t> grid;
    for (double e = cfg.min_exp; e <= cfg.max_exp + 1e-9; e += cfg.step) {
        const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
        if (n >= 1 && (grid.empty() || grid.back() != n)) {
            grid.push_back(n);
        }
    }
    return grid;
}

std::vector<double> bench_measure(const std::string& algo, std::int64_t n, int trials,
                                  std::uint64_t seed, std::int64_t vocab,
                                  double min_window_seconds) {
    using clock = std::chrono::steady_clock;
    std::int64_t (*workload)(const TokenSequence&) = nullptr;
    if (algo == "lcsfinder") {
        workload = lambda_sum_lcsfinder;
    } else if (algo == "brute") {
        workload = lambda_sum_brute;
    } else {
        throw std::invalid_argument("bench_measure: unknown algorithm \"" + algo + "\"");
    }

    // Warmup run; its duration also sizes the repetition count that keeps
    // each timed window above the floor, where scheduler noise averages out.
    const TokenSequence warm =
        generate_uniform_tokens(n, vocab, mix_seed(seed, static_cast<std::uint64_t>(n), ~0ULL));
    const auto w0 = clock::now();
    g_sink = g_sink + workload(warm);
    const double warm_seconds = std::chrono::duration<double>(clock::now() - w0).count();
    const int reps = warm_seconds >= min_window_seconds
                         ? 1
                         : static_cast<int>(std::min(100000.0, std::ceil(min_window_seconds /
                                                     std::max(warm_seconds, 1e-9))));

    std::vector<double> seconds;
    seconds.reserve(static_cast<std::size_t>(trials));
    for (int trial = 0; trial < trials; ++trial) {
        const TokenSequence x = generate_uniform_tokens(
            n, vocab, mix_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial)));
        const auto t0 = clock::now();
        std::int64_t sum = 0;
        for (int r = 0; r < reps; ++r) {
            sum += workload(x);
        }
        const auto t1 = clock::now();
        g_sink = g_sink + sum;
        seconds.push_back(std::chrono::duration<double>(t1 - t0).count() /
                          static_cast<double>(reps));
    }
    return seconds;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    cfg.validate();
    std::vector<BenchRow> rows;
    for (std::int64_t n : bench_grid(cfg)) {
        for (const std::string& algo : cfg.algorithms) {
            if (algo == "brute" && n > cfg.brute_cap) {
                continue;
            }
            const std::vector<double> times = bench_measure(algo, n, cfg.trials, cfg.seed, cfg.vocab);
            for (int trial = 0; trial < cfg.trials; ++trial) {
                rows.push_back({algo, n, trial, times[static_cast<std::size_t>(trial)]});
            }
        }
    }
    return rows;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of empty set");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return 0.5 * (values[mid - 1] + values[mid]);
}

double fit_loglog_slope(const std::vector<std::pair<std::int64_t, double>>& n_to_median) {
    if (n_to_median.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two lengths");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n_to_median.size());
    for (const auto& [n, med] : n_to_median) {
        const double x = std::log10(static_cast<double>(n));
        const double y = std::log10(med);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::map<std::string, double> bench_slopes(const std::vector<BenchRow>& rows) {
    std::map<std::string, std::map<std::int64_t, std::vector<double>>> by_algo;
    for (const BenchRow& r : rows) {
        by_algo[r.algo][r.n].push_back(r.seconds);
    }
    std::map<std::string, double> slopes;
    for (const auto& [algo, by_n] : by_algo) {
        if (by_n.size() < 2) {
            continue;
        }
        std::vector<std::pair<std::int64_t, double>> pts;
        pts.reserve(by_n.size());
        for (const auto& [n, times] : by_n) {
            pts.emplace_back(n, median(times));
        }
        slopes[algo] = fit_loglog_slope(pts);
    }
    return slopes;
}

}  // namespace lcsfinder
