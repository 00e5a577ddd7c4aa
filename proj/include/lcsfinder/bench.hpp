#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lcsfinder {

/// Scaling benchmark configuration. Sequence lengths are 10^e for e on the
/// [min_exp, max_exp] grid with the given step; the brute-force baseline is
/// skipped above brute_cap.
struct BenchConfig {
    double min_exp = 1.0;
    double max_exp = 4.0;
    double step = 0.25;
    int trials = 30;
    std::uint64_t seed = 42;
    std::int64_t vocab = 4;
    std::vector<std::string> algorithms = {"lcsfinder", "brute"};
    std::int64_t brute_cap = 3000;

    void validate() const;
};

struct BenchRow {
    std::string algo;
    std::int64_t n = 0;
    int trial = 0;
    double seconds = 0.0;
};

/// Distinct sequence lengths round(10^e) for e on the config grid.
std::vector<std::int64_t> bench_grid(const BenchConfig& cfg);

/// Times `trials` runs of the all-(i, i) match-length workload for one
/// algorithm ("lcsfinder" or "brute") at length n. Each trial draws a fresh
/// i.i.d. uniform sequence (generation untimed); lcsfinder trials include
/// index build since brute has no build phase. Runs sequentially on the
/// calling thread after one untimed warmup; when a single execution is
/// shorter than min_window_seconds the workload is repeated inside the
/// timed window and the per-execution average is recorded.
std::vector<double> bench_measure(const std::string& algo, std::int64_t n, int trials,
                                  std::uint64_t seed, std::int64_t vocab,
                                  double min_window_seconds = 0.05);

/// Full grid run in ascending n order, algorithms in config order.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

double median(std::vector<double> values);

/// Least-squares slope of log10(median seconds) against log10(n); needs at
/// least two distinct lengths.
double fit_loglog_slope(const std::vector<std::pair<std::int64_t, double>>& n_to_median);

/// Per-algorithm slopes computed from raw rows.
std::map<std::string, double> bench_slopes(const std::vector<BenchRow>& rows);

}  // namespace lcsfinder
