#include "lcsfinder/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lcsfinder/lcs_index.hpp"

namespace lcsfinder {

const char* to_string(CrossEntropyMode mode) {
    switch (mode) {
        case CrossEntropyMode::positional: return "positional";
        case CrossEntropyMode::full_history: return "full_history";
        case CrossEntropyMode::mapped: return "mapped";
    }
    throw std::invalid_argument("unknown CrossEntropyMode");
}

CrossEntropyMode parse_cross_entropy_mode(const std::string& name) {
    if (name == "positional") return CrossEntropyMode::positional;
    if (name == "full_history" || name == "full") return CrossEntropyMode::full_history;
    if (name == "mapped") return CrossEntropyMode::mapped;
    throw std::invalid_argument("unknown cross-entropy mode \"" + name + "\"");
}

namespace {

std::vector<MatchQuery> mode_queries(std::int64_t n_s, std::int64_t n_t, CrossEntropyMode mode,
                                     std::span<const MatchQuery> pairs) {
    std::vector<MatchQuery> queries;
    switch (mode) {
        case CrossEntropyMode::positional:
            queries.reserve(static_cast<std::size_t>(n_t));
            for (std::int64_t i = 0; i < n_t; ++i) {
                queries.push_back({i, std::min(i, n_s)});
            }
            break;
        case CrossEntropyMode::full_history:
            queries.reserve(static_cast<std::size_t>(n_t));
            for (std::int64_t i = 0; i < n_t; ++i) {
                queries.push_back({i, n_s});
            }
            break;
        case CrossEntropyMode::mapped:
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const MatchQuery& q = pairs[k];
                if (q.t_start < 0 || q.t_start > n_t || q.s_bound < 0 || q.s_bound > n_s) {
                    throw std::invalid_argument(
                        "mapped pair " + std::to_string(k) + " out of range: t_start=" +
                        std::to_string(q.t_start) + " s_bound=" + std::to_string(q.s_bound));
                }
            }
            queries.assign(pairs.begin(), pairs.end());
            break;
    }
    if (queries.empty()) {
        throw std::invalid_argument("no query positions (empty target or pair list)");
    }
    return queries;
}

EntropyReport report_from(std::vector<std::int64_t> lambdas, std::int64_t database_len) {
    EntropyReport rep;
    rep.lambdas = std::move(lambdas);
    rep.n_positions = static_cast<std::int64_t>(rep.lambdas.size());
    rep.lambda_sum = std::accumulate(rep.lambdas.begin(), rep.lambdas.end(), std::int64_t{0});
    rep.entropy_bits = static_cast<double>(rep.n_positions) *
                       std::log2(static_cast<double>(database_len)) /
                       static_cast<double>(rep.lambda_sum);
    return rep;
}

}  // namespace

EntropyReport self_entropy_rate(const TokenSequence& x) {
    const std::int64_t n = x.size();
    if (n < 2) {
        throw std::domain_error("self_entropy_rate: sequence length must be >= 2");
    }
    const LcsIndex idx(x, x);
    std::vector<MatchQuery> queries;
    queries.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        queries.push_back({i, i});
    }
    return report_from(idx.batch_lambda(queries), n);
}

EntropyReport cross_entropy_rate(const TokenSequence& source, const TokenSequence& target,
                                 CrossEntropyMode mode, std::span<const MatchQuery> pairs) {
    const std::int64_t n_s = source.size();
    if (n_s < 2) {
        throw std::domain_error("cross_entropy_rate: source length must be >= 2");
    }
    const std::vector<MatchQuery> queries = mode_queries(n_s, target.size(), mode, pairs);
    const LcsIndex idx(source, target);
    return report_from(idx.batch_lambda(queries), n_s);
}

std::vector<std::int64_t> match_length_profile(const TokenSequence& source,
                                               const TokenSequence& target, CrossEntropyMode mode,
                                               std::span<const MatchQuery> pairs) {
    const std::int64_t n_s = source.size();
    if (n_s < 2) {
        throw std::domain_error("match_length_profile: source length must be >= 2");
    }
    const std::vector<MatchQuery> queries = mode_queries(n_s, target.size(), mode, pairs);
    const LcsIndex idx(source, target);
    return idx.batch_lambda(queries);
}

}  // namespace lcsfinder
