#include "lcsfinder/lcs_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcsfinder {

namespace {

void check_tokens(const TokenSequence& seq, const char* which) {
    for (TokenId id : seq.tokens) {
        if (id < 1) {
            throw std::invalid_argument(std::string("LcsIndex: ") + which +
                                        " contains token id < 1 (0 is the sentinel)");
        }
    }
}

}  // namespace

LcsIndex::LcsIndex(const TokenSequence& source, const TokenSequence& target)
    : s_len_(source.size()), t_len_(target.size()) {
    check_tokens(source, "source");
    check_tokens(target, "target");

    std::vector<TokenId> psi;
    psi.reserve(static_cast<std::size_t>(s_len_ + 1 + t_len_));
    psi.insert(psi.end(), source.tokens.begin(), source.tokens.end());
    psi.push_back(TokenId{0});
    psi.insert(psi.end(), target.tokens.begin(), target.tokens.end());
    ss_ = build_suffix_structure(std::move(psi));

    // Version p + 1 of tau holds the ranks of source suffixes starting at
    // positions 0..p, so version j covers exactly the starts allowed by a
    // relaxed query with bound j.
    for (std::int64_t p = 0; p < s_len_; ++p) {
        tau_.insert(ss_.rank[static_cast<std::size_t>(p)]);
    }
}

bool LcsIndex::relaxed_query(std::int64_t t_start, std::int64_t s_bound, std::int64_t k) const {
    if (t_start < 0 || t_start > t_len_ || s_bound < 0 || s_bound >= s_len_ || k < 0) {
        throw std::out_of_range("relaxed_query: arguments out of range");
    }
    if (k == 0) {
        return true;
    }
    if (t_start + k > t_len_) {
        return false;
    }
    const std::int32_t z_pos = static_cast<std::int32_t>(s_len_ + 1 + t_start);
    const std::int32_t z_rank = ss_.rank[static_cast<std::size_t>(z_pos)];
    const auto version = static_cast<RankSet::VersionId>(s_bound + 1);

    // The best match among the allowed source starts is rank-adjacent to the
    // target suffix: lcp along the suffix array is unimodal around it.
    const auto [x, y] = tau_.neighbors_strict(version, z_rank);
    std::int32_t best = 0;
    if (x) {
        best = ss_.lcp_any(ss_.sa[static_cast<std::size_t>(*x)], z_pos);
    }
    if (y) {
        best = std::max(best, ss_.lcp_any(ss_.sa[static_cast<std::size_t>(*y)], z_pos));
    }
    return best >= k;
}

void LcsIndex::check_query(std::int64_t t_start, std::int64_t s_bound) const {
    if (t_start < 0 || t_start > t_len_ || s_bound < 0 || s_bound > s_len_) {
        throw std::out_of_range("match query out of range: t_start=" + std::to_string(t_start) +
                                " s_bound=" + std::to_string(s_bound));
    }
}

std::int64_t LcsIndex::strict_match_length(const MatchQuery& q) const {
    check_query(q.t_start, q.s_bound);
    // A match of length k within the first s_bound tokens exists iff a
    // relaxed query with bound s_bound - k succeeds; the predicate is
    // monotone in k, so binary search finds the largest such k.
    std::int64_t lo = 0;
    std::int64_t hi = std::min(q.s_bound, t_len_ - q.t_start);
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (relaxed_query(q.t_start, q.s_bound - mid, mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

std::int64_t LcsIndex::lambda_length(const MatchQuery& q) const {
    return strict_match_length(q) + 1;
}

std::vector<std::int64_t> LcsIndex::batch_lambda(std::span<const MatchQuery> queries) const {
    for (std::size_t i = 0; i < queries.size(); ++i) {
        if (queries[i].t_start < 0 || queries[i].t_start > t_len_ || queries[i].s_bound < 0 ||
            queries[i].s_bound > s_len_) {
            throw std::out_of_range("batch_lambda: query " + std::to_string(i) +
                                    " out of range: t_start=" + std::to_string(queries[i].t_start) +
                                    " s_bound=" + std::to_string(queries[i].s_bound));
        }
    }
    std::vector<std::int64_t> out;
    out.reserve(queries.size());
    for (const MatchQuery& q : queries) {
        out.push_back(lambda_length(q));
    }
    return out;
}

std::int64_t brute_force_strict(const TokenSequence& source, const TokenSequence& target,
                                const MatchQuery& q) {
    const std::int64_t n_s = source.size();
    const std::int64_t n_t = target.size();
    if (q.t_start < 0 || q.t_start > n_t || q.s_bound < 0 || q.s_bound > n_s) {
        throw std::out_of_range("brute_force_strict: query out of range");
    }
    const std::int64_t i = q.t_start;
    const std::int64_t j = q.s_bound;
    std::int64_t best = 0;
    for (std::int64_t p = 0; p < j; ++p) {
        std::int64_t k = 0;
        while (p + k < j && i + k < n_t && source[p + k] == target[i + k]) {
            ++k;
        }
        best = std::max(best, k);
    }
    return best;
}

}  // namespace lcsfinder
