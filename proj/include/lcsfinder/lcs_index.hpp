#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcsfinder/core.hpp"
#include "lcsfinder/persistent_set.hpp"
#include "lcsfinder/suffix_structure.hpp"

namespace lcsfinder {

/// Query structure over a source/target pair. Internally indexes the
/// concatenation source + sentinel + target with a suffix structure, and a
/// persistent set of source-suffix ranks whose version v holds the ranks of
/// source positions 0..v-1. Immutable after construction; all queries are
/// const and safe to run concurrently.
class LcsIndex {
public:
    /// Builds the index in O(M log M), M = source + target length + 1.
    /// Token id 0 collides with the sentinel and is rejected.
    LcsIndex(const TokenSequence& source, const TokenSequence& target);

    std::int64_t source_size() const { return s_len_; }
    std::int64_t target_size() const { return t_len_; }

    /// Whether a match of length k starting at t_start in the target begins
    /// at or before s_bound in the source (it may extend past s_bound but
    /// never past the source end). k = 0 is always true.
    /// Requires 0 <= t_start <= target size, 0 <= s_bound < source size.
    bool relaxed_query(std::int64_t t_start, std::int64_t s_bound, std::int64_t k) const;

    /// Longest match starting at q.t_start in the target and contained in
    /// the first q.s_bound source tokens. Binary search over relaxed
    /// queries; O(log(M) * log(min(Ns, Nt))) per call.
    std::int64_t strict_match_length(const MatchQuery& q) const;

    /// strict_match_length + 1: the length of the shortest target substring
    /// starting at q.t_start that is absent from the source prefix.
    std::int64_t lambda_length(const MatchQuery& q) const;

    /// lambda_length applied element-wise; an invalid query throws with its
    /// position in the list.
    std::vector<std::int64_t> batch_lambda(std::span<const MatchQuery> queries) const;

    // Suffix ranks always fit 32 bits, which keeps the version arena compact.
    using RankSet = PersistentSet<std::int32_t>;

    const SuffixStructure& suffixes() const { return ss_; }
    const RankSet& tau() const { return tau_; }

private:
    void check_query(std::int64_t t_start, std::int64_t s_bound) const;

    std::int64_t s_len_ = 0;
    std::int64_t t_len_ = 0;
    SuffixStructure ss_;
    RankSet tau_;
};

/// Reference answer for strict_match_length computed by scanning every
/// source start position and extending symbol by symbol. O(Ns * match) per
/// query; exists for differential testing and as the benchmark baseline.
std::int64_t brute_force_strict(const TokenSequence& source, const TokenSequence& target,
                                const MatchQuery& q);

}  // namespace lcsfinder
