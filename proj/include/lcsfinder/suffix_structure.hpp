#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "lcsfinder/core.hpp"

namespace lcsfinder {

/// Sparse table over int32 values answering range-minimum queries in O(1)
/// after O(n log n) preprocessing. Idempotence of min makes the two
/// overlapping power-of-two blocks per query valid.
class RangeMinTable {
public:
    RangeMinTable() = default;

    explicit RangeMinTable(const std::vector<std::int32_t>& values) {
        const std::int32_t n = static_cast<std::int32_t>(values.size());
        if (n == 0) {
            return;
        }
        const int levels = std::bit_width(static_cast<std::uint32_t>(n));
        table_.resize(levels);
        table_[0] = values;
        for (int lv = 1; lv < levels; ++lv) {
            const std::int32_t span = std::int32_t{1} << lv;
            table_[lv].resize(n - span + 1);
            for (std::int32_t i = 0; i + span <= n; ++i) {
                table_[lv][i] = std::min(table_[lv - 1][i], table_[lv - 1][i + span / 2]);
            }
        }
    }

    /// Minimum over [first, last); requires first < last.
    std::int32_t min_in(std::int32_t first, std::int32_t last) const {
        const int lv = std::bit_width(static_cast<std::uint32_t>(last - first)) - 1;
        return std::min(table_[lv][first], table_[lv][last - (std::int32_t{1} << lv)]);
    }

private:
    std::vector<std::vector<std::int32_t>> table_;
};

/// Suffix array, inverse ranks, adjacent-LCP table and range-minimum
/// structure over one id sequence. Immutable after construction.
struct SuffixStructure {
    std::vector<TokenId> psi;           // the indexed sequence
    std::vector<std::int32_t> sa;       // suffix starts in lexicographic order
    std::vector<std::int32_t> rank;     // inverse of sa
    std::vector<std::int32_t> lcp_adj;  // lcp_adj[r] = lcp(sa[r-1], sa[r]); lcp_adj[0] = 0
    RangeMinTable rmq;

    std::int32_t size() const { return static_cast<std::int32_t>(psi.size()); }

    /// Longest common prefix of the suffixes starting at positions a and b.
    /// Self-lcp is the remaining length. O(1).
    std::int32_t lcp_any(std::int32_t a, std::int32_t b) const;
};

/// Builds all fields in O(M log M): prefix doubling with two-pass counting
/// sort, the Kasai rank-walk for adjacent lcps, and a sparse table on top.
/// At most one occurrence of id 0 (the sentinel) is permitted.
SuffixStructure build_suffix_structure(std::vector<TokenId> psi);

}  // namespace lcsfinder
