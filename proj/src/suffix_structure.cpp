#include "lcsfinder/suffix_structure.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace lcsfinder {

std::int32_t SuffixStructure::lcp_any(std::int32_t a, std::int32_t b) const {
    const std::int32_t m = size();
    if (a < 0 || a >= m || b < 0 || b >= m) {
        throw std::out_of_range("lcp_any: position out of range");
    }
    if (a == b) {
        return m - a;
    }
    const auto [lo, hi] = std::minmax(rank[a], rank[b]);
    return rmq.min_in(lo + 1, hi + 1);
}

namespace {

// Dense symbol ranks so counting sort can be used from round zero.
std::vector<std::int32_t> dense_symbol_ranks(const std::vector<TokenId>& psi) {
    std::vector<TokenId> sorted(psi);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::int32_t> out(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        out[i] = static_cast<std::int32_t>(
            std::lower_bound(sorted.begin(), sorted.end(), psi[i]) - sorted.begin());
    }
    return out;
}

}  // namespace

SuffixStructure build_suffix_structure(std::vector<TokenId> psi) {
    if (psi.empty()) {
        throw std::invalid_argument("build_suffix_structure: empty sequence");
    }
    if (psi.size() >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        throw std::invalid_argument("build_suffix_structure: sequence too long");
    }
    if (std::count(psi.begin(), psi.end(), TokenId{0}) > 1) {
        throw std::invalid_argument("build_suffix_structure: more than one sentinel id 0");
    }

    SuffixStructure ss;
    ss.psi = std::move(psi);
    const std::int32_t m = ss.size();

    std::vector<std::int32_t> rnk = dense_symbol_ranks(ss.psi);
    std::vector<std::int32_t> sa(m), order(m), next_rnk(m), cnt;

    // Round zero: counting sort of positions by symbol rank.
    cnt.assign(static_cast<std::size_t>(m) + 1, 0);
    for (std::int32_t i = 0; i < m; ++i) cnt[rnk[i] + 1]++;
    for (std::int32_t i = 0; i < m; ++i) cnt[i + 1] += cnt[i];
    for (std::int32_t i = 0; i < m; ++i) sa[cnt[rnk[i]]++] = i;

    // Doubling rounds: keys are (rank[i], rank[i+len]) shifted by +1 with 0
    // meaning "past the end", sorted by two stable counting-sort passes.
    for (std::int32_t len = 1; rnk[sa[m - 1]] != m - 1; len <<= 1) {
        auto key1 = [&](std::int32_t i) { return rnk[i] + 1; };
        auto key2 = [&](std::int32_t i) { return i + len < m ? rnk[i + len] + 1 : 0; };

        cnt.assign(static_cast<std::size_t>(m) + 2, 0);
        for (std::int32_t i = 0; i < m; ++i) cnt[key2(i) + 1]++;
        for (std::int32_t i = 0; i <= m; ++i) cnt[i + 1] += cnt[i];
        for (std::int32_t i = 0; i < m; ++i) order[cnt[key2(i)]++] = i;

        cnt.assign(static_cast<std::size_t>(m) + 2, 0);
        for (std::int32_t i = 0; i < m; ++i) cnt[key1(i) + 1]++;
        for (std::int32_t i = 0; i <= m; ++i) cnt[i + 1] += cnt[i];
        for (std::int32_t p : order) sa[cnt[key1(p)]++] = p;

        next_rnk[sa[0]] = 0;
        for (std::int32_t r = 1; r < m; ++r) {
            const std::int32_t a = sa[r - 1];
            const std::int32_t b = sa[r];
            const bool differ = key1(a) != key1(b) || key2(a) != key2(b);
            next_rnk[b] = next_rnk[a] + (differ ? 1 : 0);
        }
        rnk.swap(next_rnk);
    }

    ss.sa = std::move(sa);
    ss.rank = std::move(rnk);

    // Kasai rank-walk for adjacent lcps.
    ss.lcp_adj.assign(m, 0);
    for (std::int32_t p = 0, h = 0; p < m; ++p) {
        const std::int32_t r = ss.rank[p];
        if (r == 0) {
            h = 0;
            continue;
        }
        const std::int32_t q = ss.sa[r - 1];
        while (p + h < m && q + h < m && ss.psi[p + h] == ss.psi[q + h]) ++h;
        ss.lcp_adj[r] = h;
        if (h > 0) --h;
    }

    ss.rmq = RangeMinTable(ss.lcp_adj);
    return ss;
}

}  // namespace lcsfinder
