#include <doctest.h>

#include <stdexcept>

#include <random>
#include <vector>

#include "lcsfinder/lcs_index.hpp"
#include "lcsfinder/persistent_set.hpp"

using namespace lcsfinder;

namespace {

TokenSequence seq(std::vector<TokenId> ids) { return TokenSequence{std::move(ids)}; }

TokenSequence constant(std::int64_t n, TokenId id = 1) {
    return TokenSequence{std::vector<TokenId>(static_cast<std::size_t>(n), id)};
}

TokenSequence random_tokens(std::mt19937_64& rng, std::int64_t max_len, TokenId vocab,
                            bool allow_empty = true) {
    const auto len =
        static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_len + 1));
    TokenSequence out;
    for (std::int64_t i = 0; i < (allow_empty ? len : std::max<std::int64_t>(len, 1)); ++i) {
        out.tokens.push_back(static_cast<TokenId>(rng() % static_cast<std::uint64_t>(vocab)) + 1);
    }
    return out;
}

}  // namespace

TEST_CASE("build on the smallest nonempty pair") {
    const LcsIndex idx(seq({1}), seq({1}));
    CHECK(idx.source_size() == 1);
    CHECK(idx.target_size() == 1);
    CHECK(idx.suffixes().size() == 3);
    CHECK(idx.tau().version_count() == 2);
    CHECK(idx.tau().contains(1, idx.suffixes().rank[0]));
}

TEST_CASE("empty source always answers zero") {
    const LcsIndex idx(seq({}), seq({2}));
    CHECK(idx.strict_match_length({0, 0}) == 0);
    CHECK(idx.strict_match_length({1, 0}) == 0);
    CHECK(idx.lambda_length({0, 0}) == 1);
}

TEST_CASE("build validates token ids") {
    CHECK_THROWS_AS(LcsIndex(seq({1, 0}), seq({2})), std::invalid_argument);
    CHECK_THROWS_AS(LcsIndex(seq({1}), seq({0})), std::invalid_argument);
}

TEST_CASE("rank bijection and tau contents on the worked pair") {
    const LcsIndex idx(seq({1, 2, 1, 2, 2}), seq({2, 1, 2, 3}));
    const SuffixStructure& ss = idx.suffixes();
    CHECK(ss.size() == 10);
    for (std::int32_t r = 0; r < ss.size(); ++r) {
        CHECK(ss.rank[ss.sa[r]] == r);
    }
    // version v holds exactly the ranks of source starts 0..v-1
    CHECK(idx.tau().version_count() == 6);
    for (LcsIndex::RankSet::VersionId v = 0; v < 6; ++v) {
        for (std::int64_t p = 0; p < 5; ++p) {
            CHECK(idx.tau().contains(v, ss.rank[static_cast<std::size_t>(p)]) == (p < v));
        }
    }
}

TEST_CASE("relaxed queries on the worked pair") {
    const LcsIndex idx(seq({1, 2, 1, 2, 2}), seq({2, 1, 2, 3}));
    CHECK(idx.relaxed_query(0, 1, 3));
    CHECK_FALSE(idx.relaxed_query(0, 0, 1));
    for (std::int64_t i = 0; i <= 4; ++i) {
        for (std::int64_t j = 0; j < 5; ++j) {
            CHECK(idx.relaxed_query(i, j, 0));
        }
    }
    CHECK_THROWS_AS(idx.relaxed_query(0, 5, 1), std::out_of_range);
    CHECK_THROWS_AS(idx.relaxed_query(5, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(idx.relaxed_query(0, 0, -1), std::out_of_range);
}

TEST_CASE("strict match lengths agree with the worked examples and the oracle") {
    const TokenSequence s = seq({1, 2, 1, 2, 2});
    const TokenSequence t = seq({2, 1, 2, 3});
    const LcsIndex idx(s, t);

    CHECK(idx.strict_match_length({0, 4}) == 3);
    CHECK(brute_force_strict(s, t, {0, 4}) == 3);
    CHECK(idx.strict_match_length({0, 2}) == 1);
    CHECK(brute_force_strict(s, t, {0, 2}) == 1);
    for (std::int64_t i = 0; i <= 4; ++i) {
        CHECK(idx.strict_match_length({i, 0}) == 0);
    }
    CHECK_THROWS_AS(idx.strict_match_length({0, 6}), std::out_of_range);
    CHECK_THROWS_AS(idx.strict_match_length({-1, 0}), std::out_of_range);
}

TEST_CASE("lambda is the strict length plus one") {
    const TokenSequence c8 = constant(8);
    const LcsIndex idx(c8, c8);
    CHECK(idx.lambda_length({3, 3}) == 4);
    CHECK(brute_force_strict(c8, c8, {3, 3}) == 3);
    CHECK(idx.lambda_length({2, 0}) == 1);

    const LcsIndex worked(seq({1, 2, 1, 2, 2}), seq({2, 1, 2, 3}));
    CHECK(worked.lambda_length({0, 4}) == 4);
}

TEST_CASE("batch lambda") {
    const TokenSequence c8 = constant(8);
    const LcsIndex idx(c8, c8);

    const std::vector<MatchQuery> simple = {{0, 0}, {1, 0}};
    CHECK(idx.batch_lambda(simple) == std::vector<std::int64_t>{1, 1});

    std::vector<MatchQuery> diag;
    for (std::int64_t i = 0; i < 8; ++i) {
        diag.push_back({i, i});
    }
    CHECK(idx.batch_lambda(diag) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 4, 3, 2});

    CHECK(idx.batch_lambda({}).empty());

    const std::vector<MatchQuery> bad = {{0, 0}, {9, 0}};
    CHECK_THROWS_WITH_AS(idx.batch_lambda(bad), doctest::Contains("query 1"),
                         std::out_of_range);
}

TEST_CASE("differential check against the brute-force oracle") {
    std::mt19937_64 rng(31337);
    for (int run = 0; run < 60; ++run) {
        const TokenSequence s = random_tokens(rng, 64, 4);
        const TokenSequence t = random_tokens(rng, 64, 4);
        const LcsIndex idx(s, t);
        for (std::int64_t i = 0; i <= t.size(); ++i) {
            for (std::int64_t j = 0; j <= s.size(); ++j) {
                REQUIRE(idx.strict_match_length({i, j}) == brute_force_strict(s, t, {i, j}));
            }
        }
    }
}

TEST_CASE("relaxed predicate is monotone in k") {
    std::mt19937_64 rng(4242);
    for (int run = 0; run < 20; ++run) {
        const TokenSequence s = random_tokens(rng, 32, 3, /*allow_empty=*/false);
        const TokenSequence t = random_tokens(rng, 32, 3, /*allow_empty=*/false);
        const LcsIndex idx(s, t);
        for (std::int64_t i = 0; i <= t.size(); ++i) {
            for (std::int64_t j = 0; j <= s.size(); ++j) {
                // k = 1 implies a k = 0 query, which is true by definition
                for (std::int64_t k = 2; k <= j; ++k) {
                    if (idx.relaxed_query(i, j - k, k)) {
                        CHECK(idx.relaxed_query(i, j - (k - 1), k - 1));
                    }
                }
            }
        }
    }
}

TEST_CASE("strict length grows with the prefix bound and respects its cap") {
    std::mt19937_64 rng(17);
    for (int run = 0; run < 20; ++run) {
        const TokenSequence s = random_tokens(rng, 48, 3);
        const TokenSequence t = random_tokens(rng, 48, 3);
        const LcsIndex idx(s, t);
        for (std::int64_t i = 0; i <= t.size(); ++i) {
            std::int64_t prev = 0;
            for (std::int64_t j = 0; j <= s.size(); ++j) {
                const std::int64_t g = idx.strict_match_length({i, j});
                CHECK(g >= prev);
                CHECK(g <= std::min(j, t.size() - i));
                prev = g;
            }
        }
    }
}

TEST_CASE("identical inputs build identical indexes") {
    std::mt19937_64 rng(5);
    const TokenSequence s = random_tokens(rng, 40, 4);
    const TokenSequence t = random_tokens(rng, 40, 4);
    const LcsIndex a(s, t);
    const LcsIndex b(s, t);
    CHECK(a.suffixes().sa == b.suffixes().sa);
    for (std::int64_t i = 0; i <= t.size(); ++i) {
        for (std::int64_t j = 0; j <= s.size(); ++j) {
            CHECK(a.strict_match_length({i, j}) == b.strict_match_length({i, j}));
        }
    }
}
