#include <doctest.h>

#include <stdexcept>

#include <random>
#include <vector>

#include "lcsfinder/entropy.hpp"
#include "lcsfinder/token_io.hpp"

using namespace lcsfinder;

namespace {

TokenSequence constant(std::int64_t n, TokenId id = 1) {
    return TokenSequence{std::vector<TokenId>(static_cast<std::size_t>(n), id)};
}

}  // namespace

TEST_CASE("self entropy of a constant sequence") {
    const EntropyReport rep = self_entropy_rate(constant(8));
    CHECK(rep.lambdas == std::vector<std::int64_t>{1, 2, 3, 4, 5, 4, 3, 2});
    CHECK(rep.lambda_sum == 24);
    CHECK(rep.n_positions == 8);
    CHECK(rep.entropy_bits == doctest::Approx(1.0));
}

TEST_CASE("self entropy of a two-token sequence") {
    const EntropyReport rep = self_entropy_rate(TokenSequence{{1, 2}});
    CHECK(rep.lambdas == std::vector<std::int64_t>{1, 1});
    CHECK(rep.entropy_bits == doctest::Approx(1.0));
}

TEST_CASE("self entropy needs at least two tokens") {
    CHECK_THROWS_AS(self_entropy_rate(TokenSequence{}), std::domain_error);
    CHECK_THROWS_AS(self_entropy_rate(TokenSequence{{1}}), std::domain_error);
}

TEST_CASE("positional cross entropy of a sequence with itself is the self rate") {
    std::mt19937_64 rng(8);
    TokenSequence x;
    for (int i = 0; i < 200; ++i) {
        x.tokens.push_back(static_cast<TokenId>(rng() % 5) + 1);
    }
    const EntropyReport self = self_entropy_rate(x);
    const EntropyReport cross = cross_entropy_rate(x, x, CrossEntropyMode::positional);
    CHECK(self.lambdas == cross.lambdas);
    CHECK(self.lambda_sum == cross.lambda_sum);
    CHECK(self.entropy_bits == doctest::Approx(cross.entropy_bits));
}

TEST_CASE("disjoint vocabularies force every match statistic to one") {
    const EntropyReport rep =
        cross_entropy_rate(constant(8, 1), constant(8, 2), CrossEntropyMode::positional);
    CHECK(rep.lambdas == std::vector<std::int64_t>(8, 1));
    CHECK(rep.lambda_sum == 8);
    CHECK(rep.entropy_bits == doctest::Approx(3.0));
}

TEST_CASE("full history mode sees the whole source at every position") {
    const EntropyReport rep =
        cross_entropy_rate(constant(8), constant(4), CrossEntropyMode::full_history);
    CHECK(rep.lambdas == std::vector<std::int64_t>{5, 4, 3, 2});
    CHECK(rep.lambda_sum == 14);
    CHECK(rep.entropy_bits == doctest::Approx(4.0 * 3.0 / 14.0));
}

TEST_CASE("mapped mode uses the supplied pairs and validates them") {
    const TokenSequence s = constant(8);
    const TokenSequence t = constant(4);
    const std::vector<MatchQuery> pairs = {{0, 8}, {1, 8}, {2, 8}, {3, 8}};
    const EntropyReport rep = cross_entropy_rate(s, t, CrossEntropyMode::mapped, pairs);
    CHECK(rep.lambdas == std::vector<std::int64_t>{5, 4, 3, 2});

    const std::vector<MatchQuery> bad = {{0, 8}, {0, 9}};
    CHECK_THROWS_WITH_AS(cross_entropy_rate(s, t, CrossEntropyMode::mapped, bad),
                         doctest::Contains("pair 1"), std::invalid_argument);
    CHECK_THROWS_AS(cross_entropy_rate(s, t, CrossEntropyMode::mapped, {}),
                    std::invalid_argument);
}

TEST_CASE("cross entropy preconditions") {
    CHECK_THROWS_AS(cross_entropy_rate(TokenSequence{{1}}, constant(4),
                                       CrossEntropyMode::positional),
                    std::domain_error);
    CHECK_THROWS_AS(cross_entropy_rate(constant(4), TokenSequence{},
                                       CrossEntropyMode::positional),
                    std::invalid_argument);
}

TEST_CASE("match statistics stay within their position bound") {
    std::mt19937_64 rng(90);
    for (int run = 0; run < 10; ++run) {
        TokenSequence s, t;
        for (int i = 0; i < 50; ++i) s.tokens.push_back(static_cast<TokenId>(rng() % 3) + 1);
        for (int i = 0; i < 30; ++i) t.tokens.push_back(static_cast<TokenId>(rng() % 3) + 1);
        for (auto mode : {CrossEntropyMode::positional, CrossEntropyMode::full_history}) {
            const std::vector<std::int64_t> lambdas = match_length_profile(s, t, mode);
            REQUIRE(lambdas.size() == 30);
            for (std::size_t i = 0; i < lambdas.size(); ++i) {
                CHECK(lambdas[i] >= 1);
                CHECK(lambdas[i] <= t.size() - static_cast<std::int64_t>(i) + 1);
            }
        }
    }
}

TEST_CASE("growing the source never shrinks full-history match statistics") {
    std::mt19937_64 rng(61);
    TokenSequence s, t;
    for (int i = 0; i < 40; ++i) s.tokens.push_back(static_cast<TokenId>(rng() % 3) + 1);
    for (int i = 0; i < 25; ++i) t.tokens.push_back(static_cast<TokenId>(rng() % 3) + 1);

    std::vector<std::int64_t> prev = match_length_profile(s, t, CrossEntropyMode::full_history);
    for (int grow = 0; grow < 10; ++grow) {
        s.tokens.push_back(static_cast<TokenId>(rng() % 3) + 1);
        const std::vector<std::int64_t> cur =
            match_length_profile(s, t, CrossEntropyMode::full_history);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            CHECK(cur[i] >= prev[i]);
        }
        prev = cur;
    }
}

TEST_CASE("profile equals the report's lambda vector") {
    const TokenSequence s = generate_uniform_tokens(100, 4, 9);
    const TokenSequence t = generate_uniform_tokens(80, 4, 10);
    const EntropyReport rep = cross_entropy_rate(s, t, CrossEntropyMode::positional);
    CHECK(rep.lambdas == match_length_profile(s, t, CrossEntropyMode::positional));
}

TEST_CASE("iid uniform sequences estimate near log2 of the alphabet size") {
    const TokenSequence x = generate_uniform_tokens(3000, 4, 2026);
    const EntropyReport rep = self_entropy_rate(x);
    CHECK(rep.entropy_bits > 1.4);
    CHECK(rep.entropy_bits < 2.6);
}

TEST_CASE("mode names round-trip") {
    CHECK(parse_cross_entropy_mode("positional") == CrossEntropyMode::positional);
    CHECK(parse_cross_entropy_mode("full_history") == CrossEntropyMode::full_history);
    CHECK(parse_cross_entropy_mode("full") == CrossEntropyMode::full_history);
    CHECK(parse_cross_entropy_mode("mapped") == CrossEntropyMode::mapped);
    CHECK_THROWS_AS(parse_cross_entropy_mode("nope"), std::invalid_argument);
    CHECK(to_string(CrossEntropyMode::positional) == std::string("positional"));
}
