#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcsfinder {

/// Integer token id. Id 0 is reserved for the separator sentinel; every
/// vocabulary token maps to an id >= 1.
using TokenId = std::int64_t;

/// A sequence of token ids. Producers (tokenize, parse_integer_sequence,
/// generators) only emit ids >= 1.
struct TokenSequence {
    std::vector<TokenId> tokens;

    std::int64_t size() const { return static_cast<std::int64_t>(tokens.size()); }
    bool empty() const { return tokens.empty(); }
    TokenId operator[](std::int64_t i) const { return tokens[static_cast<std::size_t>(i)]; }

    bool operator==(const TokenSequence&) const = default;
};

/// Bijection between raw string symbols and dense token ids 1..size(),
/// assigned in first-seen order. Shared across source and target to give a
/// combined vocabulary.
class VocabMap {
public:
    /// Returns the id of `symbol`, assigning the next free id if unseen.
    TokenId get_or_assign(const std::string& symbol);

    /// Id of `symbol` if already assigned.
    std::optional<TokenId> find(const std::string& symbol) const;

    /// Raw symbol for an assigned id. Throws std::out_of_range otherwise.
    const std::string& symbol(TokenId id) const;

    std::int64_t size() const { return static_cast<std::int64_t>(reverse_.size()); }

private:
    std::unordered_map<std::string, TokenId> forward_;
    std::vector<std::string> reverse_;  // reverse_[id - 1] = symbol
};

/// A match-length query: position `t_start` in the target and prefix bound
/// `s_bound` in the source (the match must lie inside the first s_bound
/// source tokens).
struct MatchQuery {
    std::int64_t t_start = 0;
    std::int64_t s_bound = 0;

    bool operator==(const MatchQuery&) const = default;
};

/// Output of the entropy estimators: the per-position match statistics and
/// the normalized rate in bits per token.
struct EntropyReport {
    std::vector<std::int64_t> lambdas;
    std::int64_t lambda_sum = 0;
    std::int64_t n_positions = 0;
    double entropy_bits = 0.0;
};

/// Maps raw symbols to ids in input order, extending `vocab` with unseen
/// symbols. Empty input yields an empty sequence and leaves `vocab` unchanged.
TokenSequence tokenize(std::span<const std::string> lines, VocabMap& vocab);

/// Parses one non-negative integer per line and shifts values by +1 so id 0
/// stays reserved for the sentinel. Throws std::runtime_error naming the
/// 1-based line number on malformed input.
TokenSequence parse_integer_sequence(std::span<const std::string> lines);

}  // namespace lcsfinder
