#pragma once

#include <span>
#include <string>
#include <vector>

#include "lcsfinder/core.hpp"

namespace lcsfinder {

/// How cross-entropy query pairs are formed. positional pairs target
/// position i with source bound min(i, Ns); full_history uses the whole
/// source for every position; mapped takes caller-supplied (t_start,
/// s_bound) pairs, e.g. timestamp-aligned ones.
enum class CrossEntropyMode {
    positional,
    full_history,
    mapped,
};

const char* to_string(CrossEntropyMode mode);

/// Parses "positional", "full_history" (or "full") and "mapped".
CrossEntropyMode parse_cross_entropy_mode(const std::string& name);

/// Match-length entropy rate of a single sequence, in bits per token:
/// n * log2(n) / sum of the per-position match statistics Lambda_i taken at
/// (i, i). Requires length >= 2.
EntropyReport self_entropy_rate(const TokenSequence& x);

/// Cross-entropy rate of `target` given the history of `source`:
/// n_positions * log2(Ns) / sum Lambda over the mode's query pairs. Not
/// symmetric. Requires Ns >= 2 and at least one query position; `pairs` is
/// consulted only in mapped mode.
EntropyReport cross_entropy_rate(const TokenSequence& source, const TokenSequence& target,
                                 CrossEntropyMode mode,
                                 std::span<const MatchQuery> pairs = {});

/// The raw Lambda vector of cross_entropy_rate, without normalization.
std::vector<std::int64_t> match_length_profile(const TokenSequence& source,
                                               const TokenSequence& target, CrossEntropyMode mode,
                                               std::span<const MatchQuery> pairs = {});

}  // namespace lcsfinder
