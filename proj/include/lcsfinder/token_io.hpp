#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "lcsfinder/core.hpp"

namespace lcsfinder {

/// Token file layout: ints is one non-negative integer per line (shifted by
/// +1 on read so id 0 stays free for the sentinel); strings is one raw
/// symbol per line, mapped through a shared VocabMap.
enum class TokenFileMode {
    ints,
    strings,
};

/// Reads all lines of a UTF-8 text file. Throws std::runtime_error if the
/// file cannot be opened.
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Reads a token file in the given mode. `vocab` is required in strings
/// mode and extended in place so that source and target share one mapping.
TokenSequence read_token_file(const std::filesystem::path& path, TokenFileMode mode,
                              VocabMap* vocab);

/// Parses "i j" query lines. Throws std::runtime_error "line N: invalid
/// query ..." on malformed input.
std::vector<MatchQuery> parse_query_pairs(const std::vector<std::string>& lines);

/// Writes raw integer values one per line (the ints token file format).
void write_integer_tokens(std::ostream& out, const std::vector<std::int64_t>& values);

/// Deterministic i.i.d. uniform draw of n raw values in [0, vocab).
std::vector<std::int64_t> generate_uniform_raw(std::int64_t n, std::int64_t vocab,
                                               std::uint64_t seed);

/// The same draw shifted to valid token ids in [1, vocab].
TokenSequence generate_uniform_tokens(std::int64_t n, std::int64_t vocab, std::uint64_t seed);

}  // namespace lcsfinder
