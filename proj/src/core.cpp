#include "lcsfinder/core.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace lcsfinder {

TokenId VocabMap::get_or_assign(const std::string& symbol) {
    auto it = forward_.find(symbol);
    if (it != forward_.end()) {
        return it->second;
    }
    const TokenId id = static_cast<TokenId>(reverse_.size()) + 1;
    forward_.emplace(symbol, id);
    reverse_.push_back(symbol);
    return id;
}

std::optional<TokenId> VocabMap::find(const std::string& symbol) const {
    auto it = forward_.find(symbol);
    if (it == forward_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const std::string& VocabMap::symbol(TokenId id) const {
    if (id < 1 || id > static_cast<TokenId>(reverse_.size())) {
        throw std::out_of_range("VocabMap::symbol: unassigned token id " + std::to_string(id));
    }
    return reverse_[static_cast<std::size_t>(id - 1)];
}

TokenSequence tokenize(std::span<const std::string> lines, VocabMap& vocab) {
    TokenSequence out;
    out.tokens.reserve(lines.size());
    for (const std::string& line : lines) {
        out.tokens.push_back(vocab.get_or_assign(line));
    }
    return out;
}

namespace {

bool parse_uint(const std::string& line, std::uint64_t& value) {
    // Tolerate surrounding ASCII whitespace; reject anything else.
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return false;
    }
    std::size_t e = line.find_last_not_of(" \t\r") + 1;
    const char* first = line.data() + b;
    const char* last = line.data() + e;
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last;
}

}  // namespace

TokenSequence parse_integer_sequence(std::span<const std::string> lines) {
    TokenSequence out;
    out.tokens.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::uint64_t value = 0;
        if (!parse_uint(lines[i], value) ||
            value >= static_cast<std::uint64_t>(std::numeric_limits<TokenId>::max())) {
            throw std::runtime_error("line " + std::to_string(i + 1) +
                                     ": expected a non-negative integer, got \"" + lines[i] + "\"");
        }
        out.tokens.push_back(static_cast<TokenId>(value) + 1);
    }
    return out;
}

}  // namespace lcsfinder
