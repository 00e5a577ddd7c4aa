#include "lcsfinder/token_io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <stdexcept>

namespace lcsfinder {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

TokenSequence read_token_file(const std::filesystem::path& path, TokenFileMode mode,
                              VocabMap* vocab) {
    const std::vector<std::string> lines = read_lines(path);
    if (mode == TokenFileMode::ints) {
        try {
            return parse_integer_sequence(lines);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(path.string() + ": " + e.what());
        }
    }
    if (vocab == nullptr) {
        throw std::invalid_argument("read_token_file: strings mode needs a VocabMap");
    }
    return tokenize(lines, *vocab);
}

std::vector<MatchQuery> parse_query_pairs(const std::vector<std::string>& lines) {
    std::vector<MatchQuery> out;
    out.reserve(lines.size());
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::string& line = lines[ln];
        const char* first = line.data();
        const char* last = line.data() + line.size();
        auto skip_ws = [&](const char* p) {
            while (p < last && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
            return p;
        };
        MatchQuery q;
        const char* p = skip_ws(first);
        auto r1 = std::from_chars(p, last, q.t_start);
        if (r1.ec != std::errc()) {
            throw std::runtime_error("line " + std::to_string(ln + 1) + ": invalid query \"" +
                                     line + "\"");
        }
        p = skip_ws(r1.ptr);
        auto r2 = std::from_chars(p, last, q.s_bound);
        if (r2.ec != std::errc() || skip_ws(r2.ptr) != last) {
            throw std::runtime_error("line " + std::to_string(ln + 1) + ": invalid query \"" +
                                     line + "\"");
        }
        out.push_back(q);
    }
    return out;
}

void write_integer_tokens(std::ostream& out, const std::vector<std::int64_t>& values) {
    for (std::int64_t v : values) {
        out << v << '\n';
    }
}

std::vector<std::int64_t> generate_uniform_raw(std::int64_t n, std::int64_t vocab,
                                               std::uint64_t seed) {
    if (n < 0 || vocab < 1) {
        throw std::invalid_argument("generate_uniform_raw: need n >= 0 and vocab >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        // Modulo draw: bias is at most vocab / 2^64, immaterial here, and the
        // output stays identical across platforms.
        out.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(vocab)));
    }
    return out;
}

TokenSequence generate_uniform_tokens(std::int64_t n, std::int64_t vocab, std::uint64_t seed) {
    TokenSequence seq;
    seq.tokens = generate_uniform_raw(n, vocab, seed);
    for (TokenId& t : seq.tokens) {
        ++t;
    }
    return seq;
}

}  // namespace lcsfinder
