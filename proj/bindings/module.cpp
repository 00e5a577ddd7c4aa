#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "lcsfinder/core.hpp"
#include "lcsfinder/entropy.hpp"
#include "lcsfinder/lcs_index.hpp"
#include "lcsfinder/token_io.hpp"

namespace py = pybind11;
using namespace lcsfinder;

namespace {

TokenSequence to_sequence(const std::vector<std::int64_t>& tokens) {
    return TokenSequence{tokens};
}

std::vector<MatchQuery> to_queries(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    std::vector<MatchQuery> out;
    out.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        out.push_back({i, j});
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_lcsfinder, m) {
    m.doc() =
        "Longest-common-substring match lengths between a growing source prefix and a "
        "target suffix, and the entropy estimators built on them.";

    py::enum_<CrossEntropyMode>(m, "CrossEntropyMode")
        .value("positional", CrossEntropyMode::positional)
        .value("full_history", CrossEntropyMode::full_history)
        .value("mapped", CrossEntropyMode::mapped);

    py::class_<EntropyReport>(m, "EntropyReport")
        .def_readonly("lambdas", &EntropyReport::lambdas)
        .def_readonly("lambda_sum", &EntropyReport::lambda_sum)
        .def_readonly("n_positions", &EntropyReport::n_positions)
        .def_readonly("entropy_bits", &EntropyReport::entropy_bits)
        .def("__repr__", [](const EntropyReport& r) {
            return "EntropyReport(n_positions=" + std::to_string(r.n_positions) +
                   ", lambda_sum=" + std::to_string(r.lambda_sum) +
                   ", entropy_bits=" + std::to_string(r.entropy_bits) + ")";
        });

    py::class_<VocabMap>(m, "VocabMap")
        .def(py::init<>())
        .def("get_or_assign", &VocabMap::get_or_assign, py::arg("symbol"))
        .def("symbol", &VocabMap::symbol, py::arg("token_id"))
        .def("__len__", &VocabMap::size);

    m.def(
        "tokenize",
        [](const std::vector<std::string>& lines, VocabMap& vocab) {
            return tokenize(lines, vocab).tokens;
        },
        py::arg("lines"), py::arg("vocab"),
        "Map raw symbols to dense integer token ids, extending the vocabulary in place.");

    py::class_<LcsIndex>(m, "LcsIndex")
        .def(py::init([](const std::vector<std::int64_t>& source,
                         const std::vector<std::int64_t>& target) {
                 return LcsIndex(to_sequence(source), to_sequence(target));
             }),
             py::arg("source"), py::arg("target"))
        .def_property_readonly("source_size", &LcsIndex::source_size)
        .def_property_readonly("target_size", &LcsIndex::target_size)
        .def("relaxed_query", &LcsIndex::relaxed_query, py::arg("t_start"), py::arg("s_bound"),
             py::arg("k"))
        .def(
            "strict_match_length",
            [](const LcsIndex& idx, std::int64_t t_start, std::int64_t s_bound) {
                return idx.strict_match_length({t_start, s_bound});
            },
            py::arg("t_start"), py::arg("s_bound"))
        .def(
            "lambda_length",
            [](const LcsIndex& idx, std::int64_t t_start, std::int64_t s_bound) {
                return idx.lambda_length({t_start, s_bound});
            },
            py::arg("t_start"), py::arg("s_bound"))
        .def(
            "batch_lambda",
            [](const LcsIndex& idx,
               const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
                return idx.batch_lambda(to_queries(pairs));
            },
            py::arg("pairs"));

    m.def(
        "brute_force_strict",
        [](const std::vector<std::int64_t>& source, const std::vector<std::int64_t>& target,
           std::int64_t t_start, std::int64_t s_bound) {
            return brute_force_strict(to_sequence(source), to_sequence(target),
                                      {t_start, s_bound});
        },
        py::arg("source"), py::arg("target"), py::arg("t_start"), py::arg("s_bound"),
        "Reference strict match length by exhaustive scan; for checking and baselines.");

    m.def(
        "self_entropy_rate",
        [](const std::vector<std::int64_t>& x) { return self_entropy_rate(to_sequence(x)); },
        py::arg("tokens"));

    m.def(
        "cross_entropy_rate",
        [](const std::vector<std::int64_t>& source, const std::vector<std::int64_t>& target,
           CrossEntropyMode mode,
           const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
            return cross_entropy_rate(to_sequence(source), to_sequence(target), mode,
                                      to_queries(pairs));
        },
        py::arg("source"), py::arg("target"), py::arg("mode") = CrossEntropyMode::positional,
        py::arg("pairs") = std::vector<std::pair<std::int64_t, std::int64_t>>{});

    m.def(
        "match_length_profile",
        [](const std::vector<std::int64_t>& source, const std::vector<std::int64_t>& target,
           CrossEntropyMode mode,
           const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
            return match_length_profile(to_sequence(source), to_sequence(target), mode,
                                        to_queries(pairs));
        },
        py::arg("source"), py::arg("target"), py::arg("mode") = CrossEntropyMode::positional,
        py::arg("pairs") = std::vector<std::pair<std::int64_t, std::int64_t>>{});

    m.def("generate_uniform_tokens",
          [](std::int64_t n, std::int64_t vocab, std::uint64_t seed) {
              return generate_uniform_tokens(n, vocab, seed).tokens;
          },
          py::arg("n"), py::arg("vocab"), py::arg("seed"),
          "Deterministic i.i.d. uniform token ids in [1, vocab].");
}
