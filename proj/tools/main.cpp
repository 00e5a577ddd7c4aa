#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsfinder/bench.hpp"
#include "lcsfinder/entropy.hpp"
#include "lcsfinder/lcs_index.hpp"
#include "lcsfinder/token_io.hpp"

namespace {

using namespace lcsfinder;

// Shared --ints/--strings/--output plumbing for the file-driven subcommands.
struct CommonOpts {
    bool strings = false;
    std::string output;

    TokenFileMode mode() const { return strings ? TokenFileMode::strings : TokenFileMode::ints; }
};

void add_mode_flags(CLI::App* cmd, CommonOpts& opts) {
    auto* ints = cmd->add_flag("--ints", "one non-negative integer token per line (default)");
    auto* strings =
        cmd->add_flag("--strings", opts.strings, "one raw string symbol per line");
    ints->excludes(strings);
    strings->excludes(ints);
}

void add_output_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("-o,--output", opts.output, "write output to this file instead of stdout");
}

// stdout unless --output was given
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw std::runtime_error("cannot open output file: " + path);
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::pair<TokenSequence, TokenSequence> read_pair(const std::string& s_file,
                                                  const std::string& t_file,
                                                  TokenFileMode mode) {
    VocabMap vocab;  // shared so both files map through one combined vocabulary
    TokenSequence s = read_token_file(s_file, mode, &vocab);
    TokenSequence t = read_token_file(t_file, mode, &vocab);
    return {std::move(s), std::move(t)};
}

void print_report(std::ostream& out, const EntropyReport& rep, const std::string& mode,
                  bool as_json) {
    if (as_json) {
        nlohmann::json rec;
        rec["n"] = rep.n_positions;
        rec["lambda_sum"] = rep.lambda_sum;
        rec["entropy_bits"] = rep.entropy_bits;
        rec["mode"] = mode;
        out << rec.dump() << '\n';
        return;
    }
    out << "n: " << rep.n_positions << '\n';
    out << "lambda_sum: " << rep.lambda_sum << '\n';
    out << "entropy_bits: " << std::setprecision(12) << rep.entropy_bits << '\n';
    out << "mode: " << mode << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{
        "lcsfinder: longest-common-substring match lengths and non-parametric entropy "
        "estimation for token sequences"};
    app.require_subcommand(1);

    // lcs
    auto* lcs_cmd = app.add_subcommand(
        "lcs", "print the match statistic (longest match + 1) for each (i, j) query pair");
    CommonOpts lcs_opts;
    std::string lcs_s, lcs_t, lcs_q;
    lcs_cmd->add_option("source", lcs_s, "source token file")->required();
    lcs_cmd->add_option("target", lcs_t, "target token file")->required();
    lcs_cmd->add_option("queries", lcs_q, "query file with one \"i j\" pair per line")->required();
    add_mode_flags(lcs_cmd, lcs_opts);
    add_output_flag(lcs_cmd, lcs_opts);

    // entropy
    auto* ent_cmd = app.add_subcommand("entropy", "self-entropy rate of one token file");
    CommonOpts ent_opts;
    std::string ent_file;
    bool ent_json = false;
    ent_cmd->add_option("file", ent_file, "token file")->required();
    ent_cmd->add_flag("--json", ent_json, "emit one machine-readable JSON record");
    add_mode_flags(ent_cmd, ent_opts);
    add_output_flag(ent_cmd, ent_opts);

    // xentropy
    auto* xent_cmd =
        app.add_subcommand("xentropy", "cross-entropy rate of a target given a source history");
    CommonOpts xent_opts;
    std::string xent_s, xent_t, xent_mode = "positional", xent_pairs;
    bool xent_json = false;
    xent_cmd->add_option("source", xent_s, "source token file")->required();
    xent_cmd->add_option("target", xent_t, "target token file")->required();
    xent_cmd->add_option("--mode", xent_mode, "positional, full_history or mapped")
        ->check(CLI::IsMember({"positional", "full_history", "full", "mapped"}));
    xent_cmd->add_option("--pairs", xent_pairs, "query pair file for mapped mode");
    xent_cmd->add_flag("--json", xent_json, "emit one machine-readable JSON record");
    add_mode_flags(xent_cmd, xent_opts);
    add_output_flag(xent_cmd, xent_opts);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate an i.i.d. uniform integer token file");
    std::int64_t gen_n = 0, gen_vocab = 4;
    std::uint64_t gen_seed = 42;
    std::string gen_output;
    gen_cmd->add_option("--n", gen_n, "sequence length")->required();
    gen_cmd->add_option("--vocab", gen_vocab, "alphabet size (tokens drawn from [0, vocab))");
    gen_cmd->add_option("--seed", gen_seed, "RNG seed");
    gen_cmd->add_option("-o,--output", gen_output, "output file (default stdout)");

    // bench
    auto* bench_cmd = app.add_subcommand(
        "bench", "time the all-(i,i) match-length workload across sequence lengths; CSV out");
    BenchConfig cfg;
    std::string bench_output;
    std::vector<std::string> bench_algos = cfg.algorithms;
    bench_cmd->add_option("--min-exp", cfg.min_exp, "smallest length exponent (n = 10^e)");
    bench_cmd->add_option("--max-exp", cfg.max_exp, "largest length exponent");
    bench_cmd->add_option("--step", cfg.step, "exponent grid step");
    bench_cmd->add_option("--trials", cfg.trials, "repetitions per length");
    bench_cmd->add_option("--seed", cfg.seed, "RNG seed for the synthetic sequences");
    bench_cmd->add_option("--vocab", cfg.vocab, "synthetic alphabet size");
    bench_cmd->add_option("--algos", bench_algos, "algorithms to run (lcsfinder, brute)")
        ->delimiter(',');
    bench_cmd->add_option("--brute-cap", cfg.brute_cap,
                          "largest length at which the brute baseline runs");
    bench_cmd->add_option("-o,--output", bench_output, "CSV file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (lcs_cmd->parsed()) {
        auto [s, t] = read_pair(lcs_s, lcs_t, lcs_opts.mode());
        const std::vector<MatchQuery> queries = parse_query_pairs(read_lines(lcs_q));
        const LcsIndex idx(s, t);
        const std::vector<std::int64_t> lambdas = idx.batch_lambda(queries);
        OutputTarget out(lcs_opts.output);
        for (std::int64_t v : lambdas) {
            out.stream() << v << '\n';
        }
        return 0;
    }

    if (ent_cmd->parsed()) {
        VocabMap vocab;
        const TokenSequence x = read_token_file(ent_file, ent_opts.mode(), &vocab);
        const EntropyReport rep = self_entropy_rate(x);
        OutputTarget out(ent_opts.output);
        print_report(out.stream(), rep, "self", ent_json);
        return 0;
    }

    if (xent_cmd->parsed()) {
        auto [s, t] = read_pair(xent_s, xent_t, xent_opts.mode());
        const CrossEntropyMode mode = parse_cross_entropy_mode(xent_mode);
        std::vector<MatchQuery> pairs;
        if (mode == CrossEntropyMode::mapped) {
            if (xent_pairs.empty()) {
                throw std::runtime_error("mapped mode requires --pairs");
            }
            pairs = parse_query_pairs(read_lines(xent_pairs));
        } else if (!xent_pairs.empty()) {
            throw std::runtime_error("--pairs is only used with --mode mapped");
        }
        const EntropyReport rep = cross_entropy_rate(s, t, mode, pairs);
        OutputTarget out(xent_opts.output);
        print_report(out.stream(), rep, to_string(mode), xent_json);
        return 0;
    }

    if (gen_cmd->parsed()) {
        const std::vector<std::int64_t> values = generate_uniform_raw(gen_n, gen_vocab, gen_seed);
        OutputTarget out(gen_output);
        write_integer_tokens(out.stream(), values);
        return 0;
    }

    if (bench_cmd->parsed()) {
        cfg.algorithms = bench_algos;
        const std::vector<BenchRow> rows = run_bench(cfg);
        OutputTarget out(bench_output);
        std::ostream& csv = out.stream();
        csv << "# per-trial wall-clock seconds of one execution of the all-(i,i)\n";
        csv << "# match-length workload (short executions are averaged over repeats);\n";
        csv << "# lcsfinder rows include index build time, brute has no build phase\n";
        csv << "algo,n,trial,seconds\n";
        csv << std::setprecision(9) << std::fixed;
        for (const BenchRow& r : rows) {
            csv << r.algo << ',' << r.n << ',' << r.trial << ',' << r.seconds << '\n';
        }
        for (const auto& [algo, slope] : bench_slopes(rows)) {
            std::cerr << "slope " << algo << " " << std::setprecision(4) << slope << '\n';
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
