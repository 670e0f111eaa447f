// circulant: polynomial and integer multiplication front end, plus the
// classic-vs-circulant benchmark.

#include "circulant/bench.hpp"
#include "circulant/bigint.hpp"
#include "circulant/poly.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace circulant;

std::vector<std::string> read_lines(std::istream &in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

int run_polymul(const std::string &engine, const std::string &input_path, bool modular, std::size_t threshold) {
    std::vector<std::string> lines;
    if (input_path.empty() || input_path == "-") {
        lines = read_lines(std::cin);
    } else {
        std::ifstream file(input_path);
        if (!file) {
            throw Error("cannot open '" + input_path + "'");
        }
        lines = read_lines(file);
    }
    if (lines.size() < 2) {
        throw Error("expected two polynomial lines, got " + std::to_string(lines.size()));
    }
    const auto p = poly::parse_polynomial(lines[0], 1);
    const auto q = poly::parse_polynomial(lines[1], 2);
    poly::PolyMulOptions options;
    options.engine = poly::parse_engine(engine);
    options.exact = !modular;
    options.base_threshold = threshold;
    std::cout << poly::format_polynomial(poly::poly_mul(p, q, options)) << '\n';
    return 0;
}

int run_bigmul(const std::string &x, const std::string &y, std::size_t threshold) {
    const auto parse = [](const std::string &text, const char *name) {
        try {
            return bigint::BigNumber::from_decimal(text);
        } catch (const ParseError &e) {
            throw Error(std::string("argument ") + name + ", column " + std::to_string(e.column()) +
                        ": not a nonnegative decimal integer");
        }
    };
    const auto a = parse(x, "x");
    const auto b = parse(y, "y");
    bigint::SsaConfig config;
    config.threshold_words = threshold;
    std::cout << bigint::ssa_mul(a, b, config).to_decimal() << '\n';
    return 0;
}

int run_bench(const bench::BenchConfig &config, const std::string &csv_path) {
    const auto rows = bench::run_benchmark(config);
    if (csv_path.empty() || csv_path == "-") {
        bench::write_csv(std::cout, rows, config.parallel);
    } else {
        std::ofstream file(csv_path);
        if (!file) {
            throw Error("cannot write '" + csv_path + "'");
        }
        bench::write_csv(file, rows, config.parallel);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"FFT-free circulant products: polynomial and integer multiplication"};
    app.require_subcommand(1);

    std::string engine = "circulant";
    std::string input_path;
    bool modular = false;
    std::size_t poly_threshold = 1;
    auto *polymul = app.add_subcommand("polymul", "multiply two polynomials read one per line");
    polymul->add_option("--engine", engine, "circulant, classic or schoolbook")
        ->check(CLI::IsMember({"circulant", "classic", "schoolbook"}));
    polymul->add_option("--in", input_path, "input file (default stdin)");
    polymul->add_flag("--modular", modular, "return residues mod 2^31-1 instead of exact coefficients");
    polymul->add_option("--threshold", poly_threshold, "naive base-case size for the circulant recursion")
        ->check(CLI::PositiveNumber);

    std::string x;
    std::string y;
    std::size_t words = 64;
    auto *bigmul = app.add_subcommand("bigmul", "multiply two nonnegative decimal integers");
    bigmul->add_option("x", x)->required();
    bigmul->add_option("y", y)->required();
    bigmul->add_option("--threshold-words", words, "schoolbook below this many 64-bit words")
        ->check(CLI::PositiveNumber);

    bench::BenchConfig config;
    std::string csv_path;
    auto *benchcmd = app.add_subcommand("bench", "time classic vs circulant polynomial products");
    benchcmd->add_option("--sizes", config.sizes, "polynomial lengths")->delimiter(',');
    benchcmd->add_option("--batch", config.batch, "products per timed batch")->check(CLI::PositiveNumber);
    benchcmd->add_option("--reps", config.reps, "repetitions; the minimum is reported")->check(CLI::PositiveNumber);
    benchcmd->add_option("--seed", config.seed, "input generator seed");
    benchcmd->add_option("--csv", csv_path, "output path (default stdout)");
    benchcmd->add_flag("--parallel", config.parallel, "spread each batch over OpenMP threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (polymul->parsed()) {
            return run_polymul(engine, input_path, modular, poly_threshold);
        }
        if (bigmul->parsed()) {
            return run_bigmul(x, y, words);
        }
        return run_bench(config, csv_path);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
