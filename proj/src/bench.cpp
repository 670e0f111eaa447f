#include "circulant/bench.hpp"

#include "circulant/mersenne.hpp"
#include "circulant/poly.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>

namespace circulant::bench {

using poly::Engine;
using poly::Polynomial;

double BenchRow::ratio() const {
    const auto c = circulant.wall_time.count();
    return c == 0 ? 0.0 : static_cast<double>(classic.wall_time.count()) / static_cast<double>(c);
}

double BenchRow::mult_ratio() const {
    return circulant.ring_mults == 0 ? 0.0
                                     : static_cast<double>(classic.ring_mults) / static_cast<double>(circulant.ring_mults);
}

namespace {

volatile std::uint64_t g_sink = 0;

std::vector<std::pair<Polynomial, Polynomial>> random_pairs(std::size_t n, std::size_t count, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::int64_t> coeff(0, mersenne::kModulus - 1);
    std::vector<std::pair<Polynomial, Polynomial>> pairs(count);
    for (auto &[p, q] : pairs) {
        p.coeffs.resize(n);
        q.coeffs.resize(n);
        for (auto &c : p.coeffs) {
            c = coeff(rng);
        }
        for (auto &c : q.coeffs) {
            c = coeff(rng);
        }
    }
    return pairs;
}

BenchRecord time_engine(Engine engine, std::size_t n, const std::vector<std::pair<Polynomial, Polynomial>> &pairs,
                        const mersenne::Fp2RootContext &ctx, const BenchConfig &config) {
    poly::PolyMulOptions options;
    options.engine = engine;
    options.exact = false;  // uniform residues: modular semantics
    options.parallel = config.parallel;

    BenchRecord rec;
    rec.n = n;
    rec.engine = std::string(poly::engine_name(engine));
    rec.repetitions = config.reps;
    if (!pairs.empty()) {
        ProductStats stats;
        poly::poly_mul(pairs.front().first, pairs.front().second, ctx, options, &stats);
        rec.ring_mults = stats.ring_mults;
    }

    auto best = std::chrono::nanoseconds::max();
    std::uint64_t sink = 0;
    for (std::size_t r = 0; r < std::max<std::size_t>(config.reps, 1); ++r) {
        const auto start = std::chrono::steady_clock::now();
        const auto products = poly::poly_mul_batch(pairs, ctx, options);
        const auto stop = std::chrono::steady_clock::now();
        sink += products.empty() ? 0 : static_cast<std::uint64_t>(products.back().coeffs.front());
        best = std::min(best, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start));
    }
    g_sink = sink;
    rec.wall_time = best;
    return rec;
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchConfig &config) {
    std::size_t largest = 1;
    for (auto n : config.sizes) {
        if (n == 0) {
            throw ParameterError("benchmark sizes must be positive");
        }
        largest = std::max(largest, poly::padded_length(Polynomial{std::vector<std::int64_t>(n, 1)},
                                                        Polynomial{std::vector<std::int64_t>(n, 1)}));
    }
    // Shared by both engines and built before any timing starts.
    const mersenne::Fp2RootContext ctx(log2_exact(largest));
    std::mt19937_64 rng(config.seed);

    std::vector<BenchRow> rows;
    for (auto n : config.sizes) {
        const auto pairs = random_pairs(n, config.batch, rng);
        BenchRow row;
        row.classic = time_engine(Engine::classic, n, pairs, ctx, config);
        row.circulant = time_engine(Engine::circulant, n, pairs, ctx, config);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream &os, const std::vector<BenchRow> &rows, bool parallel) {
    const auto ms = [](std::chrono::nanoseconds t) { return static_cast<double>(t.count()) / 1e6; };
    os << kCsvHeader << '\n';
    for (const auto &row : rows) {
        os << row.classic.n << ',' << std::fixed << std::setprecision(3) << ms(row.classic.wall_time) << ','
           << ms(row.circulant.wall_time) << ',' << std::setprecision(4) << row.ratio() << ','
           << row.classic.ring_mults << ',' << row.circulant.ring_mults << ',' << row.mult_ratio() << ','
           << (parallel ? "parallel" : "serial") << '\n';
        os.unsetf(std::ios::floatfield);
    }
}

}  // namespace circulant::bench
