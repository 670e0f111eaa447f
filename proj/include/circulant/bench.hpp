#pragma once

// Classic (three-transform) vs circulant timing of batched polynomial
// products. Each size is timed `reps` times per engine and the minimum wall
// time is kept.

#include "circulant/circulant.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace circulant::bench {

struct BenchConfig {
    std::vector<std::size_t> sizes{8, 16, 32, 64, 128, 256, 512};
    std::size_t batch = 1000;
    std::size_t reps = 5;
    std::uint64_t seed = 0;
    /// OpenMP across the batch for both engines.
    bool parallel = false;
};

struct BenchRecord {
    std::size_t n = 0;
    std::string engine;
    std::chrono::nanoseconds wall_time{0};  // minimum over repetitions
    std::uint64_t ring_mults = 0;           // per polynomial product
    std::size_t repetitions = 0;
};

struct BenchRow {
    BenchRecord classic;
    BenchRecord circulant;

    double ratio() const;       // classic / circulant wall time
    double mult_ratio() const;  // classic / circulant ring multiplications
};

inline constexpr const char *kCsvHeader =
    "n,classic_ms,circulant_ms,ratio,classic_mults,circulant_mults,mult_ratio,mode";

/// Coefficients are uniform residues in [0, 2^31 - 1) from a mt19937_64
/// seeded with `seed`; both engines see identical inputs.
std::vector<BenchRow> run_benchmark(const BenchConfig &config);

void write_csv(std::ostream &os, const std::vector<BenchRow> &rows, bool parallel);

}  // namespace circulant::bench
