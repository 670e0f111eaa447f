#pragma once

// Schonhage-Strassen style integer multiplication with the recursive
// circulant product in place of the three transforms. Coefficients live in
// Z/(2^K + 1), where every root of unity the recursion needs is a power of two.

#include "circulant/circulant.hpp"
#include "circulant/limbs.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circulant::bigint {

/// Nonnegative integer, little-endian 64-bit limbs, no high zero limbs.
class BigNumber {
public:
    BigNumber() = default;
    explicit BigNumber(std::uint64_t v);
    explicit BigNumber(limbs::Limbs digits);

    /// Throws ParseError on empty input or a non-digit character.
    static BigNumber from_decimal(std::string_view text);
    std::string to_decimal() const;

    const limbs::Limbs &digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool is_zero() const noexcept { return digits_.empty(); }
    std::size_t bit_length() const noexcept { return limbs::bit_length(digits_); }

    friend BigNumber operator+(const BigNumber &x, const BigNumber &y);
    friend bool operator==(const BigNumber &, const BigNumber &) = default;

private:
    limbs::Limbs digits_;
};

struct SsaParams {
    bool direct = false;          // use schoolbook_mul
    std::uint64_t parts = 0;      // N, power of two
    std::uint64_t part_bits = 0;  // bits per part
    std::uint64_t k = 0;          // coefficient ring Z/(2^K + 1)
};

struct SsaConfig {
    /// Products with fewer than 2 * threshold_words words in total go to
    /// schoolbook_mul, at every recursion level. So do products too small
    /// for the coefficient ring to be narrower than the operands.
    std::size_t threshold_words = 64;
    /// Run each level's circulant product with the OpenMP kernel.
    bool parallel = false;
};

struct SsaStats {
    /// Deepest level that used the circulant path (0 = none).
    int max_level = 0;
    std::uint64_t circulant_products = 0;
};

SsaParams choose_params(std::uint64_t total_bits, const SsaConfig &config = {});

/// N power of two, 2K a multiple of N, N * 2^(2 part_bits) <= 2^K, and
/// (N - 1) * part_bits >= total_bits (so n1 + n2 - 1 <= N parts).
bool params_valid(const SsaParams &params, std::uint64_t total_bits);

BigNumber schoolbook_mul(const BigNumber &x, const BigNumber &y);

BigNumber ssa_mul(const BigNumber &x, const BigNumber &y, const SsaConfig &config = {}, SsaStats *stats = nullptr);

/// sum_i coeffs[i] * 2^(i part_bits), with carries.
BigNumber carry_propagate(std::span<const limbs::Limbs> coeffs, std::uint64_t part_bits);

}  // namespace circulant::bigint
