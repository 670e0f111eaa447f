#pragma once

// Arithmetic modulo the Mersenne prime p = 2^31 - 1 and in its quadratic
// extension Z/pZ[sqrt 3], where 2 + sqrt 3 generates a cyclic group of order
// p + 1 = 2^31. All power-of-two roots of unity up to order 2^31 live there.

#include "circulant/ring.hpp"

#include <cstdint>
#include <vector>

namespace circulant::mersenne {

inline constexpr std::uint32_t kModulus = 0x7FFFFFFFu;  // 2^31 - 1
inline constexpr int kMaxDepth = 31;                    // p + 1 = 2^31

/// Residue in [0, p).
struct Fp {
    std::uint32_t value = 0;

    friend bool operator==(const Fp &, const Fp &) = default;
};

/// a + b*sqrt(3)
struct Fp2 {
    Fp a;
    Fp b;

    friend bool operator==(const Fp2 &, const Fp2 &) = default;
};

/// x mod p by folding (x & p) + (x >> 31). Accepts any 64-bit input.
constexpr Fp fp_reduce(std::uint64_t x) noexcept {
    while (x >> 31) {
        x = (x & kModulus) + (x >> 31);
    }
    if (x == kModulus) {
        x = 0;
    }
    return Fp{static_cast<std::uint32_t>(x)};
}

constexpr Fp fp_add(Fp x, Fp y) noexcept {
    std::uint32_t s = x.value + y.value;  // < 2^32
    if (s >= kModulus) {
        s -= kModulus;
    }
    return Fp{s};
}

constexpr Fp fp_sub(Fp x, Fp y) noexcept {
    return Fp{x.value >= y.value ? x.value - y.value : x.value + kModulus - y.value};
}

constexpr Fp fp_neg(Fp x) noexcept { return Fp{x.value == 0 ? 0 : kModulus - x.value}; }

constexpr Fp fp_mul(Fp x, Fp y) noexcept {
    const std::uint64_t prod = static_cast<std::uint64_t>(x.value) * y.value;  // < 2^62
    std::uint64_t r = (prod & kModulus) + (prod >> 31);                         // < 2^32
    r = (r & kModulus) + (r >> 31);
    return Fp{static_cast<std::uint32_t>(r == kModulus ? 0 : r)};
}

/// x * 2^-k: a right rotation inside 31 bits, since 2^31 = 1.
constexpr Fp fp_div_pow2(Fp x, unsigned k) noexcept {
    k %= 31;
    if (k == 0) {
        return x;
    }
    const std::uint32_t v = x.value;
    const std::uint32_t r = (v >> k) | ((v << (31 - k)) & kModulus);
    return Fp{r == kModulus ? 0 : r};
}

constexpr Fp2 fp2_add(Fp2 x, Fp2 y) noexcept { return {fp_add(x.a, y.a), fp_add(x.b, y.b)}; }
constexpr Fp2 fp2_sub(Fp2 x, Fp2 y) noexcept { return {fp_sub(x.a, y.a), fp_sub(x.b, y.b)}; }
constexpr Fp2 fp2_neg(Fp2 x) noexcept { return {fp_neg(x.a), fp_neg(x.b)}; }

/// (a + b r3)(c + d r3) = (ac + 3bd) + (ad + bc) r3
constexpr Fp2 fp2_mul(Fp2 x, Fp2 y) noexcept {
    const std::uint64_t ac = static_cast<std::uint64_t>(x.a.value) * y.a.value;
    const std::uint64_t bd = fp_reduce(static_cast<std::uint64_t>(x.b.value) * y.b.value).value;
    const std::uint64_t ad = static_cast<std::uint64_t>(x.a.value) * y.b.value;
    const std::uint64_t bc = static_cast<std::uint64_t>(x.b.value) * y.a.value;
    return {fp_reduce(ac + 3 * bd), fp_reduce(ad + bc)};
}

constexpr Fp2 fp2_pow(Fp2 x, std::uint64_t e) noexcept {
    Fp2 result{Fp{1}, Fp{0}};
    while (e != 0) {
        if (e & 1u) {
            result = fp2_mul(result, x);
        }
        x = fp2_mul(x, x);
        e >>= 1;
    }
    return result;
}

constexpr Fp2 fp2_div_pow2(Fp2 x, unsigned k) noexcept { return {fp_div_pow2(x.a, k), fp_div_pow2(x.b, k)}; }

/// a - b r3; for the norm-1 table roots this is the inverse.
constexpr Fp2 fp2_conj(Fp2 x) noexcept { return {x.a, fp_neg(x.b)}; }

inline constexpr Fp2 kGenerator{Fp{2}, Fp{1}};

struct Fp2Ring {
    using value_type = Fp2;

    static constexpr Fp2 zero() noexcept { return {}; }
    static constexpr Fp2 one() noexcept { return {Fp{1}, Fp{0}}; }
    static constexpr Fp2 add(Fp2 x, Fp2 y) noexcept { return fp2_add(x, y); }
    static constexpr Fp2 sub(Fp2 x, Fp2 y) noexcept { return fp2_sub(x, y); }
    static constexpr Fp2 mul(Fp2 x, Fp2 y) noexcept { return fp2_mul(x, y); }
    static constexpr Fp2 neg(Fp2 x) noexcept { return fp2_neg(x); }
    static constexpr bool equal(Fp2 x, Fp2 y) noexcept { return x == y; }
    static constexpr Fp2 div_pow2(Fp2 x, unsigned k) noexcept { return fp2_div_pow2(x, k); }

    /// Integer embedded in the base field; negative values wrap.
    static constexpr Fp2 from_int(std::int64_t v) noexcept {
        const std::int64_t m = v % static_cast<std::int64_t>(kModulus);
        return {Fp{static_cast<std::uint32_t>(m < 0 ? m + kModulus : m)}, Fp{0}};
    }
};

/// Roots of unity w_{2^k}^e = g^{e (p+1) / 2^k}, g = 2 + sqrt 3.
///
/// Only the finest level is stored (2^depth entries, one linear pass); coarser
/// levels are strided reads. Inverses are complement-index lookups.
class Fp2RootContext {
public:
    using ring_type = Fp2Ring;

    explicit Fp2RootContext(int depth);

    const Fp2Ring &ring() const noexcept { return ring_; }
    int depth_max() const noexcept { return depth_; }

    Fp2 root(int level, std::uint64_t index) const noexcept {
        const std::uint64_t mask = (std::uint64_t{1} << level) - 1;
        return table_[(index & mask) << (depth_ - level)];
    }

    Fp2 root_inv(int level, std::uint64_t index) const noexcept {
        const std::uint64_t n = std::uint64_t{1} << level;
        return root(level, (n - (index & (n - 1))) & (n - 1));
    }

    static constexpr Fp2 inv2() noexcept { return {Fp{1u << 30}, Fp{0}}; }

    Fp2 mul_root(Fp2 x, FExponent fe) const noexcept { return fp2_mul(x, root(fe.level, fe.index)); }
    Fp2 mul_root_inv(Fp2 x, FExponent fe) const noexcept { return fp2_mul(x, root_inv(fe.level, fe.index)); }

private:
    Fp2Ring ring_;
    int depth_;
    std::vector<Fp2> table_;
};

Fp2RootContext build_root_context(int depth);

}  // namespace circulant::mersenne
