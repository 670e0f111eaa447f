#pragma once

// Arithmetic modulo 2^K + 1. Here 2 has order 2K, so every power-of-two root
// of unity up to order 2K is a power of 2 and multiplying by it is a shift.

#include "circulant/limbs.hpp"
#include "circulant/ring.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace circulant::fermat {

/// Canonical value in [0, 2^K]; 2^K itself stands for -1.
struct FermatElem {
    std::uint64_t k = 0;
    limbs::Limbs limbs;

    friend bool operator==(const FermatElem &, const FermatElem &) = default;
};

/// Multiplies two magnitudes. The integer multiplier plugs its recursive
/// product in here; the default is the schoolbook product.
using MulKernel = std::function<limbs::Limbs(std::span<const limbs::Limb>, std::span<const limbs::Limb>)>;

class FermatRing {
public:
    using value_type = FermatElem;

    explicit FermatRing(std::uint64_t k, MulKernel kernel = {});

    std::uint64_t k() const noexcept { return k_; }
    std::size_t width() const noexcept { return width_; }

    FermatElem zero() const;
    FermatElem one() const;
    FermatElem from_u64(std::uint64_t v) const;
    /// Reduces an arbitrary magnitude modulo 2^K + 1.
    FermatElem from_limbs(std::span<const limbs::Limb> v) const;
    /// Canonical representative as an integer (high zero limbs trimmed).
    limbs::Limbs to_limbs(const FermatElem &x) const;

    FermatElem add(const FermatElem &x, const FermatElem &y) const;
    FermatElem sub(const FermatElem &x, const FermatElem &y) const;
    FermatElem neg(const FermatElem &x) const;
    FermatElem mul(const FermatElem &x, const FermatElem &y) const;
    bool equal(const FermatElem &x, const FermatElem &y) const;

    /// x * 2^e for any integer e, computed by shift, split and negate only.
    FermatElem mul_pow2(const FermatElem &x, std::int64_t e) const;
    FermatElem div_pow2(const FermatElem &x, unsigned k) const {
        return mul_pow2(x, -static_cast<std::int64_t>(k));
    }

    /// Throws ParameterError unless x has this ring's width and is <= 2^K.
    void check(const FermatElem &x) const;

private:
    FermatElem reduce_signed(limbs::Limbs lo, const limbs::Limbs &hi) const;
    void same_ring(const FermatElem &x, const FermatElem &y) const;

    std::uint64_t k_;
    std::size_t width_;  // limbs per element, holds values up to 2^(K+1)
    limbs::Limbs modulus_;
    MulKernel kernel_;
};

/// Roots w_{2^k}^e = 2^(e * 2K / 2^k). Multiplying by a root or its inverse is
/// a `mul_pow2` call; nothing is tabulated.
class FermatRootContext {
public:
    using ring_type = FermatRing;

    FermatRootContext(FermatRing ring, int depth);

    const FermatRing &ring() const noexcept { return ring_; }
    int depth_max() const noexcept { return depth_; }

    /// Bit shift that realizes root(level, index).
    std::int64_t shift(int level, std::uint64_t index) const noexcept;

    FermatElem root(int level, std::uint64_t index) const;
    FermatElem root_inv(int level, std::uint64_t index) const;
    FermatElem inv2() const;

    FermatElem mul_root(const FermatElem &x, FExponent fe) const {
        return ring_.mul_pow2(x, shift(fe.level, fe.index));
    }
    FermatElem mul_root_inv(const FermatElem &x, FExponent fe) const {
        return ring_.mul_pow2(x, -shift(fe.level, fe.index));
    }

private:
    FermatRing ring_;
    int depth_;
};

/// Largest depth with 2^depth dividing 2K.
int max_depth(std::uint64_t k) noexcept;

FermatRootContext build_fermat_root_context(std::uint64_t k, int depth, MulKernel kernel = {});

}  // namespace circulant::fermat
