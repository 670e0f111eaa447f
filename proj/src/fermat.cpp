#include "circulant/fermat.hpp"

#include <algorithm>
#include <string>

namespace circulant::fermat {

using limbs::Limb;
using limbs::Limbs;

FermatRing::FermatRing(std::uint64_t k, MulKernel kernel)
    : k_(k), width_(static_cast<std::size_t>((k + 2 + limbs::kLimbBits - 1) / limbs::kLimbBits)),
      kernel_(std::move(kernel)) {
    if (k == 0) {
        throw ParameterError("Fermat ring needs K >= 1");
    }
    modulus_ = limbs::shift_left(std::vector<Limb>{1}, k, width_);
    modulus_[0] |= 1;
    if (!kernel_) {
        kernel_ = [](std::span<const Limb> x, std::span<const Limb> y) { return limbs::mul_schoolbook(x, y); };
    }
}

FermatElem FermatRing::zero() const { return FermatElem{k_, Limbs(width_, 0)}; }

FermatElem FermatRing::one() const { return from_u64(1); }

FermatElem FermatRing::from_u64(std::uint64_t v) const {
    return from_limbs(std::vector<Limb>{v});
}

FermatElem FermatRing::from_limbs(std::span<const Limb> v) const {
    // v = sum_i chunk_i 2^(iK) = sum_i (-1)^i chunk_i
    const std::size_t bits = limbs::bit_length(v);
    Limbs pos(width_ + 1, 0);
    Limbs negsum(width_ + 1, 0);
    std::size_t chunks = 0;
    for (std::size_t off = 0; off < bits; off += k_, ++chunks) {
        Limbs chunk = limbs::extract_bits(v, off, static_cast<std::size_t>(k_));
        chunk.resize(width_ + 1, 0);
        // Keep the partial sums below 2^K + 1 so they never outgrow the buffer.
        Limbs &target = (chunks % 2 == 0) ? pos : negsum;
        limbs::add_in_place(target, chunk);
        if (limbs::compare(target, modulus_) >= 0) {
            limbs::sub_in_place(target, modulus_);
        }
    }
    if (limbs::compare(pos, negsum) < 0) {
        limbs::add_in_place(pos, modulus_);
    }
    limbs::sub_in_place(pos, negsum);
    pos.resize(width_);
    return FermatElem{k_, std::move(pos)};
}

Limbs FermatRing::to_limbs(const FermatElem &x) const {
    Limbs out = x.limbs;
    limbs::trim(out);
    return out;
}

void FermatRing::check(const FermatElem &x) const {
    if (x.k != k_) {
        throw ParameterError("Fermat element has K=" + std::to_string(x.k) + ", ring has K=" + std::to_string(k_));
    }
    if (x.limbs.size() != width_) {
        throw ParameterError("Fermat element width " + std::to_string(x.limbs.size()) + " does not match ring K=" +
                             std::to_string(k_));
    }
    if (limbs::compare(x.limbs, modulus_) >= 0) {
        throw ParameterError("Fermat element exceeds 2^K");
    }
}

void FermatRing::same_ring(const FermatElem &x, const FermatElem &y) const {
    if (x.k != k_ || y.k != k_) {
        throw ParameterError("mismatched Fermat parameters: K=" + std::to_string(x.k) + " and K=" +
                             std::to_string(y.k) + " in ring K=" + std::to_string(k_));
    }
}

FermatElem FermatRing::add(const FermatElem &x, const FermatElem &y) const {
    same_ring(x, y);
    Limbs s = x.limbs;
    limbs::add_in_place(s, y.limbs);
    if (limbs::compare(s, modulus_) >= 0) {
        limbs::sub_in_place(s, modulus_);
    }
    return FermatElem{k_, std::move(s)};
}

FermatElem FermatRing::sub(const FermatElem &x, const FermatElem &y) const {
    same_ring(x, y);
    Limbs d = x.limbs;
    if (limbs::compare(x.limbs, y.limbs) < 0) {
        limbs::add_in_place(d, modulus_);
    }
    limbs::sub_in_place(d, y.limbs);
    return FermatElem{k_, std::move(d)};
}

FermatElem FermatRing::neg(const FermatElem &x) const {
    if (limbs::significant(x.limbs) == 0) {
        return x;
    }
    Limbs d = modulus_;
    limbs::sub_in_place(d, x.limbs);
    return FermatElem{k_, std::move(d)};
}

bool FermatRing::equal(const FermatElem &x, const FermatElem &y) const {
    same_ring(x, y);
    return limbs::compare(x.limbs, y.limbs) == 0;
}

// lo - hi mod 2^K + 1, with lo < 2^K and hi <= 2^K.
FermatElem FermatRing::reduce_signed(Limbs lo, const Limbs &hi) const {
    lo.resize(width_, 0);
    if (limbs::compare(lo, hi) < 0) {
        limbs::add_in_place(lo, modulus_);
    }
    limbs::sub_in_place(lo, std::span<const Limb>(hi).first(limbs::significant(hi)));
    return FermatElem{k_, std::move(lo)};
}

FermatElem FermatRing::mul(const FermatElem &x, const FermatElem &y) const {
    same_ring(x, y);
    const std::span<const Limb> xs(x.limbs.data(), limbs::significant(x.limbs));
    const std::span<const Limb> ys(y.limbs.data(), limbs::significant(y.limbs));
    if (xs.empty() || ys.empty()) {
        return zero();
    }
    const Limbs prod = kernel_(xs, ys);  // <= 2^(2K)
    const std::size_t k = static_cast<std::size_t>(k_);
    return reduce_signed(limbs::low_bits(prod, k, width_), limbs::shift_right(prod, k, width_));
}

FermatElem FermatRing::mul_pow2(const FermatElem &x, std::int64_t e) const {
    same_ring(x, x);
    const std::int64_t period = static_cast<std::int64_t>(2 * k_);
    e %= period;
    if (e < 0) {
        e += period;
    }
    bool negate = false;
    if (e >= static_cast<std::int64_t>(k_)) {
        negate = true;
        e -= static_cast<std::int64_t>(k_);
    }
    FermatElem r;
    if (e == 0) {
        r = x;
    } else {
        // x * 2^e = lo + 2^K hi = lo - hi with e < K
        const std::size_t shift = static_cast<std::size_t>(e);
        const std::size_t len = width_ + shift / limbs::kLimbBits + 1;
        const Limbs y = limbs::shift_left(x.limbs, shift, len);
        const std::size_t k = static_cast<std::size_t>(k_);
        r = reduce_signed(limbs::low_bits(y, k, width_), limbs::shift_right(y, k, width_));
    }
    return negate ? neg(r) : r;
}

int max_depth(std::uint64_t k) noexcept {
    int d = 0;
    std::uint64_t two_k = 2 * k;
    while (two_k % 2 == 0) {
        two_k /= 2;
        ++d;
    }
    return d;
}

FermatRootContext::FermatRootContext(FermatRing ring, int depth) : ring_(std::move(ring)), depth_(depth) {
    if (depth < 0 || depth > max_depth(ring_.k())) {
        throw UnsupportedTransformSize("2^" + std::to_string(depth) + " does not divide 2K = " +
                                       std::to_string(2 * ring_.k()));
    }
}

std::int64_t FermatRootContext::shift(int level, std::uint64_t index) const noexcept {
    const std::uint64_t n = std::uint64_t{1} << level;
    const std::uint64_t step = (2 * ring_.k()) >> level;
    return static_cast<std::int64_t>((index & (n - 1)) * step);
}

FermatElem FermatRootContext::root(int level, std::uint64_t index) const {
    return ring_.mul_pow2(ring_.one(), shift(level, index));
}

FermatElem FermatRootContext::root_inv(int level, std::uint64_t index) const {
    return ring_.mul_pow2(ring_.one(), -shift(level, index));
}

FermatElem FermatRootContext::inv2() const { return ring_.mul_pow2(ring_.one(), -1); }

FermatRootContext build_fermat_root_context(std::uint64_t k, int depth, MulKernel kernel) {
    return FermatRootContext(FermatRing(k, std::move(kernel)), depth);
}

}  // namespace circulant::fermat
