#pragma once

// f-circulant matrix-vector products.
//
// An f-circulant n x n matrix is identified by its first row. With 0-based
// indices the implied entries are
//
//     A[i][j] = row[j - i]          for j >= i
//     A[i][j] = f * row[j - i + n]  for j <  i
//
// so the 3 x 3 case reads [[a1, a2, a3], [a3 f, a1, a2], [a2 f, a3 f, a1]].
//
// The recursive product splits A into the 2 x 2 block form [[T, R], [f R, T]]
// and multiplies the two half-size matrices T + sqrt(f) R and T - sqrt(f) R,
// which are sqrt(f)- and (-sqrt(f))-circulant, by sqrt(f) b1 + b2 and
// sqrt(f) b1 - b2. No transform is involved.

#include "circulant/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace circulant {

template <typename T>
struct FCirculant {
    std::vector<T> row;
    FExponent f = f_one;

    std::size_t size() const noexcept { return row.size(); }
};

/// Operation counters for one product.
///
/// `ring_mults` counts every product of two ring elements the algorithm asks
/// for, including products with roots of unity (whether the ring realizes
/// them by table lookup or by shifting). Division by a power of two is a
/// rotation or shift in both supported rings and is counted in `scalings`.
struct ProductStats {
    std::uint64_t ring_mults = 0;
    std::uint64_t ring_adds = 0;
    std::uint64_t scalings = 0;

    ProductStats &operator+=(const ProductStats &o) noexcept {
        ring_mults += o.ring_mults;
        ring_adds += o.ring_adds;
        scalings += o.scalings;
        return *this;
    }

    friend bool operator==(const ProductStats &, const ProductStats &) = default;
};

struct RecursiveOptions {
    /// Sub-products of size <= threshold use the naive product. 1 recurses to
    /// scalars.
    std::size_t base_threshold = 1;
};

template <RootContext C>
using ValueOf = typename C::ring_type::value_type;

/// Dense n x n matrix, row-major, from the implied-entry rule.
template <RootContext C>
std::vector<std::vector<ValueOf<C>>> to_dense(const FCirculant<ValueOf<C>> &a, const C &ctx) {
    const auto &ring = ctx.ring();
    const std::size_t n = a.size();
    const auto f = resolve(ctx, a.f);
    std::vector<std::vector<ValueOf<C>>> m(n, std::vector<ValueOf<C>>(n, ring.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = j >= i ? a.row[j - i] : ring.mul(f, a.row[j + n - i]);
        }
    }
    return m;
}

namespace detail {

template <RootContext C>
void check_f(const C &ctx, FExponent f) {
    if (f.level < 0 || f.level > ctx.depth_max()) {
        throw RootTableExhausted("f at level " + std::to_string(f.level) + " is outside the root table (depth " +
                                 std::to_string(ctx.depth_max()) + ")");
    }
}

template <RootContext C>
void naive_into(const C &ctx, std::span<const ValueOf<C>> row, std::span<const ValueOf<C>> b, FExponent f,
                std::span<ValueOf<C>> out, ProductStats &stats) {
    const auto &ring = ctx.ring();
    const std::size_t n = row.size();
    const auto fv = resolve(ctx, f);
    for (std::size_t i = 0; i < n; ++i) {
        auto upper = ring.zero();
        for (std::size_t j = i; j < n; ++j) {
            upper = ring.add(upper, ring.mul(row[j - i], b[j]));
        }
        stats.ring_mults += n - i;
        stats.ring_adds += n - i - 1;  // sums of k terms take k - 1 additions
        if (i > 0) {
            auto wrapped = ring.zero();
            for (std::size_t j = 0; j < i; ++j) {
                wrapped = ring.add(wrapped, ring.mul(row[j + n - i], b[j]));
            }
            upper = ring.add(upper, ring.mul(fv, wrapped));
            stats.ring_mults += i + 1;
            stats.ring_adds += i;
        }
        out[i] = upper;
    }
}

/// Half-size operands (T + s R, T - s R) and (s b1 + b2, s b1 - b2), s = sqrt(f).
template <RootContext C>
void split_level(const C &ctx, std::span<const ValueOf<C>> row, std::span<const ValueOf<C>> b, FExponent root,
                 std::span<ValueOf<C>> a_plus, std::span<ValueOf<C>> a_minus, std::span<ValueOf<C>> b_plus,
                 std::span<ValueOf<C>> b_minus) {
    const auto &ring = ctx.ring();
    const std::size_t h = a_plus.size();
    for (std::size_t i = 0; i < h; ++i) {
        const auto t = ctx.mul_root(row[h + i], root);
        a_plus[i] = ring.add(row[i], t);
        a_minus[i] = ring.sub(row[i], t);
        const auto u = ctx.mul_root(b[i], root);
        b_plus[i] = ring.add(u, b[h + i]);
        b_minus[i] = ring.sub(u, b[h + i]);
    }
}

/// out = [M1 | M2] -> [(M1 + M2) / s | M1 - M2], each half scaled by 2 relative
/// to the true product; the caller divides the accumulated power of two once.
template <RootContext C>
void combine_level(const C &ctx, std::span<ValueOf<C>> out, FExponent root) {
    const auto &ring = ctx.ring();
    const std::size_t h = out.size() / 2;
    for (std::size_t i = 0; i < h; ++i) {
        const auto m1 = out[i];
        const auto m2 = out[h + i];
        out[i] = ctx.mul_root_inv(ring.add(m1, m2), root);
        out[h + i] = ring.sub(m1, m2);
    }
}

inline void count_level(ProductStats &stats, std::size_t n) {
    const std::size_t h = n / 2;
    stats.ring_mults += 3 * h;
    stats.ring_adds += 6 * h;
}

/// Writes (n / leaf) * (A b) into out. `work` holds at least 4 n values.
template <RootContext C>
void recursive_into(const C &ctx, std::span<const ValueOf<C>> row, std::span<const ValueOf<C>> b, FExponent f,
                    std::span<ValueOf<C>> out, std::span<ValueOf<C>> work, std::size_t threshold,
                    ProductStats &stats) {
    const std::size_t n = row.size();
    if (n <= threshold) {
        naive_into(ctx, row, b, f, out, stats);
        return;
    }
    if (n == 1) {
        out[0] = ctx.ring().mul(row[0], b[0]);
        stats.ring_mults += 1;
        return;
    }
    const auto [plus, minus] = sqrt_f(f, ctx);
    if (n == 2) {
        // one level with scalar leaves, unrolled; same operations as the general path
        const auto &ring = ctx.ring();
        const auto t = ctx.mul_root(row[1], plus);
        const auto u = ctx.mul_root(b[0], plus);
        const auto m1 = ring.mul(ring.add(row[0], t), ring.add(u, b[1]));
        const auto m2 = ring.mul(ring.sub(row[0], t), ring.sub(u, b[1]));
        out[0] = ctx.mul_root_inv(ring.add(m1, m2), plus);
        out[1] = ring.sub(m1, m2);
        stats.ring_mults += 2;
        count_level(stats, 2);
        return;
    }
    const std::size_t h = n / 2;
    auto a_plus = work.subspan(0, h);
    auto a_minus = work.subspan(h, h);
    auto b_plus = work.subspan(2 * h, h);
    auto b_minus = work.subspan(3 * h, h);
    auto rest = work.subspan(4 * h);
    split_level(ctx, row, b, plus, a_plus, a_minus, b_plus, b_minus);
    recursive_into<C>(ctx, a_plus, b_plus, plus, out.subspan(0, h), rest, threshold, stats);
    recursive_into<C>(ctx, a_minus, b_minus, minus, out.subspan(h, h), rest, threshold, stats);
    combine_level(ctx, out, plus);
    count_level(stats, n);
}

/// Size of the sub-products that end the recursion.
inline std::size_t leaf_size(std::size_t n, std::size_t threshold) {
    std::size_t s = n;
    while (s > 1 && s > threshold) {
        s /= 2;
    }
    return s;
}

template <RootContext C>
void validate_recursive(const C &ctx, const FCirculant<ValueOf<C>> &a, std::size_t b_size) {
    const std::size_t n = a.size();
    if (n != b_size) {
        throw DimensionError("matrix is " + std::to_string(n) + " x " + std::to_string(n) + " but vector has " +
                             std::to_string(b_size) + " entries");
    }
    if (!is_pow2(n)) {
        throw DimensionError("recursive product needs a power-of-two size, got " + std::to_string(n) +
                             "; pad first");
    }
    check_f(ctx, a.f);
    if (a.f.level + log2_exact(n) > ctx.depth_max()) {
        throw RootTableExhausted("size " + std::to_string(n) + " with f at level " + std::to_string(a.f.level) +
                                 " needs root depth " + std::to_string(a.f.level + log2_exact(n)) + ", table has " +
                                 std::to_string(ctx.depth_max()));
    }
}

}  // namespace detail

/// O(n^2) product from the implied-entry rule; the reference oracle.
template <RootContext C>
std::vector<ValueOf<C>> mul_vec_naive(const FCirculant<ValueOf<C>> &a, std::span<const ValueOf<C>> b, const C &ctx,
                                      ProductStats *stats = nullptr) {
    if (a.size() != b.size()) {
        throw DimensionError("matrix is " + std::to_string(a.size()) + " x " + std::to_string(a.size()) +
                             " but vector has " + std::to_string(b.size()) + " entries");
    }
    detail::check_f(ctx, a.f);
    ProductStats local;
    std::vector<ValueOf<C>> out(a.size(), ctx.ring().zero());
    detail::naive_into<C>(ctx, a.row, b, a.f, out, local);
    if (stats != nullptr) {
        *stats += local;
    }
    return out;
}

/// Recursive O(n log n) product for power-of-two n. Serial reference.
template <RootContext C>
std::vector<ValueOf<C>> mul_vec_recursive(const FCirculant<ValueOf<C>> &a, std::span<const ValueOf<C>> b,
                                          const C &ctx, ProductStats *stats = nullptr, RecursiveOptions options = {}) {
    detail::validate_recursive(ctx, a, b.size());
    const std::size_t n = a.size();
    const auto &ring = ctx.ring();
    ProductStats local;
    std::vector<ValueOf<C>> out(n, ring.zero());
    std::vector<ValueOf<C>> work(4 * n, ring.zero());
    detail::recursive_into<C>(ctx, a.row, b, a.f, out, work, options.base_threshold, local);
    const unsigned scale = static_cast<unsigned>(log2_exact(n / detail::leaf_size(n, options.base_threshold)));
    if (scale != 0) {
        for (auto &v : out) {
            v = ring.div_pow2(v, scale);
        }
        local.scalings += n;
    }
    if (stats != nullptr) {
        *stats += local;
    }
    return out;
}

template <typename T>
struct PaddedProduct {
    FCirculant<T> matrix;
    std::vector<T> vector;
    std::size_t size = 0;
};

/// Embeds an n x n circulant product in one of size N = 2^(d+1), where d is
/// the smallest integer with 2^d > n:
///   a' = (a1..an, 0..0, a2..an),  b' = (b1..bn, 0..0).
/// The first n entries of A' b' are A b.
template <typename T>
PaddedProduct<T> pad_to_pow2(std::span<const T> a, std::span<const T> b, const T &zero) {
    const std::size_t n = a.size();
    if (n == 0) {
        throw DimensionError("cannot pad an empty circulant");
    }
    if (b.size() != n) {
        throw DimensionError("row has " + std::to_string(n) + " entries but vector has " + std::to_string(b.size()));
    }
    std::size_t big = 1;
    while (big <= n) {
        big *= 2;
    }
    const std::size_t padded = 2 * big;
    PaddedProduct<T> out;
    out.size = padded;
    out.matrix.f = f_one;
    out.matrix.row.assign(padded, zero);
    std::copy(a.begin(), a.end(), out.matrix.row.begin());
    std::copy(a.begin() + 1, a.end(), out.matrix.row.end() - static_cast<std::ptrdiff_t>(n - 1));
    out.vector.assign(padded, zero);
    std::copy(b.begin(), b.end(), out.vector.begin());
    return out;
}

/// Ordinary (1-)circulant product for any n >= 1.
template <RootContext C>
std::vector<ValueOf<C>> mul_vec_any_size(std::span<const ValueOf<C>> a, std::span<const ValueOf<C>> b, const C &ctx,
                                         ProductStats *stats = nullptr, RecursiveOptions options = {}) {
    if (a.size() != b.size()) {
        throw DimensionError("row has " + std::to_string(a.size()) + " entries but vector has " +
                             std::to_string(b.size()));
    }
    if (a.empty()) {
        throw DimensionError("empty circulant");
    }
    if (is_pow2(a.size())) {
        const FCirculant<ValueOf<C>> m{{a.begin(), a.end()}, f_one};
        return mul_vec_recursive(m, b, ctx, stats, options);
    }
    const auto padded = pad_to_pow2<ValueOf<C>>(a, b, ctx.ring().zero());
    auto out = mul_vec_recursive(padded.matrix, std::span<const ValueOf<C>>(padded.vector), ctx, stats, options);
    out.resize(a.size());
    return out;
}

/// x[(-j) mod n]
template <typename T>
std::vector<T> cyclic_reverse(std::span<const T> x) {
    std::vector<T> out(x.begin(), x.end());
    if (out.size() > 1) {
        std::reverse(out.begin() + 1, out.end());
    }
    return out;
}

/// Length-n cyclic convolution through the row-convention circulant product:
/// with A[i][j] = a[(j - i) mod n] and b~[j] = b[(-j) mod n], (A b~)[i] is the
/// convolution at index (-i) mod n.
template <RootContext C>
std::vector<ValueOf<C>> cyclic_convolve(std::span<const ValueOf<C>> a, std::span<const ValueOf<C>> b, const C &ctx,
                                        ProductStats *stats = nullptr, RecursiveOptions options = {}) {
    const FCirculant<ValueOf<C>> m{{a.begin(), a.end()}, f_one};
    const auto reversed = cyclic_reverse(b);
    const auto out = mul_vec_recursive(m, std::span<const ValueOf<C>>(reversed), ctx, stats, options);
    return cyclic_reverse(std::span<const ValueOf<C>>(out));
}

}  // namespace circulant
