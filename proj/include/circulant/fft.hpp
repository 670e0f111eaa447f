#pragma once

// Iterative radix-2 Cooley-Tukey transform over a ring with a root table, and
// the classic three-transform circulant product built on it. Twiddles are
// applied through the shared RootContext, so both this baseline and the
// recursive product pay the same per-root cost.

#include "circulant/circulant.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace circulant {

template <RootContext C>
struct TransformPlan {
    const C *ctx = nullptr;
    std::size_t n = 0;
    int log_n = 0;
    ValueOf<C> forward_root;  // w_n
    ValueOf<C> inverse_root;  // w_n^-1
    ValueOf<C> inv_n;         // n^-1
};

template <RootContext C>
TransformPlan<C> make_plan(std::size_t n, const C &ctx) {
    if (!is_pow2(n)) {
        throw DimensionError("transform length must be a power of two, got " + std::to_string(n));
    }
    const int log_n = log2_exact(n);
    if (log_n > ctx.depth_max()) {
        throw RootTableExhausted("transform length 2^" + std::to_string(log_n) + " exceeds root table depth " +
                                 std::to_string(ctx.depth_max()));
    }
    const auto &ring = ctx.ring();
    return TransformPlan<C>{&ctx, n, log_n, ctx.root(log_n, 1 % n), ctx.root_inv(log_n, 1 % n),
                            ring.div_pow2(ring.one(), static_cast<unsigned>(log_n))};
}

namespace detail {

template <typename T>
void bit_reverse_permute(std::span<T> x) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(x[i], x[j]);
        }
    }
}

/// Unscaled in-place transform; inverse uses w^-1.
template <RootContext C>
void transform(std::span<ValueOf<C>> x, const TransformPlan<C> &plan, bool inverse, ProductStats &stats) {
    const C &ctx = *plan.ctx;
    const auto &ring = ctx.ring();
    const std::size_t n = x.size();
    bit_reverse_permute(x);
    for (int s = 1; s <= plan.log_n; ++s) {
        const std::size_t m = std::size_t{1} << s;
        const std::size_t hm = m / 2;
        for (std::size_t k = 0; k < n; k += m) {
            for (std::size_t j = 0; j < hm; ++j) {
                const FExponent w{s, j};
                const auto t = inverse ? ctx.mul_root_inv(x[k + j + hm], w) : ctx.mul_root(x[k + j + hm], w);
                const auto u = x[k + j];
                x[k + j] = ring.add(u, t);
                x[k + j + hm] = ring.sub(u, t);
            }
        }
    }
    stats.ring_mults += (n / 2) * static_cast<std::size_t>(plan.log_n);
    stats.ring_adds += n * static_cast<std::size_t>(plan.log_n);
}

template <RootContext C>
void check_length(std::size_t got, const TransformPlan<C> &plan) {
    if (got != plan.n) {
        throw DimensionError("plan is for length " + std::to_string(plan.n) + ", got " + std::to_string(got));
    }
}

}  // namespace detail

/// y[k] = sum_j x[j] w^(jk)
template <RootContext C>
std::vector<ValueOf<C>> fft_forward(std::span<const ValueOf<C>> x, const TransformPlan<C> &plan,
                                    ProductStats *stats = nullptr) {
    detail::check_length(x.size(), plan);
    std::vector<ValueOf<C>> y(x.begin(), x.end());
    ProductStats local;
    detail::transform<C>(y, plan, false, local);
    if (stats != nullptr) {
        *stats += local;
    }
    return y;
}

/// Exact inverse of fft_forward.
template <RootContext C>
std::vector<ValueOf<C>> fft_inverse(std::span<const ValueOf<C>> y, const TransformPlan<C> &plan,
                                    ProductStats *stats = nullptr) {
    detail::check_length(y.size(), plan);
    std::vector<ValueOf<C>> x(y.begin(), y.end());
    ProductStats local;
    detail::transform<C>(x, plan, true, local);
    const auto &ring = plan.ctx->ring();
    for (auto &v : x) {
        v = ring.div_pow2(v, static_cast<unsigned>(plan.log_n));
    }
    local.scalings += plan.n;
    if (stats != nullptr) {
        *stats += local;
    }
    return x;
}

/// Classic product: c = F^-1 diag(F a~) F b, with a~[k] = a[(-k) mod n].
///
/// The diagonalization holds for the column convention (first column a~); in
/// the row convention used here the first column of A is the cyclic reversal
/// of its first row. Result equals mul_vec_naive on the 1-circulant of row a.
template <RootContext C>
std::vector<ValueOf<C>> circulant_mul_classic(std::span<const ValueOf<C>> a, std::span<const ValueOf<C>> b,
                                              const TransformPlan<C> &plan, ProductStats *stats = nullptr) {
    detail::check_length(a.size(), plan);
    detail::check_length(b.size(), plan);
    const auto &ring = plan.ctx->ring();
    ProductStats local;
    auto fa = cyclic_reverse(a);
    std::vector<ValueOf<C>> fb(b.begin(), b.end());
    detail::transform<C>(fa, plan, false, local);
    detail::transform<C>(fb, plan, false, local);
    for (std::size_t i = 0; i < plan.n; ++i) {
        fb[i] = ring.mul(fa[i], fb[i]);
    }
    local.ring_mults += plan.n;
    detail::transform<C>(fb, plan, true, local);
    for (auto &v : fb) {
        v = ring.div_pow2(v, static_cast<unsigned>(plan.log_n));
    }
    local.scalings += plan.n;
    if (stats != nullptr) {
        *stats += local;
    }
    return fb;
}

}  // namespace circulant
