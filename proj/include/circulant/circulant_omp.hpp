#pragma once

// OpenMP variant of the recursive f-circulant product. The two half-size
// products of each level are independent and run as tasks above a size
// cutoff; the serial kernel in circulant.hpp is the reference it is tested
// against.

#include "circulant/circulant.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace circulant::parallel {

struct ParallelOptions {
    RecursiveOptions recursion;
    /// Sub-products smaller than this run serially inside their task.
    std::size_t task_cutoff = 256;
};

namespace detail {

template <RootContext C>
void recursive_tasks(const C &ctx, std::span<const ValueOf<C>> row, std::span<const ValueOf<C>> b, FExponent f,
                     std::span<ValueOf<C>> out, std::span<ValueOf<C>> work, const ParallelOptions &options,
                     ProductStats &stats) {
    const std::size_t n = row.size();
    if (n < options.task_cutoff || n <= options.recursion.base_threshold || n == 1) {
        circulant::detail::recursive_into<C>(ctx, row, b, f, out, work, options.recursion.base_threshold, stats);
        return;
    }
    const std::size_t h = n / 2;
    const auto roots = sqrt_f(f, ctx);
    const FExponent plus = roots.first;
    const FExponent minus = roots.second;
    auto a_plus = work.subspan(0, h);
    auto a_minus = work.subspan(h, h);
    auto b_plus = work.subspan(2 * h, h);
    auto b_minus = work.subspan(3 * h, h);
    // Each branch gets its own scratch; the serial kernel shares one.
    std::vector<ValueOf<C>> scratch_minus(4 * h, ctx.ring().zero());
    auto scratch_plus = work.subspan(4 * h);

    circulant::detail::split_level(ctx, row, b, plus, a_plus, a_minus, b_plus, b_minus);

    ProductStats left;
    ProductStats right;
#pragma omp task default(shared) if (h >= options.task_cutoff)
    recursive_tasks<C>(ctx, a_plus, b_plus, plus, out.subspan(0, h), scratch_plus, options, left);
#pragma omp task default(shared) if (h >= options.task_cutoff)
    recursive_tasks<C>(ctx, a_minus, b_minus, minus, out.subspan(h, h), scratch_minus, options, right);
#pragma omp taskwait

    circulant::detail::combine_level(ctx, out, plus);
    stats += left;
    stats += right;
    circulant::detail::count_level(stats, n);
}

}  // namespace detail

/// Same result and the same operation counts as circulant::mul_vec_recursive.
template <RootContext C>
std::vector<ValueOf<C>> mul_vec_recursive(const FCirculant<ValueOf<C>> &a, std::span<const ValueOf<C>> b,
                                          const C &ctx, ProductStats *stats = nullptr, ParallelOptions options = {}) {
    circulant::detail::validate_recursive(ctx, a, b.size());
    const std::size_t n = a.size();
    const auto &ring = ctx.ring();
    ProductStats local;
    std::vector<ValueOf<C>> out(n, ring.zero());
    std::vector<ValueOf<C>> work(4 * n, ring.zero());
    const std::span<const ValueOf<C>> row(a.row);
#ifdef _OPENMP
    if (omp_in_parallel()) {
        detail::recursive_tasks<C>(ctx, row, b, a.f, out, work, options, local);
    } else {
#pragma omp parallel default(shared)
#pragma omp single
        detail::recursive_tasks<C>(ctx, row, b, a.f, out, work, options, local);
    }
#else
    detail::recursive_tasks<C>(ctx, row, b, a.f, out, work, options, local);
#endif
    const unsigned scale =
        static_cast<unsigned>(log2_exact(n / circulant::detail::leaf_size(n, options.recursion.base_threshold)));
    if (scale != 0) {
#pragma omp parallel for if (n >= 4096)
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = ring.div_pow2(out[i], scale);
        }
        local.scalings += n;
    }
    if (stats != nullptr) {
        *stats += local;
    }
    return out;
}

template <RootContext C>
std::vector<ValueOf<C>> cyclic_convolve(std::span<const ValueOf<C>> a, std::span<const ValueOf<C>> b, const C &ctx,
                                        ProductStats *stats = nullptr, ParallelOptions options = {}) {
    const FCirculant<ValueOf<C>> m{{a.begin(), a.end()}, f_one};
    const auto reversed = cyclic_reverse(b);
    const auto out = mul_vec_recursive(m, std::span<const ValueOf<C>>(reversed), ctx, stats, options);
    return cyclic_reverse(std::span<const ValueOf<C>>(out));
}

}  // namespace circulant::parallel
