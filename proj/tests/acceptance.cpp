// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and workload sizes are fixed below.

#include "circulant/bench.hpp"
#include "circulant/bigint.hpp"
#include "circulant/circulant.hpp"
#include "circulant/fermat.hpp"
#include "circulant/fft.hpp"
#include "circulant/mersenne.hpp"
#include "circulant/poly.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace circulant;
using mersenne::Fp2;

namespace {

constexpr double kCriterion1Seconds = 60.0;
constexpr double kCriterion8Seconds = 120.0;
constexpr double kMinSpeedRatio = 1.5;
constexpr std::size_t kBenchBatch = 1000;
constexpr std::size_t kBenchReps = 5;
constexpr std::size_t kBenchMinN = 32;
constexpr std::uint64_t kFermatK = 512;  // 2K = 1024: f levels up to 2 at n = 256

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <RootContext C>
std::size_t recursive_vs_naive(const C &ctx, std::size_t n, int trials, std::mt19937_64 &rng,
                               const std::function<std::vector<ValueOf<C>>(std::size_t)> &draw) {
    const int lg = log2_exact(n);
    std::size_t bad = 0;
    for (int t = 0; t < trials; ++t) {
        const FCirculant<ValueOf<C>> a{draw(n), testing::random_f(ctx.depth_max() - lg, rng)};
        const auto b = draw(n);
        const std::span<const ValueOf<C>> bs(b);
        if (!(mul_vec_recursive(a, bs, ctx) == mul_vec_naive(a, bs, ctx))) {
            ++bad;
        }
    }
    return bad;
}

Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    const auto mctx = mersenne::build_root_context(12);
    const auto fctx = fermat::build_fermat_root_context(kFermatK, fermat::max_depth(kFermatK));
    std::size_t bad = 0;
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 256; n *= 2) {
        bad += recursive_vs_naive<mersenne::Fp2RootContext>(
            mctx, n, 100, rng, [&](std::size_t m) { return testing::random_fp2_vec(m, rng); });
        bad += recursive_vs_naive<fermat::FermatRootContext>(
            fctx, n, 100, rng, [&](std::size_t m) { return testing::random_fermat_vec(fctx.ring(), m, rng); });
        total += 200;
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << total - bad << "/" << total << " products equal, " << secs << " s (limit " << kCriterion1Seconds << " s)";
    return {bad == 0 && secs < kCriterion1Seconds, os.str()};
}

Outcome criterion2() {
    std::mt19937_64 rng(102);
    const auto mctx = mersenne::build_root_context(12);
    const auto fctx = fermat::build_fermat_root_context(128, 8);  // n = 64 pads to 256
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 64; ++n) {
        for (int t = 0; t < 5; ++t) {
            const auto a = testing::random_fp2_vec(n, rng);
            const auto b = testing::random_fp2_vec(n, rng);
            const auto p = pad_to_pow2<Fp2>(a, b, Fp2{});
            auto full = mul_vec_recursive(p.matrix, std::span<const Fp2>(p.vector), mctx);
            full.resize(n);
            bad += full != mul_vec_naive(FCirculant<Fp2>{a, f_one}, std::span<const Fp2>(b), mctx);
        }
        const auto a = testing::random_fermat_vec(fctx.ring(), n, rng);
        const auto b = testing::random_fermat_vec(fctx.ring(), n, rng);
        const auto p = pad_to_pow2<fermat::FermatElem>(a, b, fctx.ring().zero());
        auto full = mul_vec_recursive(p.matrix, std::span<const fermat::FermatElem>(p.vector), fctx);
        full.resize(n);
        bad += full != mul_vec_naive(FCirculant<fermat::FermatElem>{a, f_one},
                                     std::span<const fermat::FermatElem>(b), fctx);
    }
    return {bad == 0, std::to_string(64 * 6 - bad) + "/384 padded products equal for n = 1..64"};
}

Outcome criterion3() {
    std::mt19937_64 rng(103);
    const auto ctx = mersenne::build_root_context(12);
    const auto &ring = ctx.ring();
    std::size_t bad = 0;
    std::size_t total = 0;
    for (std::size_t n : {4, 8, 16}) {
        const std::size_t h = n / 2;
        for (int t = 0; t < 50; ++t) {
            const FCirculant<Fp2> a{testing::random_fp2_vec(n, rng), testing::random_f(10, rng)};
            const auto dense = to_dense(a, ctx);
            const auto roots = sqrt_f(a.f, ctx);
            const auto s = resolve(ctx, roots.first);
            std::vector<std::vector<Fp2>> m1(h, std::vector<Fp2>(h)), m2 = m1;
            for (std::size_t i = 0; i < h; ++i) {
                for (std::size_t j = 0; j < h; ++j) {
                    const auto sr = ring.mul(s, dense[i][h + j]);
                    m1[i][j] = ring.add(dense[i][j], sr);
                    m2[i][j] = ring.sub(dense[i][j], sr);
                }
            }
            const bool ok = testing::is_g_circulant(ring, m1, resolve(ctx, roots.first)) &&
                            testing::is_g_circulant(ring, m2, resolve(ctx, roots.second)) &&
                            ring.equal(resolve(ctx, roots.second), ring.neg(s));
            bad += !ok;
            ++total;
        }
    }
    return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " half-size pairs keep the structure"};
}

poly::Polynomial random_poly(std::size_t len, std::int64_t bound, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    poly::Polynomial p;
    p.coeffs.resize(len);
    for (auto &c : p.coeffs) {
        c = d(rng);
    }
    return p;
}

Outcome criterion4() {
    std::mt19937_64 rng(104);
    const mersenne::Fp2RootContext ctx(11);  // 513 + 513 - 1 pads to 2048
    constexpr std::int64_t kMaxCoeff = (1 << 15) - 1;
    constexpr std::int64_t kSignedLimit = (mersenne::kModulus - 1) / 2;
    std::uniform_int_distribution<std::size_t> degree(0, 512);
    std::size_t exact_bad = 0;
    std::size_t residue_bad = 0;
    std::int64_t smallest_bound = kMaxCoeff;
    const auto opts = [](poly::Engine e, bool exact) {
        poly::PolyMulOptions o;
        o.engine = e;
        o.exact = exact;
        return o;
    };
    for (int t = 0; t < 1000; ++t) {
        const std::size_t lp = degree(rng) + 1;
        const std::size_t lq = degree(rng) + 1;
        // Exact integer agreement: largest magnitude below 2^15 whose products
        // still lift uniquely from Z/pZ.
        const auto bound = std::min<std::int64_t>(
            kMaxCoeff,
            static_cast<std::int64_t>(std::sqrt(static_cast<double>(kSignedLimit / std::min(lp, lq)))));
        smallest_bound = std::min(smallest_bound, bound);
        const auto p = random_poly(lp, bound, rng);
        const auto q = random_poly(lq, bound, rng);
        const auto school = poly::poly_mul(p, q, ctx, opts(poly::Engine::schoolbook, true));
        exact_bad += poly::poly_mul(p, q, ctx, opts(poly::Engine::circulant, true)) != school ||
                     poly::poly_mul(p, q, ctx, opts(poly::Engine::classic, true)) != school;

        // Full |coeff| < 2^15 range: agreement of the exact product reduced mod p.
        const auto pf = random_poly(lp, kMaxCoeff, rng);
        const auto qf = random_poly(lq, kMaxCoeff, rng);
        const auto ref = poly::reduce_mod_p(poly::poly_mul_schoolbook(pf, qf));
        residue_bad += poly::poly_mul(pf, qf, ctx, opts(poly::Engine::circulant, false)) != ref ||
                       poly::poly_mul(pf, qf, ctx, opts(poly::Engine::classic, false)) != ref ||
                       poly::poly_mul(pf, qf, ctx, opts(poly::Engine::schoolbook, false)) != ref;
    }
    std::ostringstream os;
    os << 1000 - exact_bad << "/1000 exact integer agreements (|coeff| <= " << smallest_bound
       << " at the longest pairs), " << 1000 - residue_bad << "/1000 mod-p agreements at |coeff| < 2^15";
    return {exact_bad == 0 && residue_bad == 0, os.str()};
}

template <RootContext C>
std::size_t chain_violations(const C &ctx) {
    const auto &ring = ctx.ring();
    std::size_t bad = testing::root_context_violations(ctx);
    for (int k = 0; k < ctx.depth_max(); ++k) {
        for (std::uint64_t e = 0; e < (std::uint64_t{1} << k); ++e) {
            const auto r = ctx.root(k + 1, e);
            bad += !ring.equal(ring.mul(r, r), ctx.root(k, e));
        }
    }
    bad += !ring.equal(ring.mul(ring.add(ring.one(), ring.one()), ctx.inv2()), ring.one());
    return bad;
}

Outcome criterion5() {
    std::size_t bad = chain_violations(mersenne::build_root_context(12));
    for (std::uint64_t k : {4, 8, 16, 64}) {
        bad += chain_violations(fermat::build_fermat_root_context(k, fermat::max_depth(k)));
    }
    return {bad == 0, std::to_string(bad) + " violated identities (Mersenne depth 12, Fermat K = 4, 8, 16, 64)"};
}

Outcome criterion6() {
    std::mt19937_64 rng(106);
    const auto ctx = mersenne::build_root_context(12);
    bool strictly_less = true;
    bool closed_form = true;
    std::ostringstream os;
    for (std::size_t n = 8; n <= 1024; n *= 2) {
        const auto a = testing::random_fp2_vec(n, rng);
        const auto b = testing::random_fp2_vec(n, rng);
        ProductStats circ;
        ProductStats classic;
        mul_vec_recursive(FCirculant<Fp2>{a, f_one}, std::span<const Fp2>(b), ctx, &circ);
        circulant_mul_classic<mersenne::Fp2RootContext>(a, b, make_plan(n, ctx), &classic);
        const std::uint64_t lg = static_cast<std::uint64_t>(log2_exact(n));
        // T(1) = 1, T(n) = 2 T(n/2) + (3/2) n  =>  T(n) = n + (3/2) n log2 n
        closed_form = closed_form && circ.ring_mults == n + 3 * n * lg / 2;
        strictly_less = strictly_less && circ.ring_mults < classic.ring_mults;
        os << " n=" << n << ":" << circ.ring_mults << "/" << classic.ring_mults;
    }
    return {strictly_less && closed_form, std::string("circulant/classic mults") + os.str() +
                                              (closed_form ? "; closed form holds" : "; closed form FAILS") +
                                              (strictly_less ? "" : "; circulant is not strictly below classic")};
}

Outcome criterion7() {
    bench::BenchConfig cfg;
    cfg.sizes = {8, 16, 32, 64, 128, 256, 512};
    cfg.batch = kBenchBatch;
    cfg.reps = kBenchReps;
    cfg.seed = 107;
    const auto rows = bench::run_benchmark(cfg);
    bool ok = true;
    std::ostringstream os;
    os.precision(3);
    os << "ratio (min " << kMinSpeedRatio << " for n >= " << kBenchMinN << "):";
    for (const auto &row : rows) {
        os << " n=" << row.classic.n << ":" << row.ratio();
        if (row.classic.n >= kBenchMinN && row.ratio() < kMinSpeedRatio) {
            ok = false;
        }
    }
    return {ok, os.str()};
}

Outcome criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(108);
    std::uniform_int_distribution<std::size_t> digits(1, 4096);
    std::uniform_int_distribution<int> digit(0, 9);
    const auto random_decimal = [&](std::size_t len) {
        std::string s(len, '0');
        for (auto &c : s) {
            c = static_cast<char>('0' + digit(rng));
        }
        s[0] = static_cast<char>('1' + digit(rng) % 9);
        return bigint::BigNumber::from_decimal(s);
    };
    std::size_t bad = 0;
    int deepest = 0;
    std::size_t multi_level = 0;
    for (int t = 0; t < 1000; ++t) {
        // every fourth pair at full size with a small threshold forces nesting
        const bool forced = t % 4 == 0;
        const auto x = random_decimal(forced ? 4096 : digits(rng));
        const auto y = random_decimal(forced ? 4096 - static_cast<std::size_t>(t % 64) : digits(rng));
        bigint::SsaConfig cfg;
        cfg.threshold_words = forced ? 4 : (t % 2 == 0 ? 8 : 64);
        bigint::SsaStats stats;
        bad += bigint::ssa_mul(x, y, cfg, &stats) != bigint::schoolbook_mul(x, y);
        deepest = std::max(deepest, stats.max_level);
        multi_level += stats.max_level >= 2;
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << 1000 - bad << "/1000 equal, " << multi_level << " pairs with >= 2 nested levels (deepest " << deepest
       << "), " << secs << " s (limit " << kCriterion8Seconds << " s)";
    return {bad == 0 && deepest >= 2 && multi_level > 0 && secs < kCriterion8Seconds, os.str()};
}

Outcome criterion9() {
    std::mt19937_64 rng(109);
    const auto ctx = mersenne::build_root_context(10);
    std::size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = std::size_t{1} << (t % 9);
        std::vector<Fp2> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = testing::random_fp(rng);
            b[i] = testing::random_fp(rng);
        }
        // f = 1 or f = -1, both in the subfield
        const FExponent f = t % 2 == 0 ? f_one : FExponent{1, 1};
        const auto c = mul_vec_recursive(FCirculant<Fp2>{a, f}, std::span<const Fp2>(b), ctx);
        for (const auto &v : c) {
            bad += v.b.value != 0;
        }
    }
    return {bad == 0, std::to_string(bad) + " output coefficients with a sqrt 3 component over 1000 products"};
}

}  // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"recursive product equals naive", criterion1},
        {"padded product equals n x n product", criterion2},
        {"half-size matrices keep f-circulant structure", criterion3},
        {"three polynomial engines agree", criterion4},
        {"root table identities", criterion5},
        {"multiplication count below classic and closed form", criterion6},
        {"benchmark speed ratio", criterion7},
        {"ssa_mul equals schoolbook", criterion8},
        {"subfield closure", criterion9},
    };
    int failed = 0;
    int index = 1;
    for (const auto &[name, run] : criteria) {
        Outcome out;
        try {
            out = run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %d: %s - %s (%s)\n", index, out.pass ? "PASS" : "FAIL", name, out.detail.c_str());
        std::fflush(stdout);
        failed += !out.pass;
        ++index;
    }
    std::printf("%d of %d criteria passed\n", index - 1 - failed, index - 1);
    return failed == 0 ? 0 : 1;
}
