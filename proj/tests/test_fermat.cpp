#include "circulant/fermat.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace circulant;
using namespace circulant::fermat;
using testing::BigInt;

namespace {

std::uint64_t value_of(const FermatElem &x) { return x.limbs.empty() ? 0 : x.limbs[0]; }

BigInt modulus(std::uint64_t k) { return (BigInt(1) << static_cast<unsigned>(k)) + 1; }

BigInt big_of(const FermatRing &ring, const FermatElem &x) { return testing::to_big(ring.to_limbs(x)); }

}  // namespace

TEST_CASE("K = 4 examples") {
    const FermatRing r(4);
    CHECK(value_of(r.add(r.from_u64(16), r.from_u64(1))) == 0);
    CHECK(value_of(r.mul(r.from_u64(16), r.from_u64(16))) == 1);
    CHECK(value_of(r.mul(r.from_u64(5), r.from_u64(7))) == 35 % 17);
    CHECK(value_of(r.mul_pow2(r.from_u64(5), 4)) == 12);
    CHECK(value_of(r.mul_pow2(r.from_u64(5), 0)) == 5);
    CHECK(value_of(r.mul_pow2(r.from_u64(1), 8)) == 1);
    CHECK(value_of(r.from_u64(16)) == 16);  // 2^K is a legal canonical value
    CHECK(value_of(r.from_u64(17)) == 0);

    const auto ctx = build_fermat_root_context(4, 3);
    CHECK(value_of(ctx.root(1, 1)) == 16);
    CHECK(value_of(ctx.root(3, 1)) == 2);
    CHECK(value_of(ctx.inv2()) == 9);
    CHECK(value_of(r.mul(r.from_u64(2), ctx.inv2())) == 1);
}

TEST_CASE("small-K arithmetic matches direct modular arithmetic exhaustively") {
    for (std::uint64_t k : {1, 2, 3, 4, 5, 7}) {
        const FermatRing r(k);
        const std::uint64_t m = (std::uint64_t{1} << k) + 1;
        for (std::uint64_t x = 0; x < m; ++x) {
            for (std::uint64_t y = 0; y < m; ++y) {
                const auto ex = r.from_u64(x);
                const auto ey = r.from_u64(y);
                REQUIRE(value_of(r.add(ex, ey)) == (x + y) % m);
                REQUIRE(value_of(r.sub(ex, ey)) == (x + m - y) % m);
                REQUIRE(value_of(r.mul(ex, ey)) == (x * y) % m);
            }
            for (std::int64_t e = -2 * static_cast<std::int64_t>(k); e < 4 * static_cast<std::int64_t>(k); ++e) {
                const std::uint64_t ee = static_cast<std::uint64_t>(((e % (2 * static_cast<std::int64_t>(k))) +
                                                                     2 * static_cast<std::int64_t>(k)) %
                                                                    (2 * static_cast<std::int64_t>(k)));
                std::uint64_t expect = x % m;
                for (std::uint64_t i = 0; i < ee; ++i) {
                    expect = expect * 2 % m;
                }
                REQUIRE(value_of(r.mul_pow2(r.from_u64(x), e)) == expect);
            }
        }
    }
}

TEST_CASE("mul_pow2 equals multiplication by the power of two") {
    std::mt19937_64 rng(7);
    for (std::uint64_t k : {4, 8, 16, 63, 64, 65, 128, 200}) {
        const FermatRing r(k);
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = testing::random_fermat(r, rng);
            for (std::int64_t e = 0; e < 4 * static_cast<std::int64_t>(k); e += (k > 64 ? 7 : 1)) {
                const auto pow2 = r.from_limbs(
                    testing::from_big(BigInt(1) << static_cast<unsigned>(e % (2 * static_cast<std::int64_t>(k)))));
                REQUIRE(r.mul_pow2(x, e) == r.mul(x, pow2));
            }
        }
    }
}

TEST_CASE("large-K arithmetic matches an arbitrary-precision oracle") {
    std::mt19937_64 rng(8);
    for (std::uint64_t k : {60, 64, 100, 128, 448, 1024}) {
        const FermatRing r(k);
        const BigInt m = modulus(k);
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = testing::random_fermat(r, rng);
            const auto y = testing::random_fermat(r, rng);
            const BigInt bx = big_of(r, x);
            const BigInt by = big_of(r, y);
            REQUIRE(bx <= m - 1);
            REQUIRE(big_of(r, r.add(x, y)) == (bx + by) % m);
            REQUIRE(big_of(r, r.sub(x, y)) == (bx + m - by) % m);
            REQUIRE(big_of(r, r.mul(x, y)) == (bx * by) % m);
            REQUIRE(big_of(r, r.neg(x)) == (m - bx) % m);
        }
        const auto minus_one = r.from_limbs(testing::from_big(m - 1));
        CHECK(big_of(r, r.mul(minus_one, minus_one)) == 1);
        CHECK(big_of(r, r.add(minus_one, r.one())) == 0);
    }
}

TEST_CASE("from_limbs reduces arbitrary magnitudes") {
    std::mt19937_64 rng(9);
    for (std::uint64_t k : {5, 64, 130}) {
        const FermatRing r(k);
        for (int trial = 0; trial < 100; ++trial) {
            limbs::Limbs raw(1 + trial % 9);
            for (auto &l : raw) {
                l = rng();
            }
            REQUIRE(big_of(r, r.from_limbs(raw)) == testing::to_big(raw) % modulus(k));
        }
    }
}

TEST_CASE("mismatched K is a parameter error") {
    const FermatRing r4(4);
    const FermatRing r8(8);
    const auto a = r4.from_u64(3);
    const auto b = r8.from_u64(3);
    CHECK_THROWS_AS(r4.add(a, b), ParameterError);
    CHECK_THROWS_AS(r4.mul(a, b), ParameterError);
    CHECK_THROWS_AS(r8.sub(b, a), ParameterError);
    CHECK_THROWS_AS(r8.check(a), ParameterError);
    CHECK_NOTHROW(r4.check(a));
    CHECK_THROWS_AS(FermatRing(0), ParameterError);
}

TEST_CASE("fermat root context limits") {
    CHECK(max_depth(4) == 3);
    CHECK(max_depth(64) == 7);
    CHECK(max_depth(96) == 6);
    CHECK_THROWS_AS(build_fermat_root_context(4, 4), UnsupportedTransformSize);
    CHECK_NOTHROW(build_fermat_root_context(4, 3));
}
