#include <doctest.h>

#include "polymul/ring.hpp"

#include <random>
#include <stdexcept>

using namespace polymul;

namespace {
using u128 = unsigned __int128;
}

TEST_CASE("ring rejects moduli below 2") {
    CHECK_THROWS_AS(Ring(0), std::invalid_argument);
    CHECK_THROWS_AS(Ring(1), std::invalid_argument);
    CHECK_NOTHROW(Ring(2));
}

TEST_CASE("ring operations match integer arithmetic exhaustively for small moduli") {
    for (std::uint64_t m = 2; m <= 11; ++m) {
        Ring R(m);
        OpCounter ops;
        for (std::uint64_t a = 0; a < m; ++a) {
            for (std::uint64_t b = 0; b < m; ++b) {
                CHECK(R.add(Coeff{a}, Coeff{b}, ops).v == (a + b) % m);
                CHECK(R.sub(Coeff{a}, Coeff{b}, ops).v == (a + m - b) % m);
                CHECK(R.mul(Coeff{a}, Coeff{b}, ops).v == (a * b) % m);
            }
            CHECK(R.neg(Coeff{a}, ops).v == (m - a) % m);
        }
    }
}

TEST_CASE("ring operations survive extreme 64-bit moduli") {
    const std::uint64_t m = 0xffffffffffffffc5ULL; // largest 64-bit prime
    Ring R(m);
    OpCounter ops;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = rng() % m;
        const std::uint64_t b = rng() % m;
        const std::uint64_t want_add = static_cast<std::uint64_t>((u128(a) + b) % m);
        const std::uint64_t want_sub = static_cast<std::uint64_t>((u128(a) + m - b) % m);
        const std::uint64_t want_mul = static_cast<std::uint64_t>(u128(a) * b % m);
        CHECK(R.add(Coeff{a}, Coeff{b}, ops).v == want_add);
        CHECK(R.sub(Coeff{a}, Coeff{b}, ops).v == want_sub);
        CHECK(R.mul(Coeff{a}, Coeff{b}, ops).v == want_mul);
    }
    // The wrap case a + b >= 2^64 specifically.
    CHECK(R.add(Coeff{m - 1}, Coeff{m - 1}, ops).v == m - 2);
}

TEST_CASE("counters meter exactly the algebraic operations") {
    Ring R(97);
    OpCounter ops;
    CHECK(ops.total() == 0);
    (void)R.add(Coeff{1}, Coeff{2}, ops);
    (void)R.sub(Coeff{5}, Coeff{9}, ops);
    (void)R.neg(Coeff{5}, ops);
    CHECK(ops.adds == 3);
    CHECK(ops.muls == 0);
    (void)R.mul(Coeff{10}, Coeff{10}, ops);
    CHECK(ops.muls == 1);
    CHECK(ops.total() == 4);

    // Non-algebraic helpers stay free.
    (void)R.zero();
    (void)R.one();
    (void)R.is_zero(Coeff{0});
    (void)R.reduce(12345);
    CHECK(ops.total() == 4);

    OpCounter other;
    other.muls = 2;
    other.adds = 5;
    OpCounter sum = ops;
    sum += other;
    CHECK(sum.muls == 3);
    CHECK(sum.adds == 8);
    CHECK((sum - ops) == other);
}

TEST_CASE("ring identities hold for assorted moduli") {
    for (std::uint64_t m : {2ULL, 7ULL, 97ULL, 998244353ULL}) {
        Ring R(m);
        OpCounter ops;
        CHECK(R.one().v == (m == 1 ? 0 : 1 % m));
        std::mt19937_64 rng(m);
        for (int i = 0; i < 200; ++i) {
            Coeff a = R.reduce(rng());
            Coeff b = R.reduce(rng());
            Coeff c = R.reduce(rng());
            // commutativity / associativity / distributivity
            CHECK(R.add(a, b, ops) == R.add(b, a, ops));
            CHECK(R.mul(a, b, ops) == R.mul(b, a, ops));
            CHECK(R.add(R.add(a, b, ops), c, ops) == R.add(a, R.add(b, c, ops), ops));
            CHECK(R.mul(R.mul(a, b, ops), c, ops) == R.mul(a, R.mul(b, c, ops), ops));
            CHECK(R.mul(a, R.add(b, c, ops), ops) ==
                  R.add(R.mul(a, b, ops), R.mul(a, c, ops), ops));
            // inverses of the additive group
            CHECK(R.add(a, R.neg(a, ops), ops) == R.zero());
            CHECK(R.sub(a, b, ops) == R.add(a, R.neg(b, ops), ops));
            // identities
            CHECK(R.mul(a, R.one(), ops) == a);
            CHECK(R.add(a, R.zero(), ops) == a);
        }
    }
}
