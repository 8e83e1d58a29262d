#include <doctest.h>

#include "polymul/baseline.hpp"
#include "polymul/inplace.hpp"
#include "polymul/oracle.hpp"
#include "test_util.hpp"

#include <random>
#include <vector>

using namespace polymul;
using testutil::expected_output;
using testutil::random_poly;

namespace {

InputView view_of(const std::vector<Coeff>& v) { return InputView::whole(v.data(), v.size()); }

std::vector<std::uint64_t> values(const std::vector<Coeff>& v) {
    std::vector<std::uint64_t> r;
    for (auto c : v) r.push_back(c.v);
    return r;
}

struct SpBases {
    AlgoProfile lo;
    AlgoProfile hi;
};

SpBases naive_sp_bases() { return {make_naive_sp_lo_profile(), make_naive_sp_hi_profile()}; }

SpBases karatsuba_sp_bases() {
    const AlgoProfile fp = make_karatsuba_profile();
    return {derive_osp_lo(fp), derive_osp_hi(fp)};
}

// Structural invariants every shrink trace must satisfy: strictly decreasing
// sizes, the recorded tile matching the published formula, each next size
// equal to n - k, and the terminal size below the threshold.
void check_trace_shape(const LevelTrace& t, std::size_t n0, const Rat& c,
                       std::size_t (*block)(std::size_t, const Rat&)) {
    const std::size_t stop = inplace_threshold(c);
    std::size_t expect = n0;
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        const LevelRecord& l = t.levels[i];
        CHECK(l.n == expect);
        CHECK(l.n >= stop);
        CHECK(l.k == block(l.n, c));
        CHECK(l.k >= 1);
        expect = l.n - l.k;
    }
    CHECK(t.base_n == expect);
    CHECK(t.base_n < stop);
}

} // namespace

TEST_CASE("tile-size and threshold formulas") {
    CHECK(inplace_threshold(Rat(0)) == 2);
    CHECK(inplace_threshold(Rat(2)) == 4);
    CHECK(inplace_threshold(Rat(5, 2)) == 5); // ceil(5/2) = 3
    CHECK(inplace_threshold(Rat(7)) == 9);

    CHECK(ifp_block_size(10, Rat(2)) == 2);  // floor(11/5)
    CHECK(ifp_block_size(10, Rat(0)) == 3);  // floor(11/3)
    CHECK(ifp_block_size(4, Rat(2)) == 1);
    CHECK(isp_block_size(10, Rat(2)) == 2);  // floor(10/4)
    CHECK(isp_block_size(10, Rat(0)) == 5);
    CHECK(imp_block_size(10, Rat(2)) == 2);
    CHECK(imp_block_size(9, Rat(7)) == 1);   // floor(9/9)
}

TEST_CASE("in-place low short product reproduces the frozen example") {
    Ring R(998244353);
    std::vector<Coeff> f{{1}, {2}, {3}, {4}};
    std::vector<Coeff> g{{5}, {6}, {7}, {8}};
    std::vector<Coeff> out{{90}, {91}, {92}, {93}}; // garbage, no workspace
    OpCounter ops;
    const SpBases b = naive_sp_bases();
    in_place_sp_lo(R, b.lo, b.hi, view_of(f), view_of(g), OutputSpan(out.data(), 4), ops);
    CHECK(values(out) == std::vector<std::uint64_t>{5, 16, 34, 60});
}

TEST_CASE("in-place full products match the oracle and leave inputs untouched") {
    std::mt19937_64 rng(211);
    const std::uint64_t mod = 998244353;
    Ring R(mod);
    for (bool kara : {false, true}) {
        const AlgoProfile fp = kara ? make_karatsuba_profile() : make_naive_fp_profile();
        for (std::size_t n = 1; n <= 32; ++n) {
            const auto f = random_poly(rng, n, mod);
            const auto g = random_poly(rng, n, mod);
            const auto f_before = f;
            const auto g_before = g;

            auto low = random_poly(rng, 2 * n - 1, mod);
            auto want_low = expected_output(ProductKind::FPlusLo, view_of(f), view_of(g), low, mod);
            OpCounter o1;
            in_place_fp_low(R, fp, view_of(f), view_of(g), OutputSpan(low.data(), low.size()), o1);
            CHECK(low == want_low);

            auto high = random_poly(rng, 2 * n - 1, mod);
            auto want_high = expected_output(ProductKind::FPlusHi, view_of(f), view_of(g), high, mod);
            OpCounter o2;
            in_place_fp_high(R, fp, view_of(f), view_of(g), OutputSpan(high.data(), high.size()), o2);
            CHECK(high == want_high);

            auto full = random_poly(rng, 2 * n - 1, mod);
            OpCounter o3;
            in_place_fp_full(R, fp, view_of(f), view_of(g), OutputSpan(full.data(), full.size()), o3);
            CHECK(full == toeplitz_oracle(ProductKind::FP, view_of(f), view_of(g), mod));

            CHECK(f == f_before);
            CHECK(g == g_before);
        }
    }
}

TEST_CASE("in-place short products match the oracle and leave inputs untouched") {
    std::mt19937_64 rng(223);
    const std::uint64_t mod = 998244353;
    Ring R(mod);
    for (bool kara : {false, true}) {
        const SpBases b = kara ? karatsuba_sp_bases() : naive_sp_bases();
        for (std::size_t n = 1; n <= 32; ++n) {
            const auto f = random_poly(rng, n, mod);
            const auto g = random_poly(rng, n, mod);
            const auto f_before = f;
            const auto g_before = g;

            auto lo = random_poly(rng, n, mod);
            OpCounter o1;
            in_place_sp_lo(R, b.lo, b.hi, view_of(f), view_of(g), OutputSpan(lo.data(), n), o1);
            CHECK(lo == toeplitz_oracle(ProductKind::SPlo, view_of(f), view_of(g), mod));

            if (n >= 2) {
                auto hi = random_poly(rng, n - 1, mod);
                OpCounter o2;
                in_place_sp_hi(R, b.lo, b.hi, view_of(f), view_of(g), OutputSpan(hi.data(), n - 1), o2);
                CHECK(hi == toeplitz_oracle(ProductKind::SPhi, view_of(f), view_of(g), mod));
            }

            CHECK(f == f_before);
            CHECK(g == g_before);
        }
    }
}

TEST_CASE("in-place middle product covers balanced and unbalanced shapes") {
    std::mt19937_64 rng(227);
    const std::uint64_t mod = 998244353;
    Ring R(mod);
    for (bool kara : {false, true}) {
        const AlgoProfile mp = kara ? derive_omp(make_karatsuba_profile()) : make_naive_mp_profile();
        auto run_one = [&](std::size_t n, std::size_t m) {
            const auto f = random_poly(rng, n + m - 1, mod);
            const auto g = random_poly(rng, n, mod);
            const auto f_before = f;
            auto out = random_poly(rng, m, mod);
            OpCounter ops;
            in_place_mp(R, mp, view_of(f), view_of(g), OutputSpan(out.data(), m), ops);
            CHECK(out == toeplitz_oracle(ProductKind::MP, view_of(f), view_of(g), mod));
            CHECK(f == f_before);
        };
        for (std::size_t n = 1; n <= 32; ++n) run_one(n, n);
        run_one(5, 13);
        run_one(13, 5);
        run_one(1, 7);
        run_one(7, 1);
    }
}

TEST_CASE("shrink traces account for every operation and follow the tile formulas") {
    std::mt19937_64 rng(229);
    const std::uint64_t mod = 998244353;
    Ring R(mod);

    SUBCASE("full product core") {
        for (bool kara : {false, true}) {
            const AlgoProfile fp = kara ? make_karatsuba_profile() : make_naive_fp_profile();
            for (std::size_t n : {std::size_t{5}, std::size_t{17}, std::size_t{64}}) {
                auto f = random_poly(rng, n, mod);
                auto g = random_poly(rng, n, mod);
                auto out = random_poly(rng, 2 * n - 1, mod);
                OpCounter ops;
                LevelTrace trace;
                in_place_fp_low(R, fp, view_of(f), view_of(g), OutputSpan(out.data(), out.size()),
                                ops, &trace);
                CHECK(trace.total() == ops);
                check_trace_shape(trace, n, fp.declared_c, &ifp_block_size);
            }
        }
    }

    SUBCASE("short product core") {
        for (bool kara : {false, true}) {
            const SpBases b = kara ? karatsuba_sp_bases() : naive_sp_bases();
            const Rat c = b.lo.declared_c > b.hi.declared_c ? b.lo.declared_c : b.hi.declared_c;
            for (std::size_t n : {std::size_t{7}, std::size_t{33}, std::size_t{64}}) {
                auto f = random_poly(rng, n, mod);
                auto g = random_poly(rng, n, mod);
                auto out = random_poly(rng, n, mod);
                OpCounter ops;
                LevelTrace trace;
                in_place_sp_lo(R, b.lo, b.hi, view_of(f), view_of(g), OutputSpan(out.data(), n),
                               ops, &trace);
                CHECK(trace.total() == ops);
                check_trace_shape(trace, n, c, &isp_block_size);
            }
        }
    }

    SUBCASE("middle product core") {
        for (bool kara : {false, true}) {
            const AlgoProfile mp = kara ? derive_omp(make_karatsuba_profile()) : make_naive_mp_profile();
            for (std::size_t n : {std::size_t{9}, std::size_t{40}, std::size_t{64}}) {
                auto f = random_poly(rng, 2 * n - 1, mod);
                auto g = random_poly(rng, n, mod);
                auto out = random_poly(rng, n, mod);
                OpCounter ops;
                LevelTrace trace;
                in_place_mp(R, mp, view_of(f), view_of(g), OutputSpan(out.data(), n), ops, &trace);
                CHECK(trace.total() == ops);
                check_trace_shape(trace, n, mp.declared_c, &imp_block_size);
            }
        }
    }
}

TEST_CASE("each fault hook corrupts its product and resets cleanly") {
    std::mt19937_64 rng(233);
    const std::uint64_t mod = 998244353;
    Ring R(mod);
    const std::size_t n = 16;
    const auto f = random_poly(rng, n, mod);
    const auto g = random_poly(rng, n, mod);
    const auto fm = random_poly(rng, 2 * n - 1, mod);

    g_fault = FaultInjection{};

    SUBCASE("second unbalanced add offset") {
        const AlgoProfile fp = make_naive_fp_profile();
        const auto want = toeplitz_oracle(ProductKind::FP, view_of(f), view_of(g), mod);
        for (long long shift : {1LL, -1LL}) {
            g_fault.fp_second_offset_shift = shift;
            std::vector<Coeff> out(2 * n - 1, Coeff{0});
            OpCounter ops;
            in_place_fp_full(R, fp, view_of(f), view_of(g), OutputSpan(out.data(), out.size()), ops);
            CHECK(out != want);
            g_fault = FaultInjection{};
        }
        std::vector<Coeff> out(2 * n - 1, Coeff{0});
        OpCounter ops;
        in_place_fp_full(R, fp, view_of(f), view_of(g), OutputSpan(out.data(), out.size()), ops);
        CHECK(out == want);
    }

    SUBCASE("short-product slice window") {
        const SpBases b = naive_sp_bases();
        const auto want = toeplitz_oracle(ProductKind::SPlo, view_of(f), view_of(g), mod);
        for (long long shift : {1LL, -1LL}) {
            g_fault.sp_slice_shift = shift;
            std::vector<Coeff> out(n, Coeff{0});
            OpCounter ops;
            in_place_sp_lo(R, b.lo, b.hi, view_of(f), view_of(g), OutputSpan(out.data(), n), ops);
            CHECK(out != want);
            g_fault = FaultInjection{};
        }
        std::vector<Coeff> out(n, Coeff{0});
        OpCounter ops;
        in_place_sp_lo(R, b.lo, b.hi, view_of(f), view_of(g), OutputSpan(out.data(), n), ops);
        CHECK(out == want);
    }

    SUBCASE("middle-product block window") {
        const AlgoProfile mp = make_naive_mp_profile();
        const auto want = toeplitz_oracle(ProductKind::MP, view_of(fm), view_of(g), mod);
        for (long long shift : {1LL, -1LL}) {
            g_fault.mp_block_shift = shift;
            std::vector<Coeff> out(n, Coeff{0});
            OpCounter ops;
            in_place_mp(R, mp, view_of(fm), view_of(g), OutputSpan(out.data(), n), ops);
            CHECK(out != want);
            g_fault = FaultInjection{};
        }
        std::vector<Coeff> out(n, Coeff{0});
        OpCounter ops;
        in_place_mp(R, mp, view_of(fm), view_of(g), OutputSpan(out.data(), n), ops);
        CHECK(out == want);
    }
}
