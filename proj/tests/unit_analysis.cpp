#include <doctest.h>

#include "polymul/analysis.hpp"
#include "polymul/rat.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

using namespace polymul;

namespace {

long double rel_err(long double got, long double want) {
    return std::fabs(got - want) / std::fabs(want);
}

} // namespace

TEST_CASE("rationals normalize and compare exactly") {
    CHECK(Rat(3, 6) == Rat(1, 2));
    CHECK(Rat(-3, 6) == Rat(-1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(0, 5) == Rat(0));

    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));

    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(1, 2) <= Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(5, 2) > Rat(2));
    CHECK(Rat(5, 2) >= Rat(5, 2));

    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-3, 2).floor() == -2);
    CHECK(Rat(-3, 2).ceil() == -1);
    CHECK(Rat(4).floor() == 4);
    CHECK(Rat(4).ceil() == 4);

    CHECK(Rat(1, 2).to_double() == doctest::Approx(0.5));

    CHECK(floor_affine(Rat(3, 4), 10, Rat(1, 2)) == 8);
    CHECK(floor_affine(Rat(1, 2), 7, Rat(0)) == 3);
    CHECK(ceil_mul(Rat(5, 2), 3) == 8);
    CHECK(ceil_mul(Rat(2), 6) == 12);
    CHECK(ceil_mul(Rat(0), 9) == 0);
}

TEST_CASE("recurrence unrolling: halving with unit costs") {
    Recurrence rec;
    rec.alpha = Rat(1, 2);
    rec.beta = Rat(0);
    rec.stop = 1;
    rec.level_cost = [](long long n) { return Rat(n); };
    rec.terminal_cost = [](long long n) { return Rat(n); };

    UnrollResult r = unroll(rec, 16);
    REQUIRE(r.levels.size() == 5);
    const long long expect[5] = {16, 8, 4, 2, 1};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(r.levels[i].n == expect[i]);
        CHECK(r.levels[i].cost == Rat(expect[i]));
    }
    CHECK(r.terminal_n == 0);
    CHECK(r.terminal_cost == Rat(0));
    CHECK(r.total == Rat(31));
}

TEST_CASE("recurrence unrolling rejects stalls") {
    Recurrence rec;
    rec.beta = Rat(1);
    rec.level_cost = [](long long) { return Rat(0); };
    rec.terminal_cost = [](long long) { return Rat(0); };

    rec.alpha = Rat(1); // alpha >= 1 can never shrink
    rec.stop = 10;
    CHECK_THROWS_AS(unroll(rec, 100), std::invalid_argument);

    rec.alpha = Rat(5, 4);
    CHECK_THROWS_AS(unroll(rec, 100), std::invalid_argument);

    // fixed point of n -> 3n/4 + 1 is 4: stopping at or below it stalls
    rec.alpha = Rat(3, 4);
    rec.stop = 4;
    CHECK_THROWS_AS(unroll(rec, 100), std::invalid_argument);
    rec.stop = 5;
    UnrollResult r = unroll(rec, 100);
    CHECK(r.levels.front().n == 100);
    CHECK(r.terminal_n < 5);
}

TEST_CASE("floored iterate stays within one of the closed-form sequence") {
    const long double alpha = 0.75L, beta = 1.0L;
    long long n = 1000;
    long double closed = 1000.0L;
    while (n >= 5) {
        n = floor_affine(Rat(3, 4), n, Rat(1));
        closed = alpha * closed + beta;
        CHECK(std::llabs(n - static_cast<long long>(std::floor(closed))) <= 1);
    }
}

TEST_CASE("shrink-step floor identities") {
    for (long long q : {2, 3, 4, 6, 9}) {
        const Rat alpha(q - 1, q);
        for (long long n = 1; n <= 2000; ++n)
            CHECK(n - n / q == floor_affine(alpha, n, alpha));
    }
    for (long long Q : {3, 5}) {
        const Rat alpha(Q - 1, Q), beta(Q - 2, Q);
        for (long long n = 1; n <= 2000; ++n)
            CHECK(n - (n + 1) / Q == floor_affine(alpha, n, beta));
    }
}

TEST_CASE("ratio predictors") {
    CHECK(predict_fp_ratio(Rat(0)) == Rat(7));
    CHECK(predict_fp_ratio(Rat(2)) == Rat(11));
    CHECK(predict_fp_ratio(Rat(5, 2)) == Rat(12));
    CHECK(predict_sp_ratio(Rat(0)) == Rat(5));
    CHECK(predict_sp_ratio(Rat(2)) == Rat(9));
    CHECK(predict_sp_ratio(Rat(4)) == Rat(13));
}

TEST_CASE("middle-product bound predictor, polynomial regime") {
    auto M = [](long double x) { return x * x; };

    MpBound b = predict_mp_bound(Rat(2), 100, M, false, 2.0L, 1.0L);
    CHECK(!b.quasi_linear);
    CHECK(rel_err(b.mu, 1.0L) < 1e-15L);
    CHECK(rel_err(b.nu, 1.0L / 7.0L) < 1e-15L);
    CHECK(rel_err(b.value, (8.0L / 7.0L) * 10000.0L) < 1e-12L);

    // lambda scales the bound linearly
    MpBound b2 = predict_mp_bound(Rat(2), 100, M, false, 2.0L, 2.5L);
    CHECK(rel_err(b2.value, 2.5L * b.value) < 1e-12L);

    // gamma = log2(3), c = 2: fixed reference constants
    const long double g = std::log(3.0L) / std::log(2.0L);
    MpBound bk = predict_mp_bound(Rat(2), 4096, M, false, g, 1.0L);
    CHECK(rel_err(bk.mu, 2.8695021985323934593L) < 1e-12L);
    CHECK(rel_err(bk.nu, 0.30344616171375469062L) < 1e-12L);
    CHECK(rel_err(bk.value, (bk.mu + bk.nu) * std::pow(4096.0L, g)) < 1e-12L);

    CHECK_THROWS_AS(predict_mp_bound(Rat(2), 64, M, false, 1.0L, 1.0L), std::invalid_argument);
    CHECK_THROWS_AS(predict_mp_bound(Rat(2), 64, M, false, 0.5L, 1.0L), std::invalid_argument);
}

TEST_CASE("middle-product bound predictor, quasi-linear regime") {
    auto M = [](long double x) { return x; };
    MpBound b = predict_mp_bound(Rat(2), 64, M, true, 0.0L, 0.0L);
    CHECK(b.quasi_linear);
    CHECK(rel_err(b.log_base, 4.0L / 3.0L) < 1e-15L);
    const long double want =
        64.0L * (std::log(64.0L) / std::log(4.0L / 3.0L) + 1.0L + 12.0L);
    CHECK(rel_err(b.value, want) < 1e-12L);
    CHECK(!b.note.empty());
    CHECK(b.note.find("reciprocal base") != std::string::npos);
}

TEST_CASE("summation lemmas verify on conforming sequences and catch violations") {
    auto M = [](long double x) { return x * x; };

    for (auto [alpha, beta] : {std::pair<long double, long double>{0.75L, 0.75L},
                               std::pair<long double, long double>{8.0L / 9.0L, 8.0L / 9.0L}}) {
        SumLemmaReport rep = check_sum_lemmas(alpha, beta, 4096, 10, M, 1.0L, 0.0L);
        REQUIRE(rep.checks.size() == 3);
        CHECK(rep.checks[0].name == "sum_linear");
        CHECK(rep.checks[1].name == "sum_reciprocal");
        CHECK(rep.checks[2].name == "sum_scaled_M");
        for (const auto& c : rep.checks) CHECK(c.pass);
        CHECK(rep.all_pass);
    }

    // lambda = 2 violates the scaled-M precondition (lambda*n_0 > n) and the
    // third bound genuinely fails, so the checker must report it.
    SumLemmaReport bad = check_sum_lemmas(0.5L, 0.0L, 100, 3, M, 2.0L, 0.0L);
    CHECK(!bad.all_pass);
    CHECK(!bad.checks[2].pass);
}

TEST_CASE("bound models reproduce the ratio constants exactly") {
    for (Rat c : {Rat(0), Rat(1), Rat(2), Rat(5, 2)}) {
        // full-product shape: one term a = 2c+7, lambda = 1/(c+3),
        // shrink alpha = (c+2)/(c+3)
        BoundModel fp;
        fp.terms = {{Rat(2) * c + Rat(7), Rat(1) / (c + Rat(3)), Rat(0)}};
        fp.alpha = (c + Rat(2)) / (c + Rat(3));
        fp.beta = (c + Rat(1)) / (c + Rat(3));
        CHECK(fp.leading_coefficient() == Rat(2) * c + Rat(7));

        // short-product shape: two terms (c+3) and (c+2), lambda = 1/(c+2),
        // shrink alpha = (c+1)/(c+2)
        BoundModel sp;
        sp.terms = {{c + Rat(3), Rat(1) / (c + Rat(2)), Rat(0)},
                    {c + Rat(2), Rat(1) / (c + Rat(2)), Rat(0)}};
        sp.alpha = (c + Rat(1)) / (c + Rat(2));
        sp.beta = Rat(0);
        CHECK(sp.leading_coefficient() == Rat(2) * c + Rat(5));
    }
}

TEST_CASE("bound model level evaluation") {
    BoundModel m;
    m.terms = {{Rat(1), Rat(1, 2), Rat(0)}, {Rat(3), Rat(1, 4), Rat(1)}};
    m.b = Rat(2);
    m.c = Rat(5);
    m.alpha = Rat(1, 2);
    m.beta = Rat(0);
    auto M = [](long double x) { return x * x; };
    // f(12) = M(6) + 3*M(4) + 2*12 + 5 = 36 + 48 + 29 = 113
    CHECK(rel_err(m.eval_level(12, M), 113.0L) < 1e-15L);
}
