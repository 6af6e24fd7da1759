#include "harmoniter/errors.hpp"
#include "harmoniter/harmonic.hpp"
#include "harmoniter/valuation.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace harmoniter;

TEST_SUITE("harmonic") {

TEST_CASE("stream advance examples") {
    HarmonicStream one(1);
    one = h_stream_advance(one);
    CHECK(one.index() == 2);
    CHECK(one.value() == BigRational(3, 2));

    HarmonicStream two(2);
    two.advance();
    two.advance();
    CHECK(two.index() == 3);
    CHECK(two.level(1) == BigRational(11, 6));
    CHECK(two.level(2) == BigRational(50, 33));

    HarmonicStream three(3);
    three.advance();
    CHECK(three.value() == BigRational(5, 4));
    CHECK(denominator_valuation(three.value(), 2) == 2);
}

TEST_CASE("h_j(1) = 1") {
    for (int j = 1; j <= 6; ++j) CHECK(h_eval(j, 1) == BigRational(1));
}

TEST_CASE("h_eval examples") {
    CHECK(h_eval(1, 4) == BigRational(25, 12));
    CHECK(h_eval(2, 1) == BigRational(1));
    const BigRational h5 = h_eval(1, 5);
    CHECK(h5 == BigRational(137, 60));
    CHECK(h5.to_double() - std::log(5.0) == doctest::Approx(0.674).epsilon(1e-3));
    CHECK_THROWS_AS(h_eval(0, 3), DomainError);
    CHECK_THROWS_AS(h_eval(1, 0), DomainError);
}

TEST_CASE("binary splitting matches term-by-term harmonic sums") {
    for (std::uint64_t n : {1ULL, 2ULL, 7ULL, 8ULL, 9ULL, 63ULL, 64ULL, 65ULL, 500ULL}) {
        CHECK(harmonic_number(n) == oracle::plain_harmonic(n));
    }
    CHECK(harmonic_number(0) == BigRational(0));
}

TEST_CASE("streaming equals naive recomputation for j <= 4, n <= 50") {
    const auto table = oracle::naive_iterated(4, 50);
    for (int j = 1; j <= 4; ++j) {
        HarmonicStream s(j);
        for (std::uint64_t n = 1; n <= 50; ++n) {
            s.advance_to(n);
            for (int m = 1; m <= j; ++m) {
                REQUIRE(s.level(m) == table[static_cast<std::size_t>(m - 1)][n]);
            }
        }
    }
}

TEST_CASE("strict monotonicity in n") {
    for (int j = 1; j <= 4; ++j) {
        HarmonicStream s(j);
        BigRational previous = s.value();
        while (s.index() < (j <= 2 ? 500U : j == 3 ? 200U : 80U)) {
            s.advance();
            REQUIRE(s.value() > previous);
            previous = s.value();
        }
    }
}

TEST_CASE("divergence ordering h_1 > h_2 > h_3 for n >= 2") {
    HarmonicStream s(3);
    while (s.index() < 150) {
        s.advance();
        REQUIRE(s.level(1) > s.level(2));
        REQUIRE(s.level(2) > s.level(3));
    }
}

TEST_CASE("bit budget") {
    HarmonicStream s(3, 2000);
    CHECK_THROWS_AS(s.advance_to(100), ResourceLimit);
    const std::uint64_t stuck = s.index();
    const auto levels = s.levels();
    CHECK_THROWS_AS(s.advance(), ResourceLimit);
    CHECK(s.index() == stuck);
    CHECK(s.levels() == levels);
    CHECK(s.stored_bits() <= 2000);
    CHECK_THROWS_AS(h_eval(1, 5000, 100), ResourceLimit);
}

TEST_CASE("restore") {
    HarmonicStream s(2);
    s.advance_to(17);
    HarmonicStream r = HarmonicStream::restore(2, 17, s.levels());
    r.advance();
    s.advance();
    CHECK(r.levels() == s.levels());
    CHECK_THROWS_AS(HarmonicStream::restore(3, 17, s.levels()), DomainError);
    CHECK_THROWS_AS(HarmonicStream::restore(1, 3, {BigRational(1, 2)}), DomainError);
}

TEST_CASE("float stream tracks the exact stream") {
    for (int j = 1; j <= 3; ++j) {
        HarmonicStream exact(j);
        FloatHarmonicStream approx(j);
        const std::uint64_t n = j == 3 ? 100 : 400;
        exact.advance_to(n);
        approx.advance_to(n);
        for (int m = 1; m <= j; ++m) {
            CHECK(approx.level(m) == doctest::Approx(exact.level(m).to_double()).epsilon(1e-14));
        }
    }
}

TEST_CASE("hyperharmonic examples") {
    CHECK(hyperharmonic(1, 3) == BigRational(11, 6));
    CHECK(hyperharmonic(2, 3) == BigRational(13, 3));
    CHECK(hyperharmonic(3, 1) == BigRational(1));
    CHECK_THROWS_AS(hyperharmonic(0, 3), DomainError);
}

TEST_CASE("hyperharmonic DP agrees with the literal recursion and the closed form") {
    for (int k = 1; k <= 4; ++k) {
        for (std::uint64_t n = 1; n <= (k == 4 ? 25U : 50U); ++n) {
            REQUIRE(hyperharmonic(k, n) == oracle::hyperharmonic_recursive(k, n));
        }
        for (std::uint64_t n = 1; n <= 50; ++n) {
            REQUIRE(hyperharmonic(k, n) == oracle::hyperharmonic_closed_form(k, n));
        }
    }
}

TEST_CASE("H_n^(2) = (n+1) h_1(n+1) - (n+1)") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        const BigRational m{BigInt(n + 1)};
        REQUIRE(hyperharmonic(2, n) == m * oracle::plain_harmonic(n + 1) - m);
    }
}

TEST_CASE("Cesaro means") {
    const auto alternating = [](std::uint64_t i) { return BigRational(i % 2 == 1 ? 1 : -1); };
    CHECK(cesaro_sum(alternating, 1, 1000) == BigRational(1, 2));
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        REQUIRE(cesaro_sum(alternating, 1, n) == BigRational(BigInt((n + 1) / 2), BigInt(n)));
    }

    const auto geometric = [](std::uint64_t i) {
        BigInt d;
        mpz_ui_pow_ui(d.get_mpz_t(), 2, i);
        return BigRational(BigInt(1), d);
    };
    CHECK(cesaro_sum(geometric, 0, 10) == BigRational(1023, 1024));

    CHECK_THROWS_AS(cesaro_sum(alternating, 3, 10), UnsupportedOrder);
    CHECK_THROWS_AS(cesaro_sum(alternating, -1, 10), UnsupportedOrder);
}

TEST_CASE("Cesaro tower against binomial-weight brute force") {
    const auto series = [](std::uint64_t i) {
        return BigRational(static_cast<long>(i % 2 == 1 ? i : 0) - static_cast<long>(i % 2 == 0 ? i : 0));
    };
    const CesaroTower tower(series, 3, 120);
    for (std::uint64_t n = 1; n <= 120; ++n) {
        for (int m = 1; m <= 3; ++m) {
            REQUIRE(tower.at(m, n) == oracle::iterated_partial_sum(series, m, n));
        }
    }
    CHECK_THROWS_AS(tower.at(4, 1), DomainError);
    CHECK_THROWS_AS(tower.at(1, 121), DomainError);
}

TEST_CASE("1 - 2 + 3 - 4 ... is (C,2) summable to 1/4") {
    const auto series = [](std::uint64_t i) {
        const long v = static_cast<long>(i);
        return BigRational(i % 2 == 1 ? v : -v);
    };
    const BigRational quarter(1, 4);
    const auto gap = [&](std::uint64_t n) {
        const BigRational d = cesaro_sum(series, 2, n) - quarter;
        return d.sign() < 0 ? -d : d;
    };
    BigRational last = gap(10);
    for (std::uint64_t n : {100ULL, 1000ULL, 2000ULL}) {
        const BigRational g = gap(n);
        CHECK(g < last);
        last = g;
    }
    // Along each parity class the approach is monotone.
    for (std::uint64_t n = 4; n <= 300; ++n) REQUIRE(gap(n) < gap(n - 2));
    // Not (C,1) summable: the (C,1) means keep oscillating.
    CHECK(cesaro_sum(series, 1, 1000) != cesaro_sum(series, 1, 1001));
}

TEST_CASE("concavity") {
    CHECK(concavity_check(1, 100).empty());
    CHECK(concavity_check(2, 100).empty());
    CHECK(concavity_check(3, 100).empty());
    CHECK_THROWS_AS(concavity_check(1, 2), DomainError);
}

}  // TEST_SUITE
