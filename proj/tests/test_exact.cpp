#include "harmoniter/bigrational.hpp"
#include "harmoniter/errors.hpp"
#include "harmoniter/valuation.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace harmoniter;

namespace {

const std::vector<unsigned long> kSmallPrimes{2, 3, 5, 7, 11};

// Random nonzero rational with factors of the small primes mixed in so the
// valuations are not all zero.
BigRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> base(1, 5000);
    std::uniform_int_distribution<int> expo(0, 4);
    std::uniform_int_distribution<int> pick(0, 4);
    BigInt num(base(rng));
    BigInt den(base(rng));
    for (int i = 0; i < 3; ++i) {
        BigInt f;
        mpz_ui_pow_ui(f.get_mpz_t(), kSmallPrimes[static_cast<std::size_t>(pick(rng))],
                      static_cast<unsigned long>(expo(rng)));
        (i % 2 == 0 ? num : den) *= f;
    }
    if (rng() % 2 == 0) num = -num;
    return BigRational(num, den);
}

bool is_canonical(const BigRational& q) {
    BigInt g;
    const BigInt n = abs(q.num());
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), q.den_ref().get_mpz_t());
    return q.den() > 0 && g == 1 && (!q.is_zero() || q.den() == 1);
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rat_add examples") {
    CHECK(rat_add(BigRational(1, 2), BigRational(1, 3)) == BigRational(5, 6));
    const BigRational x(-7, 12);
    CHECK(rat_add(x, BigRational(0)) == x);
    CHECK(rat_add(BigRational(3, 2), BigRational(1, 3)) == BigRational(11, 6));
    CHECK(rat_add(BigRational(3, 2), BigRational(1, 3)).to_string() == "11/6");
}

TEST_CASE("canonical form") {
    const BigRational q(BigInt(10), BigInt(-112));
    CHECK(q.num() == -5);
    CHECK(q.den() == 56);
    CHECK(BigRational(0).to_string() == "0/1");
    CHECK(BigRational(BigInt(0), BigInt(-9)).to_string() == "0/1");
    CHECK(BigRational(7).to_string() == "7/1");
    CHECK_THROWS_AS(BigRational(1, 0), DomainError);
    CHECK_THROWS_AS(BigRational(1, 2) / BigRational(0), DomainError);
    CHECK_THROWS_AS(BigRational(0).reciprocal(), DomainError);
}

TEST_CASE("parse and print") {
    CHECK(BigRational::parse("137/60") == BigRational(137, 60));
    CHECK(BigRational::parse("-4/6") == BigRational(-2, 3));
    CHECK(BigRational::parse("12") == BigRational(12));
    CHECK_THROWS(BigRational::parse("1/-2"));
    CHECK_THROWS(BigRational::parse("1/"));
    CHECK_THROWS(BigRational::parse("a/2"));
    CHECK_THROWS(BigRational::parse("3/0"));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const BigRational q = random_rational(rng);
        CHECK(BigRational::parse(q.to_string()) == q);
    }
}

TEST_CASE("long double conversion") {
    CHECK(BigRational(1, 3).to_long_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(BigRational(-137, 60).to_long_double() == doctest::Approx(-137.0 / 60.0).epsilon(1e-15));
    CHECK(BigRational(BigInt("1000000000000000000000000"), BigInt(3)).to_long_double() ==
          doctest::Approx(1e24 / 3).epsilon(1e-15));
    CHECK(BigRational(0).to_long_double() == 0.0L);
}

TEST_CASE("valuation examples") {
    CHECK(valuation(BigRational(8), 2).exponent() == 3);
    CHECK(valuation(BigRational(BigInt(10), BigInt(112)), 2).exponent() == -3);
    CHECK(valuation(BigRational(1, 8), 2).exponent() == -3);
    CHECK(valuation(BigRational(-5, 8), 2).exponent() == -3);
    CHECK(valuation(BigRational(-5, 56), 2).exponent() == -3);
    const PAdicValuation zero = valuation(BigRational(0), 5);
    CHECK(zero.is_neg_infinity());
    CHECK_FALSE(zero.finite().has_value());
    CHECK(zero.to_string() == "-inf");
    CHECK_THROWS_AS(zero.exponent(), DomainError);
}

TEST_CASE("valuation rejects composite p") {
    CHECK_THROWS_AS(valuation(BigRational(8), 4), NotPrime);
    CHECK_THROWS_AS(valuation(BigRational(8), 1), NotPrime);
    CHECK_THROWS_AS(valuation(BigRational(8), 0), NotPrime);
    CHECK_THROWS_AS(valuation(BigRational(8), 91), NotPrime);
    CHECK(is_prime(2));
    CHECK(is_prime(199));
    CHECK_FALSE(is_prime(221));
}

TEST_CASE("valuation_of_sum_via_min") {
    const std::vector<BigRational> a{BigRational(1, 2), BigRational(1, 3), BigRational(1, 4)};
    CHECK(valuation_of_sum_via_min(a, 2) == -2);
    CHECK(valuation(BigRational(13, 12), 2).exponent() == -2);

    const std::vector<BigRational> tie{BigRational(1, 2), BigRational(1, 2)};
    CHECK_FALSE(valuation_of_sum_via_min(tie, 2).has_value());

    const std::vector<BigRational> h5{BigRational(1), BigRational(1, 2), BigRational(1, 3),
                                      BigRational(1, 4), BigRational(1, 5)};
    CHECK(valuation_of_sum_via_min(h5, 2) == -2);
    CHECK(valuation(BigRational(137, 60), 2).exponent() == -2);

    CHECK_THROWS_AS(valuation_of_sum_via_min(std::vector<BigRational>{}, 2), EmptyInput);
    CHECK_THROWS_AS(valuation_of_sum_via_min(a, 6), NotPrime);
    const std::vector<BigRational> with_zero{BigRational(1, 2), BigRational(0)};
    CHECK_THROWS_AS(valuation_of_sum_via_min(with_zero, 2), DomainError);
}

TEST_CASE("strong triangle equality on random pairs") {
    std::mt19937_64 rng(20240601);
    int exercised = 0;
    for (int i = 0; i < 2000; ++i) {
        const BigRational x = random_rational(rng);
        const BigRational y = random_rational(rng);
        for (unsigned long p : kSmallPrimes) {
            const long vx = valuation(x, p).exponent();
            const long vy = valuation(y, p).exponent();
            if (vx == vy) continue;
            ++exercised;
            CHECK(valuation(x + y, p).exponent() == std::min(vx, vy));
        }
    }
    CHECK(exercised > 1000);
}

TEST_CASE("valuation is additive on products") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 1000; ++i) {
        const BigRational x = random_rational(rng);
        const BigRational y = random_rational(rng);
        for (unsigned long p : kSmallPrimes) {
            CHECK(valuation(x * y, p).exponent() ==
                  valuation(x, p).exponent() + valuation(y, p).exponent());
        }
    }
}

TEST_CASE("valuation ignores common factors") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> kd(1, 10000);
    for (int i = 0; i < 500; ++i) {
        const BigRational q = random_rational(rng);
        const BigInt k(kd(rng) * (rng() % 2 == 0 ? 1 : -1));
        const BigRational scaled(q.num() * k, q.den() * k);
        for (unsigned long p : kSmallPrimes) {
            CHECK(valuation(scaled, p) == valuation(q, p));
        }
    }
}

TEST_CASE("reduced form survives operation chains") {
    std::mt19937_64 rng(99);
    BigRational acc(1);
    for (int i = 0; i < 300; ++i) {
        const BigRational x = random_rational(rng);
        switch (i % 4) {
            case 0: acc += x; break;
            case 1: acc -= x; break;
            case 2: acc *= x; break;
            default: acc /= x; break;
        }
        REQUIRE(is_canonical(acc));
        if (acc.is_zero()) acc = BigRational(1);
    }
}

TEST_CASE("denominator valuation") {
    CHECK(denominator_valuation(BigRational(137, 60), 2) == 2);
    CHECK(denominator_valuation(BigRational(8), 2) == 0);
    CHECK(denominator_valuation(BigRational(0), 3) == 0);
}

}  // TEST_SUITE
