#include "harmoniter/constants.hpp"
#include "harmoniter/errors.hpp"
#include "harmoniter/logiter.hpp"

#include <doctest.h>

#include <cmath>

using namespace harmoniter;

TEST_SUITE("constants") {

TEST_CASE("classic estimates at n = 5") {
    const GammaEstimate standard = gamma_classic(5, Method::standard);
    CHECK(standard.raw == doctest::Approx(0.6738954208992330).epsilon(1e-14));
    CHECK_FALSE(standard.corrected.has_value());
    CHECK(standard.value() == standard.raw);

    const GammaEstimate improved = gamma_classic(5, Method::improved);
    REQUIRE(improved.corrected.has_value());
    CHECK(*improved.corrected == doctest::Approx(0.5738954208992330).epsilon(1e-14));
    CHECK(*improved.corrected == doctest::Approx(improved.raw - 0.1));

    CHECK(gamma_classic(5, Method::minimal).raw == standard.raw);
    CHECK_THROWS_AS(gamma_classic(0, Method::standard), DomainError);
    CHECK_THROWS_AS(gamma_classic(5, Method::primed), DomainError);
}

TEST_CASE("improved method converges quadratically") {
    // |c(10n) - c(n)| shrinks by roughly 100 per decade.
    double previous_gap = 0.0;
    for (std::uint64_t n : {100ULL, 1000ULL, 10000ULL}) {
        const double gap = std::fabs(*gamma_classic(10 * n, Method::improved).corrected -
                                     *gamma_classic(n, Method::improved).corrected);
        if (previous_gap > 0.0) {
            const double shrink = previous_gap / gap;
            CHECK(shrink >= 50.0);
            CHECK(shrink <= 200.0);
        }
        previous_gap = gap;
    }
}

TEST_CASE("standard method converges linearly") {
    // Limit taken from the improved estimate at 10^6; the error left there is
    // ~1e-13, far below the 1/n gaps measured here.
    const double limit = *gamma_classic(1000000, Method::improved).corrected;
    double previous = 0.0;
    for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
        const double err = std::fabs(gamma_classic(n, Method::standard).raw - limit);
        if (previous > 0.0) {
            CHECK(previous / err >= 5.0);
            CHECK(previous / err <= 20.0);
        }
        previous = err;
    }
}

TEST_CASE("correction term") {
    CHECK(correction_term(1, 5) == doctest::Approx(0.1));
    CHECK(correction_term(2, 100) == doctest::Approx(1.0 / (200.0 * std::log(100.0))));
    CHECK(correction_term(3, 100) ==
          doctest::Approx(1.0 / (200.0 * std::log(100.0) * std::log(std::log(100.0)))));
}

TEST_CASE("gamma_j estimates") {
    const GammaEstimate single = gamma_j_estimate(2, 2);
    CHECK(single.raw == doctest::Approx(1.0 / (2.0 * std::log(2.0)) - std::log(std::log(2.0))));
    CHECK_THROWS_AS(gamma_j_estimate(3, 2), DomainError);
    CHECK_THROWS_AS(gamma_j_estimate(1, 10), DomainError);
    CHECK_THROWS_AS(gamma_j_estimate(6, 10), DomainError);

    const GammaEstimate a = gamma_j_estimate(2, 100000);
    const GammaEstimate b = gamma_j_estimate(2, 200000);
    CHECK(std::fabs(*b.corrected - *a.corrected) < 1e-9);
    CHECK(a.warning.empty());
}

TEST_CASE("gamma_2 self-consistency within 10/(n^2 ln n)") {
    for (std::uint64_t n : {1000ULL, 4000ULL, 20000ULL}) {
        const double gap = std::fabs(*gamma_j_estimate(2, 2 * n).corrected - *gamma_j_estimate(2, n).corrected);
        const auto nd = static_cast<double>(n);
        CHECK(gap <= 10.0 / (nd * nd * std::log(nd)));
    }
}

TEST_CASE("gamma_3 stable digits between 10^4 and 2*10^4") {
    const double a = *gamma_j_estimate(3, 10000).corrected;
    const double b = *gamma_j_estimate(3, 20000).corrected;
    CHECK(std::fabs(a - b) < 1e-8);
}

TEST_CASE("gamma_j' estimates") {
    const GammaEstimate two = gamma_j_prime_estimate(2, 2);
    CHECK(two.h_source == HSource::exact);
    CHECK(two.raw == doctest::Approx(4.0 / 3.0 - 1.0 / (2.0 * std::log(2.0))).epsilon(1e-14));
    CHECK(two.raw == doctest::Approx(0.6119858128888516));
    CHECK_FALSE(two.corrected.has_value());
    REQUIRE(two.error_order.has_value());

    const GammaEstimate three = gamma_j_prime_estimate(3, 100);
    REQUIRE(three.error_order.has_value());
    CHECK(*three.error_order == doctest::Approx(0.6548018210176062));
    CHECK(std::isfinite(three.raw));

    // Exact and floating h_j agree where both are available.
    const GammaEstimate e = gamma_j_prime_estimate(2, 300, HSource::exact);
    const GammaEstimate f = gamma_j_prime_estimate(2, 300, HSource::floating);
    CHECK(e.raw == doctest::Approx(f.raw).epsilon(1e-13));

    CHECK_THROWS_AS(gamma_j_prime_estimate(3, 2), DomainError);
}

TEST_CASE("gamma_2' converges only like 1/ln n") {
    const double r100 = gamma_j_prime_estimate(2, 100).raw;
    const double r1000 = gamma_j_prime_estimate(2, 1000).raw;
    const double r10000 = gamma_j_prime_estimate(2, 10000).raw;
    // First decimal digit moves between 10^2 and 10^3 ...
    CHECK(std::floor(r100 * 10) != std::floor(r1000 * 10));
    // ... and nothing settles to 1e-2 even at 10^4.
    CHECK(std::fabs(r1000 - r10000) > 1e-2);

    // The n -> 2n gap does not fall faster than c / ln n predicts.
    for (std::uint64_t n : {100ULL, 1000ULL, 10000ULL}) {
        const double gap = std::fabs(gamma_j_prime_estimate(2, 2 * n).raw - gamma_j_prime_estimate(2, n).raw);
        const double nd = static_cast<double>(n);
        const double predicted = 1.0 / std::log(nd) - 1.0 / std::log(2 * nd);
        CHECK(gap / predicted > 0.25);
    }
}

TEST_CASE("method names") {
    CHECK(parse_method("improved") == Method::improved);
    CHECK(to_string(Method::primed) == "primed");
    CHECK_THROWS_AS(parse_method("fast"), DomainError);
}

}  // TEST_SUITE
