#pragma once

#include "harmoniter/bigrational.hpp"
#include "harmoniter/checkpoint.hpp"
#include "harmoniter/harmonic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace harmoniter {

struct IntegralityReport {
    // n <= n_max with h_j(n) an integer.
    std::vector<std::uint64_t> integers;
    // p-adic engine only: n with no prime below the certificate bound showing
    // a negative valuation. Neither proven integral nor proven non-integral.
    std::vector<std::uint64_t> undetermined;
};

// Primes tried as non-integrality certificates by the p-adic route.
inline constexpr unsigned long kCertificatePrimeBound = 199;

// Every n <= n_max where h_j(n) is an integer. The exact engine tests
// denominator == 1 directly. The p-adic engine proves h_j(n) is not an
// integer by exhibiting a prime p <= 199 with nu_p(h_j(n)) < 0.
IntegralityReport integrality_check(int j, std::uint64_t n_max, ScanEngine engine = ScanEngine::padic,
                                    std::size_t bit_budget = kDefaultBitBudget);

struct TheisingerWitness {
    unsigned r;       // floor(log2 n)
    long valuation;   // nu_2(h_1(n)), equal to -r
};

// Throws InternalError if nu_2(h_1(n)) != -r or 1/2^r is not the unique
// term of minimal 2-adic valuation.
TheisingerWitness theisinger_witness(std::uint64_t n);
TheisingerWitness theisinger_witness(std::uint64_t n, const BigRational& h1_of_n);

struct KurschakWitness {
    unsigned long prime;
    bool verified;
};

// Smallest prime p in (floor(n/2), n]; verified means nu_p(h_1(n)) = -1 and
// no other k <= n is divisible by p. Throws InternalError if no prime exists.
KurschakWitness kurschak_witness(std::uint64_t n);
KurschakWitness kurschak_witness(std::uint64_t n, const BigRational& h1_of_n);

// Comparisons closer than this (relative) are redone in long double.
inline constexpr double kInequalityGuardBand = 1e-12;

struct InequalityCheck {
    std::uint64_t k;
    bool lower_holds;  // 1/((k+1) ln(k+1)) < 1/((k-1) h_1(k-1))
    bool upper_holds;  // 1/((k-1) h_1(k-1)) < 1/(k ln k)
    bool marginal;     // a comparison stayed inside the guard band

    friend bool operator==(const InequalityCheck&, const InequalityCheck&) = default;
};

struct InequalityReport {
    std::uint64_t k_max = 0;
    // Smallest k with both bounds holding on every k' in [k, k_max].
    std::optional<std::uint64_t> k_star;
    // The same threshold for each bound separately.
    std::optional<std::uint64_t> lower_from;
    std::optional<std::uint64_t> upper_from;
    // Every k in [2, k_max] where a bound fails or is marginal.
    std::vector<InequalityCheck> violations;
};

InequalityCheck inequality_at(std::uint64_t k, const BigRational& h1_of_k_minus_1);

// Scan k = 2..k_max (k_max >= 2) with exact h_1.
InequalityReport inequality_threshold(std::uint64_t k_max);

}  // namespace harmoniter
