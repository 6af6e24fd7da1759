#pragma once

// Independent reference computations used only by tests. Nothing here goes
// through the streaming or DP code paths it is used to check.

#include "harmoniter/bigrational.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using harmoniter::BigInt;
using harmoniter::BigRational;

inline BigRational plain_harmonic(std::uint64_t n) {
    BigRational s(0);
    for (std::uint64_t k = 1; k <= n; ++k) s += BigRational(BigInt(1), BigInt(k));
    return s;
}

// h_m(k) recomputed from scratch by the defining double sum. Exponential in
// m, fine for m <= 4 and k <= 50 with memo on the outer index.
inline std::vector<std::vector<BigRational>> naive_iterated(int j, std::uint64_t n) {
    // table[m][k] = h_{m+1}(k), every entry rebuilt from its definition.
    std::vector<std::vector<BigRational>> table(static_cast<std::size_t>(j),
                                                std::vector<BigRational>(n + 1));
    for (std::uint64_t k = 1; k <= n; ++k) table[0][k] = plain_harmonic(k);
    for (int m = 1; m < j; ++m) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            BigRational sum(0);
            for (std::uint64_t i = 1; i <= k; ++i) {
                BigRational denom{BigInt(i)};
                for (int l = 0; l < m; ++l) denom *= table[static_cast<std::size_t>(l)][i];
                sum += denom.reciprocal();
            }
            table[static_cast<std::size_t>(m)][k] = sum;
        }
    }
    return table;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// H_n^(k) = C(n+k-1, k-1) (h_1(n+k-1) - h_1(k-1)).
inline BigRational hyperharmonic_closed_form(int k, std::uint64_t n) {
    const auto kk = static_cast<std::uint64_t>(k);
    return BigRational(binomial(n + kk - 1, kk - 1)) * (plain_harmonic(n + kk - 1) - plain_harmonic(kk - 1));
}

// H_n^(k) by the literal recursion, no reuse between calls.
inline BigRational hyperharmonic_recursive(int k, std::uint64_t n) {
    if (k == 1) return plain_harmonic(n);
    BigRational s(0);
    for (std::uint64_t i = 1; i <= n; ++i) s += hyperharmonic_recursive(k - 1, i);
    return s;
}

// A_n^(m) = sum_i C(n - i + m - 1, m - 1) a_i.
template <class Series>
inline BigRational iterated_partial_sum(const Series& a, int m, std::uint64_t n) {
    BigRational s(0);
    const auto mm = static_cast<std::uint64_t>(m);
    for (std::uint64_t i = 1; i <= n; ++i) s += BigRational(binomial(n - i + mm - 1, mm - 1)) * a(i);
    return s;
}

}  // namespace oracle
