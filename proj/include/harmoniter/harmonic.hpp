#pragma once

#include "harmoniter/bigrational.hpp"
#include "harmoniter/compensated.hpp"
#include "harmoniter/padic_fixed.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace harmoniter {

// 64 MiB of stored numerator/denominator bits per stream.
inline constexpr std::size_t kDefaultBitBudget = std::size_t{64} * 1024 * 1024 * 8;

// Sequential generator of iterated harmonic numbers
//
//   h_1(k) = 1 + 1/2 + ... + 1/k
//   h_j(k) = sum_{i<=k} 1 / (i * h_1(i) * ... * h_{j-1}(i))
//
// holding [h_1(k), ..., h_order(k)] at the current index k.
class HarmonicStream {
public:
    explicit HarmonicStream(int order, std::size_t bit_budget = kDefaultBitBudget);

    // Resume at `index` from previously computed levels. Validates shape only.
    static HarmonicStream restore(int order, std::uint64_t index, std::vector<BigRational> levels,
                                  std::size_t bit_budget = kDefaultBitBudget);

    int order() const { return order_; }
    std::uint64_t index() const { return index_; }
    const std::vector<BigRational>& levels() const { return levels_; }
    const BigRational& level(int m) const { return levels_.at(static_cast<std::size_t>(m - 1)); }
    const BigRational& value() const { return levels_.back(); }
    std::size_t bit_budget() const { return bit_budget_; }
    std::size_t stored_bits() const;

    // Step k -> k+1. Lower levels are updated first and their new values feed
    // the product for the levels above. Throws ResourceLimit (state unchanged)
    // if the new levels exceed the bit budget.
    void advance();
    void advance_to(std::uint64_t n);

private:
    HarmonicStream(int order, std::uint64_t index, std::vector<BigRational> levels,
                   std::size_t bit_budget);

    int order_;
    std::uint64_t index_;
    std::vector<BigRational> levels_;
    std::size_t bit_budget_;
};

HarmonicStream h_stream_advance(HarmonicStream s);

// h_1(n) by binary splitting; one reduction at the end.
BigRational harmonic_number(std::uint64_t n);

// Exact h_j(n).
BigRational h_eval(int j, std::uint64_t n, std::size_t bit_budget = kDefaultBitBudget);

// Double-precision companion of HarmonicStream with compensated sums, for
// indices where exact values are out of reach.
class FloatHarmonicStream {
public:
    explicit FloatHarmonicStream(int order);

    int order() const { return static_cast<int>(levels_.size()); }
    std::uint64_t index() const { return index_; }
    double level(int m) const { return levels_.at(static_cast<std::size_t>(m - 1)).value(); }
    double value() const { return levels_.back().value(); }

    void advance();
    void advance_to(std::uint64_t n);

private:
    std::uint64_t index_ = 1;
    std::vector<CompensatedSum> levels_;
};

// The same recursion carried out in fixed-precision p-adic arithmetic for a
// single prime. Valuations of every level are exact (see PAdicFixed); the
// cost per step does not grow with k.
class PAdicHarmonicStream {
public:
    PAdicHarmonicStream(int order, unsigned long p, unsigned digits);

    static PAdicHarmonicStream restore(int order, std::uint64_t index, unsigned digits,
                                       std::vector<PAdicFixed> levels);

    int order() const { return static_cast<int>(levels_.size()); }
    unsigned long prime() const { return prime_; }
    unsigned digits() const { return digits_; }
    std::uint64_t index() const { return index_; }
    const std::vector<PAdicFixed>& levels() const { return levels_; }
    const PAdicFixed& value() const { return levels_.back(); }

    // Throws PrecisionLoss (state unchanged) if cancellation exhausts the
    // working precision.
    void advance();

private:
    PAdicHarmonicStream(unsigned long p, unsigned digits, std::uint64_t index,
                        std::vector<PAdicFixed> levels);

    unsigned long prime_;
    unsigned digits_;
    std::uint64_t index_;
    std::vector<PAdicFixed> levels_;
};

// Conway-Guy hyperharmonic H_n^(k): H_n^(1) = h_1(n), H_n^(k+1) = sum_{i<=n} H_i^(k).
BigRational hyperharmonic(int k, std::uint64_t n, std::size_t bit_budget = kDefaultBitBudget);

// Iterated partial sums of a series: partials[m][n-1] = A_n^(m+1).
class CesaroTower {
public:
    using Coefficients = std::function<BigRational(std::uint64_t)>;

    CesaroTower(const Coefficients& series, int depth, std::uint64_t n);

    int depth() const { return static_cast<int>(partials_.size()); }
    std::uint64_t length() const { return partials_.empty() ? 0 : partials_.front().size(); }
    // A_n^(level), level >= 1.
    const BigRational& at(int level, std::uint64_t n) const;
    const std::vector<std::vector<BigRational>>& partials() const { return partials_; }

private:
    std::vector<std::vector<BigRational>> partials_;
};

// (C, order) mean after n terms: A_n^(1), A_n^(2)/n, or A_n^(3)/C(n+1, 2).
// Throws UnsupportedOrder for order >= 3.
BigRational cesaro_sum(const CesaroTower::Coefficients& series, int order, std::uint64_t n);

// Every n <= n_max - 2 with h_j(n+2) - 2 h_j(n+1) + h_j(n) >= 0.
std::vector<std::uint64_t> concavity_check(int j, std::uint64_t n_max,
                                           std::size_t bit_budget = kDefaultBitBudget);

}  // namespace harmoniter
