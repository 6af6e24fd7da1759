#include "harmoniter/harmonic.hpp"

#include "harmoniter/errors.hpp"
#include "harmoniter/valuation.hpp"

#include <string>
#include <utility>

namespace harmoniter {

namespace {

void require_order(int j) {
    if (j < 1) throw DomainError("order must be >= 1, got " + std::to_string(j));
}

void require_index(std::uint64_t n) {
    if (n < 1) throw DomainError("index must be >= 1");
}

std::size_t total_bits(const std::vector<BigRational>& values) {
    std::size_t bits = 0;
    for (const auto& v : values) bits += v.bit_size();
    return bits;
}

// sum_{k=lo}^{hi} 1/k as an unreduced num/den pair.
void harmonic_split(std::uint64_t lo, std::uint64_t hi, BigInt& num, BigInt& den) {
    if (hi - lo < 8) {
        num = 0;
        den = 1;
        for (std::uint64_t k = lo; k <= hi; ++k) {
            // num/den + 1/k = (num*k + den) / (den*k)
            num = num * k + den;
            den *= k;
        }
        return;
    }
    const std::uint64_t mid = lo + (hi - lo) / 2;
    BigInt ln, ld, rn, rd;
    harmonic_split(lo, mid, ln, ld);
    harmonic_split(mid + 1, hi, rn, rd);
    num = ln * rd + rn * ld;
    den = ld * rd;
}

}  // namespace

// ---------------------------------------------------------------- exact stream

HarmonicStream::HarmonicStream(int order, std::size_t bit_budget)
    : order_(order), index_(1), bit_budget_(bit_budget) {
    require_order(order);
    levels_.assign(static_cast<std::size_t>(order), BigRational(1));
}

HarmonicStream::HarmonicStream(int order, std::uint64_t index, std::vector<BigRational> levels,
                               std::size_t bit_budget)
    : order_(order), index_(index), levels_(std::move(levels)), bit_budget_(bit_budget) {}

HarmonicStream HarmonicStream::restore(int order, std::uint64_t index,
                                       std::vector<BigRational> levels, std::size_t bit_budget) {
    require_order(order);
    require_index(index);
    if (levels.size() != static_cast<std::size_t>(order)) {
        throw DomainError("stream restore: expected " + std::to_string(order) + " levels, got " +
                          std::to_string(levels.size()));
    }
    for (const auto& v : levels) {
        if (v < BigRational(1)) throw DomainError("stream restore: level below 1");
    }
    return HarmonicStream(order, index, std::move(levels), bit_budget);
}

std::size_t HarmonicStream::stored_bits() const {
    return total_bits(levels_);
}

void HarmonicStream::advance() {
    const std::uint64_t next = index_ + 1;
    const BigRational k{BigInt(next)};
    std::vector<BigRational> updated;
    updated.reserve(levels_.size());

    updated.push_back(levels_[0] + k.reciprocal());
    BigRational product = k * updated[0];
    for (std::size_t m = 1; m < levels_.size(); ++m) {
        updated.push_back(levels_[m] + product.reciprocal());
        if (m + 1 < levels_.size()) product *= updated[m];
    }

    const std::size_t bits = total_bits(updated);
    if (bits > bit_budget_) {
        throw ResourceLimit("h_" + std::to_string(order_) + " stream at n=" + std::to_string(next) +
                            " needs " + std::to_string(bits) + " bits, budget " +
                            std::to_string(bit_budget_));
    }
    levels_ = std::move(updated);
    index_ = next;
}

void HarmonicStream::advance_to(std::uint64_t n) {
    while (index_ < n) advance();
}

HarmonicStream h_stream_advance(HarmonicStream s) {
    s.advance();
    return s;
}

BigRational harmonic_number(std::uint64_t n) {
    if (n == 0) return BigRational(0);
    BigInt num, den;
    harmonic_split(1, n, num, den);
    return BigRational(num, den);
}

BigRational h_eval(int j, std::uint64_t n, std::size_t bit_budget) {
    require_order(j);
    require_index(n);
    if (j == 1) {
        BigRational h = harmonic_number(n);
        if (h.bit_size() > bit_budget) {
            throw ResourceLimit("h_1(" + std::to_string(n) + ") exceeds the bit budget");
        }
        return h;
    }
    HarmonicStream stream(j, bit_budget);
    stream.advance_to(n);
    return stream.value();
}

// ---------------------------------------------------------------- float stream

FloatHarmonicStream::FloatHarmonicStream(int order) {
    require_order(order);
    levels_.assign(static_cast<std::size_t>(order), CompensatedSum(1.0));
}

void FloatHarmonicStream::advance() {
    const std::uint64_t next = index_ + 1;
    const auto k = static_cast<double>(next);
    levels_[0].add(1.0 / k);
    double product = k * levels_[0].value();
    for (std::size_t m = 1; m < levels_.size(); ++m) {
        levels_[m].add(1.0 / product);
        product *= levels_[m].value();
    }
    index_ = next;
}

void FloatHarmonicStream::advance_to(std::uint64_t n) {
    while (index_ < n) advance();
}

// ---------------------------------------------------------------- p-adic stream

PAdicHarmonicStream::PAdicHarmonicStream(int order, unsigned long p, unsigned digits)
    : prime_(p), digits_(digits), index_(1) {
    require_order(order);
    require_prime(p);
    levels_.assign(static_cast<std::size_t>(order), PAdicFixed::from_integer(1, p, digits));
}

PAdicHarmonicStream::PAdicHarmonicStream(unsigned long p, unsigned digits, std::uint64_t index,
                                         std::vector<PAdicFixed> levels)
    : prime_(p), digits_(digits), index_(index), levels_(std::move(levels)) {}

PAdicHarmonicStream PAdicHarmonicStream::restore(int order, std::uint64_t index, unsigned digits,
                                                 std::vector<PAdicFixed> levels) {
    require_order(order);
    require_index(index);
    if (levels.size() != static_cast<std::size_t>(order)) {
        throw DomainError("p-adic stream restore: wrong number of levels");
    }
    const unsigned long p = levels.front().prime();
    for (const auto& v : levels) {
        if (v.prime() != p) throw DomainError("p-adic stream restore: mixed primes");
        if (v.precision() > digits) throw DomainError("p-adic stream restore: precision above working digits");
    }
    return PAdicHarmonicStream(p, digits, index, std::move(levels));
}

void PAdicHarmonicStream::advance() {
    const std::uint64_t next = index_ + 1;
    const PAdicFixed k = PAdicFixed::from_integer(next, prime_, digits_);
    std::vector<PAdicFixed> updated;
    updated.reserve(levels_.size());

    updated.push_back(levels_[0] + k.inverse());
    PAdicFixed product = k * updated[0];
    for (std::size_t m = 1; m < levels_.size(); ++m) {
        updated.push_back(levels_[m] + product.inverse());
        if (m + 1 < levels_.size()) product = product * updated[m];
    }
    levels_ = std::move(updated);
    index_ = next;
}

// ---------------------------------------------------------------- hyperharmonic

BigRational hyperharmonic(int k, std::uint64_t n, std::size_t bit_budget) {
    require_order(k);
    require_index(n);
    std::vector<BigRational> row;
    row.reserve(n);
    HarmonicStream h1(1, bit_budget);
    row.push_back(h1.value());
    for (std::uint64_t i = 2; i <= n; ++i) {
        h1.advance();
        row.push_back(h1.value());
    }
    for (int level = 2; level <= k; ++level) {
        for (std::size_t i = 1; i < row.size(); ++i) row[i] += row[i - 1];
        if (total_bits(row) > bit_budget) {
            throw ResourceLimit("hyperharmonic tower exceeds the bit budget at level " +
                                std::to_string(level));
        }
    }
    return row.back();
}

// ---------------------------------------------------------------- Cesaro

CesaroTower::CesaroTower(const Coefficients& series, int depth, std::uint64_t n) {
    if (depth < 1) throw DomainError("Cesaro tower depth must be >= 1");
    require_index(n);
    partials_.resize(static_cast<std::size_t>(depth));
    auto& first = partials_[0];
    first.reserve(n);
    BigRational running(0);
    for (std::uint64_t i = 1; i <= n; ++i) {
        running += series(i);
        first.push_back(running);
    }
    for (std::size_t m = 1; m < partials_.size(); ++m) {
        const auto& below = partials_[m - 1];
        auto& row = partials_[m];
        row.reserve(n);
        BigRational acc(0);
        for (const auto& v : below) {
            acc += v;
            row.push_back(acc);
        }
    }
}

const BigRational& CesaroTower::at(int level, std::uint64_t n) const {
    if (level < 1 || level > depth()) throw DomainError("Cesaro level out of range");
    if (n < 1 || n > length()) throw DomainError("Cesaro index out of range");
    return partials_[static_cast<std::size_t>(level - 1)][n - 1];
}

BigRational cesaro_sum(const CesaroTower::Coefficients& series, int order, std::uint64_t n) {
    if (order < 0 || order > 2) {
        throw UnsupportedOrder("Cesaro order " + std::to_string(order) + " not supported (0..2)");
    }
    require_index(n);
    const CesaroTower tower(series, order + 1, n);
    const BigRational& top = tower.at(order + 1, n);
    switch (order) {
        case 0:
            return top;
        case 1:
            return top / BigRational(BigInt(n));
        default: {
            // C(n+1, 2) = n(n+1)/2
            const BigInt nn(n);
            return top / BigRational(nn * (nn + 1), BigInt(2));
        }
    }
}

// ---------------------------------------------------------------- concavity

std::vector<std::uint64_t> concavity_check(int j, std::uint64_t n_max, std::size_t bit_budget) {
    require_order(j);
    if (n_max < 3) throw DomainError("concavity_check needs n_max >= 3");
    HarmonicStream stream(j, bit_budget);
    BigRational a = stream.value();
    stream.advance();
    BigRational b = stream.value();
    std::vector<std::uint64_t> violations;
    for (std::uint64_t n = 1; n + 2 <= n_max; ++n) {
        stream.advance();
        const BigRational& c = stream.value();
        if ((c - b) - (b - a) >= BigRational(0)) violations.push_back(n);
        a = std::move(b);
        b = c;
    }
    return violations;
}

}  // namespace harmoniter
