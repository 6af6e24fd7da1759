#pragma once

#include "harmoniter/compensated.hpp"

#include <cstdint>

namespace harmoniter {

// Highest order with a representable domain floor (d_6 = ^4 e overflows).
inline constexpr int kMaxLogOrder = 5;

// ^i e: 1, e, e^e, e^(e^e). Throws Overflow for i >= 4.
double hyperpower_e(int i);

// Left end d_j of the domain (d_j, inf) of ln_j: d_1 = 0, d_j = ^(j-2) e.
double domain_floor(int j);

// Smallest positive integer in the domain of the integral defining ln_j:
// a(1) = 1, a(2) = 2, a(j) = ceil(^(j-2) e).
std::uint64_t start_index(int j);

struct IterLogContext {
    int order;
    double domain_floor;
    std::uint64_t start_index;
};

IterLogContext make_context(int j);

// ln composed j times. The defining integral with lower limit ^(j-1) e
// reduces to this composition by the substitution u = ln_{j-1} t.
// Throws DomainError if x <= d_j.
double ln_iter(int j, double x);

// Product k * ln k * ln_2 k * ... * ln_{j-1} k (just k for j = 1).
double log_product(int j, double k);

// 1 / log_product(j, k).
double step_term(int j, std::uint64_t k);

// Running value of l_j(k) = sum_{i=a(j)}^{k} step_term(j, i).
class StepSumAccumulator {
public:
    explicit StepSumAccumulator(int j);

    int order() const { return order_; }
    std::uint64_t index() const { return index_; }
    double value() const { return sum_.value(); }
    const CompensatedSum& sum() const { return sum_; }

    void advance();
    void advance_to(std::uint64_t n);

private:
    int order_;
    std::uint64_t index_;
    CompensatedSum sum_;
};

// l_j(n). Throws DomainError if n < a(j) or j outside [1, 5].
double l_step_sum(int j, std::uint64_t n);

}  // namespace harmoniter
