#include "harmoniter/logiter.hpp"

#include "harmoniter/errors.hpp"

#include <cmath>
#include <string>

namespace harmoniter {

namespace {

void require_log_order(int j) {
    if (j < 1 || j > kMaxLogOrder) {
        throw DomainError("iterated-log order must be in [1, " + std::to_string(kMaxLogOrder) +
                          "], got " + std::to_string(j));
    }
}

}  // namespace

double hyperpower_e(int i) {
    if (i < 0) throw DomainError("hyperpower index must be >= 0");
    if (i >= 4) throw Overflow("^" + std::to_string(i) + " e does not fit in a double");
    double x = 1.0;
    for (int step = 0; step < i; ++step) x = std::exp(x);
    return x;
}

double domain_floor(int j) {
    require_log_order(j);
    return j == 1 ? 0.0 : hyperpower_e(j - 2);
}

std::uint64_t start_index(int j) {
    require_log_order(j);
    if (j == 1) return 1;
    if (j == 2) return 2;
    return static_cast<std::uint64_t>(std::ceil(hyperpower_e(j - 2)));
}

IterLogContext make_context(int j) {
    return IterLogContext{j, domain_floor(j), start_index(j)};
}

double ln_iter(int j, double x) {
    require_log_order(j);
    if (!(x > domain_floor(j))) {
        throw DomainError("ln_" + std::to_string(j) + " undefined at x <= " +
                          std::to_string(domain_floor(j)));
    }
    double y = x;
    for (int step = 0; step < j; ++step) {
        // Rounding just above d_j can still push an inner log to <= 0.
        if (!(y > 0.0)) throw DomainError("ln_" + std::to_string(j) + " underflowed its domain");
        y = std::log(y);
    }
    return y;
}

double log_product(int j, double k) {
    double product = k;
    double inner = k;
    for (int step = 1; step < j; ++step) {
        inner = std::log(inner);
        product *= inner;
    }
    return product;
}

double step_term(int j, std::uint64_t k) {
    return 1.0 / log_product(j, static_cast<double>(k));
}

StepSumAccumulator::StepSumAccumulator(int j) : order_(j), index_(start_index(j)) {
    sum_.add(step_term(j, index_));
}

void StepSumAccumulator::advance() {
    ++index_;
    sum_.add(step_term(order_, index_));
}

void StepSumAccumulator::advance_to(std::uint64_t n) {
    while (index_ < n) advance();
}

double l_step_sum(int j, std::uint64_t n) {
    require_log_order(j);
    if (n < start_index(j)) {
        throw DomainError("l_" + std::to_string(j) + "(n) needs n >= " +
                          std::to_string(start_index(j)));
    }
    StepSumAccumulator acc(j);
    acc.advance_to(n);
    return acc.value();
}

}  // namespace harmoniter
