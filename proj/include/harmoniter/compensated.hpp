#pragma once

#include <cmath>

namespace harmoniter {

// Neumaier's variant of Kahan summation. The running error term is folded
// back in only when the value is read.
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double value, double compensation = 0.0)
        : sum_(value), compensation_(compensation) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    void add(const CompensatedSum& other) {
        add(other.sum_);
        add(other.compensation_);
    }

    double value() const { return sum_ + compensation_; }
    double raw_sum() const { return sum_; }
    double compensation() const { return compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace harmoniter
