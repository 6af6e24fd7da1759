#pragma once

#include "harmoniter/bigrational.hpp"

#include <string>

namespace harmoniter {

// Fixed-point rendering with exactly `digits` fractional digits, rounded
// half-to-even from the exact value.
std::string format_decimal(const BigRational& q, int digits);

// Same for a double, using its exact binary value.
std::string format_decimal(double x, int digits);

}  // namespace harmoniter
