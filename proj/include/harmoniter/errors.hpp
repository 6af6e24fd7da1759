#pragma once

#include <stdexcept>
#include <string>

namespace harmoniter {

// Base of every error the library raises on purpose. Callers that only care
// about "something in harmoniter failed" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
public:
    explicit NotPrime(unsigned long p)
        : Error("not a prime: " + std::to_string(p)), value_(p) {}
    unsigned long value() const noexcept { return value_; }

private:
    unsigned long value_;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

// A stream's stored rationals outgrew the configured bit budget.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

// Fixed-precision p-adic arithmetic could not certify a result.
class PrecisionLoss : public Error {
public:
    using Error::Error;
};

class CorruptCheckpoint : public Error {
public:
    using Error::Error;
};

class VersionMismatch : public Error {
public:
    using Error::Error;
};

// Raised only if a mathematical guarantee appears violated.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace harmoniter
