#pragma once

#include <stdexcept>

namespace hodgemod {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its contract: cap mismatch, non-unit
/// divisor, coefficient request beyond the truncation cap, and the like.
class ContractError : public Error {
public:
    using Error::Error;
};

/// The query itself is unsupported: g < 2, n < 1, or gcd(n, d) != 1 where
/// coprimality is required. Maps to CLI exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A mathematical self-check (polynomial cutoff, symmetry, duality, ...)
/// failed. Signals an implementation bug. Maps to CLI exit code 3.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace hodgemod
