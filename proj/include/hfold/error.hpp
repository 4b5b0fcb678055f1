#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hfold {

using Integer = std::int64_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input does not describe a valid set (too small, unsorted, duplicates, bad literal).
class InvalidSetError : public Error {
public:
    using Error::Error;
};

/// An argument violates an operation's precondition (h < 1, n outside an interval, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The set does not satisfy the hypothesis of the structure theorem (k = 1).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Integer arithmetic or a dense index range would overflow.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle was asked to enumerate more multisets than its budget allows.
class OracleBudgetError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. This always indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

namespace checked {

inline Integer add(Integer a, Integer b)
{
    Integer r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Integer sub(Integer a, Integer b)
{
    Integer r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline Integer mul(Integer a, Integer b)
{
    Integer r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

} // namespace checked

} // namespace hfold
