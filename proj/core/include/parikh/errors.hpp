// errors.hpp -- error types and checked 64-bit counting arithmetic

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parikh {

/// A subword count or matrix entry no longer fits in 64 bits.
/// Counts are never allowed to wrap silently.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search or enumeration outgrew its configured state limit.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was asked about a pair of words that is not related
/// under the given rewriting system.
class NotRelatedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit count overflow in addition");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit count overflow in multiplication");
    return r;
}

} // namespace parikh
