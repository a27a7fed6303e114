#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylkit {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a rank or coordinate-length mismatch makes an operation
/// meaningless.
struct rank_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when no partition lift of the requested size exists.
struct lift_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed the configured size guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an alleged character fails to decompose into irreducibles
/// with nonnegative multiplicities.
struct character_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct overflow_error_wk : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default cap on the number of weight-table entries any single operation may
// materialize.  Overridable per call.
inline constexpr Int kDefaultGuard = 5'000'000;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error_wk("multiplicity overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error_wk("multiplicity overflow in multiplication");
    return r;
}

struct VecHash {
    std::size_t operator()(const std::vector<Int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace weylkit
