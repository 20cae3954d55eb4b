#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace unifree {

// Exact arbitrary-precision integer used wherever values can outgrow machine
// words: polynomial coefficients, expansion counts, composed affine offsets.
using Int = boost::multiprecision::cpp_int;

inline Int int_pow(std::int64_t base, std::int64_t exp) {
    Int r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// Checked base^exp that must fit in int64; returns -1 on overflow.
inline std::int64_t pow_checked(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / base) return -1;
        r *= base;
    }
    return r;
}

inline bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

// Least j >= 1 with d | base^j. Requires every prime factor of d to divide
// base; that is the caller's admissibility precondition.
std::int64_t min_power_level(std::int64_t d, std::int64_t base);

}  // namespace unifree
