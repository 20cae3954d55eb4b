#include "unifree/int_math.hpp"

#include <algorithm>

#include "unifree/errors.hpp"

namespace unifree {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    if (n < 1) throw input_error(errc::bad_argument, "prime_factors: n must be positive");
    std::vector<std::int64_t> factors;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            factors.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw input_error(errc::bad_argument, "euler_phi: n must be positive");
    std::int64_t result = n;
    for (std::int64_t p : prime_factors(n)) result -= result / p;
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw input_error(errc::bad_argument, "divisors: n must be positive");
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::int64_t min_power_level(std::int64_t d, std::int64_t base) {
    if (d < 1 || base < 2) {
        throw input_error(errc::bad_argument, "min_power_level: need d >= 1, base >= 2");
    }
    // Strip gcd(base, .) repeatedly; each round is one extra power of base.
    std::int64_t level = 0;
    std::int64_t rest = d;
    while (rest > 1) {
        std::int64_t g = std::gcd(rest, base);
        if (g == 1) {
            throw input_error(errc::bad_argument,
                              "min_power_level: d has a prime factor not dividing base");
        }
        rest /= g;
        ++level;
    }
    return std::max<std::int64_t>(level, 1);
}

}  // namespace unifree
