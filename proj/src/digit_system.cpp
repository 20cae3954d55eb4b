#include "unifree/digit_system.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "unifree/errors.hpp"

namespace unifree {

DigitSystem validate(std::int64_t base, std::vector<std::int64_t> digits) {
    if (base < 2) {
        throw input_error(errc::base_too_small,
                          "base must be at least 2, got " + std::to_string(base));
    }
    if (digits.empty()) {
        throw input_error(errc::empty_digits, "digit set must not be empty");
    }
    for (std::int64_t a : digits) {
        if (a < 0) {
            throw input_error(errc::negative_digit,
                              "negative digit " + std::to_string(a));
        }
    }
    std::sort(digits.begin(), digits.end());
    auto dup = std::adjacent_find(digits.begin(), digits.end());
    if (dup != digits.end()) {
        throw input_error(errc::duplicate_digit,
                          "duplicate digit " + std::to_string(*dup));
    }
    return DigitSystem{base, std::move(digits)};
}

NormalizationRecord normalize(const DigitSystem& ds) {
    NormalizationRecord rec;
    rec.shift = ds.digits.front();
    std::int64_t g = 0;  // gcd over the shifted nonzero digits
    for (std::int64_t a : ds.digits) g = std::gcd(g, a - rec.shift);
    rec.scale = (g == 0) ? 1 : g;  // single-digit set: empty gcd is 1
    rec.core.base = ds.base;
    rec.core.digits.reserve(ds.digits.size());
    for (std::int64_t a : ds.digits) {
        rec.core.digits.push_back((a - rec.shift) / rec.scale);
    }
    return rec;
}

ResidueProfile residue_profile(const DigitSystem& ds) {
    ResidueProfile profile;
    profile.residues.reserve(ds.digits.size());
    for (std::int64_t a : ds.digits) profile.residues.push_back(a % ds.base);

    std::vector<std::int64_t> sorted = profile.residues;
    std::sort(sorted.begin(), sorted.end());
    profile.distinct =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    std::int64_t g = ds.base;  // gcd(a_2 - a_1, ..., a_m - a_1, base)
    for (std::int64_t a : ds.digits) g = std::gcd(g, a - ds.digits.front());
    profile.irreducible = (g == 1);
    return profile;
}

DigitSystem composite_family(std::int64_t n1, std::int64_t n2) {
    if (n1 < 2 || n2 < 2) {
        throw input_error(errc::bad_argument,
                          "composite_family: both factors must be at least 2");
    }
    std::int64_t n = n1 * n2;
    std::vector<std::int64_t> digits;
    digits.reserve(static_cast<std::size_t>(n));
    // u*n1*n + v for 0 <= u < n2, 0 <= v < n1: residues mod n all lie in
    // [0, n1), so they repeat, yet every expansion is unique.
    for (std::int64_t u = 0; u < n2; ++u) {
        for (std::int64_t v = 0; v < n1; ++v) {
            digits.push_back(u * n1 * n + v);
        }
    }
    return validate(n, std::move(digits));
}

}  // namespace unifree
