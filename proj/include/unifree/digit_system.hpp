#pragma once

#include <cstdint>
#include <vector>

namespace unifree {

// Base n together with a strictly increasing list of nonnegative digits.
// Every decision in this library starts from one of these.
struct DigitSystem {
    std::int64_t base = 0;
    std::vector<std::int64_t> digits;

    bool operator==(const DigitSystem&) const = default;
    bool contains_zero() const { return !digits.empty() && digits.front() == 0; }
    std::int64_t max_digit() const { return digits.back(); }
};

// Result of shifting the smallest digit to 0 and dividing out the common
// factor of what remains. Original digit a maps to (a - shift) / scale.
struct NormalizationRecord {
    std::int64_t shift = 0;
    std::int64_t scale = 1;
    DigitSystem core;
};

struct ResidueProfile {
    std::vector<std::int64_t> residues;  // digit order
    bool distinct = false;
    bool irreducible = false;
};

// Checks base >= 2, digits nonempty, all nonnegative, no duplicates.
// Digits are sorted; each violation raises a distinct input_error code.
DigitSystem validate(std::int64_t base, std::vector<std::int64_t> digits);

// shift = min digit, scale = gcd of the shifted nonzero digits (1 if there
// are none). The core always starts at 0 and its nonzero digits are coprime.
NormalizationRecord normalize(const DigitSystem& ds);

// Residues mod base, whether they are pairwise distinct, and whether
// gcd(a_2 - a_1, ..., a_m - a_1, base) == 1.
ResidueProfile residue_profile(const DigitSystem& ds);

// The n1*n2-digit family {u*n1*n + v : 0 <= u < n2, 0 <= v < n1} over base
// n = n1*n2: irreducible, residues never distinct, yet expansion-unique.
DigitSystem composite_family(std::int64_t n1, std::int64_t n2);

}  // namespace unifree
