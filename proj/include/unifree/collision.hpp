#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unifree/config.hpp"
#include "unifree/digit_system.hpp"
#include "unifree/int_math.hpp"

namespace unifree {

// A number with two distinct expansions, digits least-significant first,
// last digit of each tuple nonzero. Proves non-uniqueness on its own.
struct CollisionWitness {
    Int number;
    std::vector<std::int64_t> expansion_a;  // shorter, or lexicographically smaller
    std::vector<std::int64_t> expansion_b;

    bool operator==(const CollisionWitness&) const = default;
};

struct UniquenessDecision {
    bool unique = false;
    std::optional<CollisionWitness> witness;  // set iff !unique
};

struct WeakUniquenessDecision {
    bool weakly_unique = false;
    // Witness for the shifted system {0, a_2-a_1, ...} when not weakly unique.
    std::optional<CollisionWitness> shifted_witness;
};

// Carry-automaton decision: breadth-first search over integer carries
// s -> (s + a - b)/base, states bounded by max_digit/(base-1). Requires 0
// among the digits; any digit count is allowed. Witnesses have minimal
// length and are deterministic.
UniquenessDecision decide_unique(const DigitSystem& ds, const Config& config = {});

// Number of expansions of k, by the recurrence
// b(k) = sum over digits a == k (mod base) of b((k-a)/base), b(0) = 1,
// b(k) = 0 for k < 0. Exact for arbitrary-precision k.
Int count_expansions(const DigitSystem& ds, const Int& k);

// For all-positive digit sets: weak uniqueness of A is uniqueness of
// {0, a_2-a_1, ..., a_m-a_1}.
WeakUniquenessDecision decide_weak_unique(const DigitSystem& ds, const Config& config = {});

// Both tuples well-formed, distinct, and evaluating to the witness number.
bool verify_witness(const DigitSystem& ds, const CollisionWitness& witness);

}  // namespace unifree
