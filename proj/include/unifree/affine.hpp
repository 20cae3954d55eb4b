#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unifree/collision.hpp"
#include "unifree/config.hpp"
#include "unifree/digit_system.hpp"
#include "unifree/int_math.hpp"

namespace unifree {

// x -> slope*x + offset. Inputs have machine-size coefficients; composites
// of long words do not, hence the arbitrary-precision fields.
struct AffineMap {
    Int slope;
    Int offset;

    bool operator==(const AffineMap&) const = default;
};

// Equal-slope family f_i(x) = slope*x + offsets[i], offsets pairwise
// distinct, plus an optional seed set for orbit computations.
struct FunctionSystem {
    std::int64_t slope = 0;
    std::vector<std::int64_t> offsets;  // user order, 1-based letters index this
    std::vector<std::int64_t> seeds;
};

// 1-based indices into the maps; leftmost letter is the outermost map of the
// composition, so letter j contributes offset * slope^(j-1).
struct SemigroupWord {
    std::vector<std::int32_t> letters;

    bool operator==(const SemigroupWord&) const = default;
};

// Two distinct words with equal exact composition.
struct RelationCertificate {
    SemigroupWord left;
    SemigroupWord right;
    AffineMap composite;
};

struct FreenessDecision {
    bool free = false;
    std::optional<RelationCertificate> certificate;  // set iff !free
    // The digit-system reduction that was decided: shift, scale, core.
    NormalizationRecord reduction;
    // Collision witness of the reduced system when not free.
    std::optional<CollisionWitness> witness;
};

struct DensitySample {
    std::int64_t limit = 0;
    std::int64_t count = 0;
};

// Orbit size within [0, limit] windows; density at a checkpoint is
// count / (limit + 1), reported unreduced.
struct DensityReport {
    std::int64_t limit = 0;
    std::int64_t orbit_count = 0;
    std::vector<DensitySample> samples;  // slope-power checkpoints, then limit
};

// Validates slope >= 2, nonempty pairwise-distinct offsets, nonnegative seeds.
FunctionSystem make_function_system(std::int64_t slope,
                                    std::vector<std::int64_t> offsets,
                                    std::vector<std::int64_t> seeds = {});

// Exact composition of the word: slope^p together with
// sum_j offsets[u_j] * slope^(j-1).
AffineMap compose(const FunctionSystem& fs, const SemigroupWord& word);

// Freeness via the digit-system reduction: normalize offsets, run the carry
// automaton, translate any collision witness into a verified pair of words.
// Works for any map count; more maps than the slope is never free.
FreenessDecision decide_free(const FunctionSystem& fs, const Config& config = {});

// For prime slope p with exactly p maps: free iff the normalized offsets are
// pairwise distinct mod p. Must agree with decide_free.
bool prime_fast_path_free(const FunctionSystem& fs);

// Words distinct, letters in range, equal exact composites matching the
// certificate's composite. False on malformed input, never throws.
bool verify_relation(const FunctionSystem& fs, const RelationCertificate& cert);

// Closure of the seeds under all maps, intersected with [0, limit]; exact by
// monotonicity. Offsets must be nonnegative for the window argument to hold.
DensityReport orbit_density(const FunctionSystem& fs, std::int64_t limit,
                            const Config& config = {});

}  // namespace unifree
