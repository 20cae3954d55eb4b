#pragma once

#include <cstdint>

namespace unifree {

// Runtime limits and float tolerances. The tolerances gate nothing in the
// exact deciders; they only classify Fourier probe magnitudes.
struct Config {
    // b_sequence / cascade refuse to materialize more than this many cells.
    std::int64_t cell_cap = std::int64_t(1) << 24;
    // orbit_density refuses windows larger than this many integers.
    std::int64_t orbit_cap = std::int64_t(1) << 24;
    // decide_unique aborts after enqueueing this many carry states.
    std::int64_t carry_state_cap = std::int64_t(1) << 22;
    // |value| below this counts as a vanishing Fourier probe.
    double fourier_vanish_tol = 1e-8;
    // |value| above this counts as visibly nonzero integer spectrum.
    double fourier_nonzero_tol = 1e-2;
};

}  // namespace unifree
