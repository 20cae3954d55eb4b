#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "unifree/config.hpp"
#include "unifree/digit_system.hpp"
#include "unifree/int_math.hpp"

namespace unifree {

// 0/1 taps of the subdivision operator: tap at exponent a iff a is a digit.
struct IndicatorSequence {
    std::int64_t base = 0;
    std::vector<std::int32_t> taps;  // support [0, max digit]
};

// Expansion counts b(0 .. base^level - 1).
struct BSequence {
    std::int64_t level = 0;
    std::vector<Int> values;
};

// Step function on [0,1): height k on [k*base^-level, (k+1)*base^-level).
struct CascadeFunction {
    std::int64_t level = 0;
    std::vector<Int> heights;
};

// Finite product of mask factors approximating the refinable measure's
// Fourier transform at an integer frequency.
struct FourierEstimate {
    std::int64_t frequency = 0;
    std::int64_t depth = 0;
    std::complex<double> value;
};

enum class RefinableClass { absolutely_continuous, purely_singular };

IndicatorSequence indicator_sequence(const DigitSystem& ds);

// One application of (Sg)_k = sum_i c_{k - base*i} g_i on sequences
// supported from index 0. Exact.
std::vector<Int> subdivision_step(const IndicatorSequence& c, const std::vector<Int>& g);

// level-fold subdivision of the delta sequence, truncated to base^level
// entries. Truncation is exact for this window. Guarded by config.cell_cap.
BSequence b_sequence(const DigitSystem& ds, std::int64_t level, const Config& config = {});

CascadeFunction cascade(const DigitSystem& ds, std::int64_t level, const Config& config = {});

// Product over s = 1..depth of (1/m) * sum_k exp(-2*pi*i * a_k * freq / base^s).
// Arguments are reduced modulo base^s in exact arithmetic before rounding.
FourierEstimate fourier_probe(const DigitSystem& ds, std::int64_t frequency, std::int64_t depth);

// absolutely_continuous iff the system is expansion-unique; cut-set and
// carry-automaton deciders are both run and must agree. Requires
// |digits| == base and 0 among the digits.
RefinableClass classify_refinable(const DigitSystem& ds, const Config& config = {});

}  // namespace unifree
