#include "unifree/counting.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "unifree/collision.hpp"
#include "unifree/cutset.hpp"
#include "unifree/errors.hpp"

namespace unifree {

IndicatorSequence indicator_sequence(const DigitSystem& ds) {
    IndicatorSequence c;
    c.base = ds.base;
    c.taps.assign(static_cast<std::size_t>(ds.max_digit()) + 1, 0);
    for (std::int64_t a : ds.digits) c.taps[static_cast<std::size_t>(a)] = 1;
    return c;
}

std::vector<Int> subdivision_step(const IndicatorSequence& c, const std::vector<Int>& g) {
    if (g.empty()) return {};
    // Output support is [0, max_digit + base*(|g|-1)].
    std::size_t out_len =
        c.taps.size() + static_cast<std::size_t>(c.base) * (g.size() - 1);
    std::vector<Int> out(out_len, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        for (std::size_t t = 0; t < c.taps.size(); ++t) {
            if (c.taps[t]) out[t + static_cast<std::size_t>(c.base) * i] += g[i];
        }
    }
    return out;
}

BSequence b_sequence(const DigitSystem& ds, std::int64_t level, const Config& config) {
    if (level < 0) {
        throw input_error(errc::bad_argument, "b_sequence: level must be nonnegative");
    }
    std::int64_t cells = pow_checked(ds.base, level);
    if (cells < 0 || cells > config.cell_cap) {
        throw resource_limit_error("b_sequence: base^level exceeds the cell cap " +
                                   std::to_string(config.cell_cap));
    }

    const IndicatorSequence c = indicator_sequence(ds);
    std::vector<Int> g{1};  // delta sequence
    std::int64_t window = 1;
    for (std::int64_t t = 1; t <= level; ++t) {
        g = subdivision_step(c, g);
        window *= ds.base;
        // Entries at index >= base^t never feed back into indices < base^(t+1)
        // later on, so truncating to the window is exact.
        if (static_cast<std::int64_t>(g.size()) > window) {
            g.resize(static_cast<std::size_t>(window));
        }
    }
    g.resize(static_cast<std::size_t>(cells), 0);  // pad: b vanishes out there

    BSequence b;
    b.level = level;
    b.values = std::move(g);
    return b;
}

CascadeFunction cascade(const DigitSystem& ds, std::int64_t level, const Config& config) {
    // The level-j cascade iterate is the step function whose height on
    // [k*base^-j, (k+1)*base^-j) is the count b(k); keep the counts exact and
    // let presentation layers place the breakpoints.
    BSequence b = b_sequence(ds, level, config);
    CascadeFunction f;
    f.level = b.level;
    f.heights = std::move(b.values);
    return f;
}

FourierEstimate fourier_probe(const DigitSystem& ds, std::int64_t frequency,
                              std::int64_t depth) {
    if (depth < 0) {
        throw input_error(errc::bad_argument, "fourier_probe: depth must be nonnegative");
    }
    FourierEstimate estimate;
    estimate.frequency = frequency;
    estimate.depth = depth;

    const double m = static_cast<double>(ds.digits.size());
    std::complex<double> product = 1.0;
    Int power = 1;
    for (std::int64_t s = 1; s <= depth; ++s) {
        power *= ds.base;
        std::complex<double> factor = 0.0;
        for (std::int64_t a : ds.digits) {
            // Reduce the angle a*frequency/base^s mod 1 exactly before any
            // floating-point rounding; large frequencies stay accurate.
            Int r = (Int(a) * frequency) % power;
            if (r < 0) r += power;
            double x = static_cast<double>(r) / static_cast<double>(power);
            factor += std::polar(1.0, -2.0 * std::numbers::pi * x);
        }
        product *= factor / m;
    }
    estimate.value = product;
    return estimate;
}

RefinableClass classify_refinable(const DigitSystem& ds, const Config& config) {
    CutDecision cut = has_cut_set(ds);
    UniquenessDecision unique = decide_unique(ds, config);
    if (cut.has_cut != unique.unique) {
        throw internal_error(
            "classify_refinable: cut-set and carry-automaton deciders disagree");
    }
    return unique.unique ? RefinableClass::absolutely_continuous
                         : RefinableClass::purely_singular;
}

}  // namespace unifree
