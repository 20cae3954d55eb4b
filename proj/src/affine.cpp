#include "unifree/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "unifree/errors.hpp"

namespace unifree {

namespace {

// Sorted-offset view with the permutation back to user map indices:
// sorted[i].first is the offset, sorted[i].second its 0-based map index.
std::vector<std::pair<std::int64_t, std::size_t>> sorted_offsets(
    const FunctionSystem& fs) {
    std::vector<std::pair<std::int64_t, std::size_t>> sorted;
    sorted.reserve(fs.offsets.size());
    for (std::size_t i = 0; i < fs.offsets.size(); ++i) {
        sorted.emplace_back(fs.offsets[i], i);
    }
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

// Shift-and-scale reduction of the offsets to a digit system with 0 and
// coprime nonzero digits. Freeness is invariant under both moves.
NormalizationRecord reduce_offsets(
    const FunctionSystem& fs,
    const std::vector<std::pair<std::int64_t, std::size_t>>& sorted) {
    NormalizationRecord rec;
    rec.shift = sorted.front().first;
    std::int64_t g = 0;
    for (const auto& [offset, index] : sorted) g = std::gcd(g, offset - rec.shift);
    rec.scale = (g == 0) ? 1 : g;
    std::vector<std::int64_t> digits;
    digits.reserve(sorted.size());
    for (const auto& [offset, index] : sorted) {
        digits.push_back((offset - rec.shift) / rec.scale);
    }
    rec.core = validate(fs.slope, std::move(digits));
    return rec;
}

}  // namespace

FunctionSystem make_function_system(std::int64_t slope,
                                    std::vector<std::int64_t> offsets,
                                    std::vector<std::int64_t> seeds) {
    if (slope < 2) {
        throw input_error(errc::slope_too_small,
                          "slope must be at least 2, got " + std::to_string(slope));
    }
    if (offsets.empty()) {
        throw input_error(errc::empty_offsets, "offset list must not be empty");
    }
    std::set<std::int64_t> seen;
    for (std::int64_t a : offsets) {
        if (!seen.insert(a).second) {
            throw input_error(errc::duplicate_offset,
                              "duplicate offset " + std::to_string(a));
        }
    }
    for (std::int64_t s : seeds) {
        if (s < 0) {
            throw input_error(errc::negative_seed,
                              "negative seed " + std::to_string(s));
        }
    }
    return FunctionSystem{slope, std::move(offsets), std::move(seeds)};
}

AffineMap compose(const FunctionSystem& fs, const SemigroupWord& word) {
    AffineMap map{1, 0};  // identity for the empty word
    // Leftmost letter is outermost: offset = sum offsets[u_j] * slope^(j-1),
    // accumulated by Horner from the last letter inward.
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        std::int32_t letter = *it;
        if (letter < 1 || static_cast<std::size_t>(letter) > fs.offsets.size()) {
            throw input_error(errc::word_index_out_of_range,
                              "word letter " + std::to_string(letter) +
                                  " outside 1.." + std::to_string(fs.offsets.size()));
        }
        map.offset = map.offset * fs.slope +
                     fs.offsets[static_cast<std::size_t>(letter) - 1];
        map.slope *= fs.slope;
    }
    return map;
}

FreenessDecision decide_free(const FunctionSystem& fs, const Config& config) {
    auto sorted = sorted_offsets(fs);
    FreenessDecision decision;
    decision.reduction = reduce_offsets(fs, sorted);

    UniquenessDecision unique = decide_unique(decision.reduction.core, config);
    if (unique.unique) {
        if (fs.offsets.size() > static_cast<std::size_t>(fs.slope)) {
            // More maps than the slope forces a collision by counting words
            // against representable values; uniqueness here is impossible.
            throw internal_error(
                "decide_free: automaton reported unique with more maps than slope");
        }
        decision.free = true;
        return decision;
    }

    // Translate the collision of the reduced digit system into two words.
    // A core digit at sorted position i belongs to user map sorted[i].second.
    std::map<std::int64_t, std::int32_t> letter_of_digit;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        letter_of_digit[decision.reduction.core.digits[i]] =
            static_cast<std::int32_t>(sorted[i].second) + 1;
    }
    auto to_word = [&](const std::vector<std::int64_t>& expansion) {
        SemigroupWord word;
        word.letters.reserve(expansion.size());
        for (std::int64_t digit : expansion) {
            word.letters.push_back(letter_of_digit.at(digit));
        }
        return word;
    };

    const CollisionWitness& witness = *unique.witness;
    RelationCertificate cert;
    cert.left = to_word(witness.expansion_b);  // the longer expansion
    cert.right = to_word(witness.expansion_a);
    // Equal offsets need equal slopes too: pad the shorter word with the
    // zero-digit map, which changes no offset at those positions.
    const std::int32_t pad_letter = letter_of_digit.at(0);
    while (cert.right.letters.size() < cert.left.letters.size()) {
        cert.right.letters.push_back(pad_letter);
    }
    cert.composite = compose(fs, cert.left);

    if (!verify_relation(fs, cert)) {
        throw internal_error("decide_free: constructed relation failed verification");
    }
    decision.certificate = std::move(cert);
    decision.witness = witness;
    return decision;
}

bool prime_fast_path_free(const FunctionSystem& fs) {
    if (!is_prime(fs.slope)) {
        throw input_error(errc::slope_not_prime,
                          "prime fast path needs a prime slope, got " +
                              std::to_string(fs.slope));
    }
    if (fs.offsets.size() != static_cast<std::size_t>(fs.slope)) {
        throw input_error(errc::map_count_mismatch,
                          "prime fast path needs exactly slope-many maps");
    }
    // Reduce first: the residue criterion assumes the irreducible form, and
    // shift/scale moves do not change freeness. The reduced digits have
    // gcd 1, so the reduced system is always irreducible.
    NormalizationRecord rec = reduce_offsets(fs, sorted_offsets(fs));
    std::set<std::int64_t> residues;
    for (std::int64_t d : rec.core.digits) residues.insert(d % fs.slope);
    return residues.size() == rec.core.digits.size();
}

bool verify_relation(const FunctionSystem& fs, const RelationCertificate& cert) {
    auto well_formed = [&](const SemigroupWord& word) {
        if (word.letters.empty()) return false;
        for (std::int32_t letter : word.letters) {
            if (letter < 1 || static_cast<std::size_t>(letter) > fs.offsets.size()) {
                return false;
            }
        }
        return true;
    };
    if (!well_formed(cert.left) || !well_formed(cert.right)) return false;
    if (cert.left == cert.right) return false;
    AffineMap left = compose(fs, cert.left);
    return left == compose(fs, cert.right) && left == cert.composite;
}

DensityReport orbit_density(const FunctionSystem& fs, std::int64_t limit,
                            const Config& config) {
    if (limit < 0) {
        throw input_error(errc::bad_argument, "orbit_density: limit must be nonnegative");
    }
    if (limit >= config.orbit_cap) {
        throw resource_limit_error("orbit_density: window exceeds the orbit cap " +
                                   std::to_string(config.orbit_cap));
    }
    if (fs.seeds.empty()) {
        throw input_error(errc::empty_seed_set, "orbit_density: seed set must not be empty");
    }
    for (std::int64_t a : fs.offsets) {
        if (a < 0) {
            // x <= slope*x + a needs a >= 0; that bound is what makes the
            // windowed closure exact.
            throw input_error(errc::negative_offset,
                              "orbit_density: offsets must be nonnegative, got " +
                                  std::to_string(a));
        }
    }

    std::vector<char> in_orbit(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::int64_t> worklist;
    for (std::int64_t s : fs.seeds) {
        if (s <= limit && !in_orbit[static_cast<std::size_t>(s)]) {
            in_orbit[static_cast<std::size_t>(s)] = 1;
            worklist.push_back(s);
        }
    }
    while (!worklist.empty()) {
        std::int64_t x = worklist.back();
        worklist.pop_back();
        for (std::int64_t a : fs.offsets) {
            if (x > (limit - a) / fs.slope) continue;  // image leaves the window
            std::int64_t y = fs.slope * x + a;
            if (!in_orbit[static_cast<std::size_t>(y)]) {
                in_orbit[static_cast<std::size_t>(y)] = 1;
                worklist.push_back(y);
            }
        }
    }

    DensityReport report;
    report.limit = limit;

    // Geometric checkpoints slope^i - 1, then the window end itself.
    std::vector<std::int64_t> checkpoints;
    for (Int power = fs.slope; power - 1 < limit; power *= fs.slope) {
        checkpoints.push_back(static_cast<std::int64_t>(power - 1));
    }
    checkpoints.push_back(limit);

    std::size_t next = 0;
    std::int64_t running = 0;
    for (std::int64_t x = 0; x <= limit; ++x) {
        running += in_orbit[static_cast<std::size_t>(x)];
        while (next < checkpoints.size() && checkpoints[next] == x) {
            report.samples.push_back({x, running});
            ++next;
        }
    }
    report.orbit_count = running;
    return report;
}

}  // namespace unifree
