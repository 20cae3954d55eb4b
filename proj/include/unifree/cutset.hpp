#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unifree/digit_system.hpp"

namespace unifree {

// The rational k / base^level with 0 < k < base^level and k not divisible by
// base: the canonical form of a non-root vertex of the n-ary tree.
struct TreeVertex {
    std::int64_t numerator = 0;
    std::int64_t level = 0;

    auto operator<=>(const TreeVertex&) const = default;
};

// Multiplicative order of exp(-2*pi*i * numerator / base^level).
std::int64_t vertex_order(std::int64_t base, const TreeVertex& v);

// All tree vertices at which the digit polynomial vanishes, with the
// cyclotomic orders that produced them.
struct RootSet {
    std::vector<TreeVertex> vertices;  // sorted by (level, numerator)
    std::vector<std::int64_t> orders;  // ascending
    std::int64_t max_level = 0;        // 0 when empty
};

// An antichain of mask-root vertices meeting every root path once.
struct CutCertificate {
    std::vector<TreeVertex> vertices;
    std::int64_t depth = 0;
};

// Digits d_0 ... d_{J-1} of a path from the root whose vertices are all mask
// non-roots; the level-t vertex has numerator d_0 + d_1*n + ... + d_{t-1}*n^{t-1}.
struct UncutPath {
    std::vector<std::int64_t> digits;
};

struct CutDecision {
    RootSet roots;
    bool has_cut = false;
    std::optional<CutCertificate> certificate;  // set iff has_cut
    std::optional<UncutPath> path;              // set iff !has_cut
};

// Locates every mask root among tree vertices. Requires 0 among the digits.
RootSet mask_tree_roots(const DigitSystem& ds);

// Decides existence of a cut set of mask roots by first-hit DFS down to the
// deepest root level. Requires 0 among the digits and |digits| == base.
CutDecision has_cut_set(const DigitSystem& ds);

// Re-checks a certificate from scratch: vertices well-formed and mask roots,
// antichain, and every path of length `depth` covered. False on malformed
// input, never throws.
bool verify_cut_certificate(const DigitSystem& ds, const CutCertificate& cert);

// Re-checks that every vertex along the path is a mask non-root and the path
// has the claimed length. Used to audit negative decisions.
bool verify_uncut_path(const DigitSystem& ds, const UncutPath& path, std::int64_t expected_length);

}  // namespace unifree
