#include "unifree/cutset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "unifree/errors.hpp"
#include "unifree/int_math.hpp"
#include "unifree/polynomial.hpp"

namespace unifree {

namespace {

// Explored tree nodes are capped so hostile inputs cannot blow up the DFS;
// desk-scale systems stay far below this.
constexpr std::int64_t kTreeNodeCap = std::int64_t(1) << 24;

void require_zero_digit(const DigitSystem& ds, const char* where) {
    if (!ds.contains_zero()) {
        throw input_error(errc::missing_zero_digit,
                          std::string(where) + ": digit set must contain 0");
    }
}

bool well_formed_vertex(std::int64_t base, const TreeVertex& v) {
    if (v.level < 1 || v.numerator < 1) return false;
    std::int64_t cap = pow_checked(base, v.level);
    if (cap < 0) return false;  // level too deep to even represent
    return v.numerator < cap && v.numerator % base != 0;
}

// (k1, j1) is a strict ancestor of (k2, j2) iff the level-j1 prefix of the
// deeper vertex's digit string equals k1.
bool is_ancestor(std::int64_t base, const TreeVertex& a, const TreeVertex& b) {
    if (a.level >= b.level) return false;
    std::int64_t mod = pow_checked(base, a.level);
    if (mod < 0) return false;
    return b.numerator % mod == a.numerator;
}

struct CanonicalVertexOrder {
    bool operator()(const TreeVertex& a, const TreeVertex& b) const {
        if (a.level != b.level) return a.level < b.level;
        return a.numerator < b.numerator;
    }
};

}  // namespace

std::int64_t vertex_order(std::int64_t base, const TreeVertex& v) {
    if (base < 2) throw input_error(errc::base_too_small, "vertex_order: base < 2");
    std::int64_t power = pow_checked(base, v.level);
    if (power < 0 || !well_formed_vertex(base, v)) {
        throw input_error(errc::bad_argument, "vertex_order: not a tree vertex");
    }
    return power / std::gcd(v.numerator, power);
}

RootSet mask_tree_roots(const DigitSystem& ds) {
    require_zero_digit(ds, "mask_tree_roots");
    RootSet roots;
    const IntPolynomial mask = digit_polynomial(ds);
    for (std::int64_t d : admissible_orders(mask, ds.base)) {
        if (!vanishes_at_order(mask, d)) continue;
        roots.orders.push_back(d);
        // All vertices carrying a primitive d-th root of unity live at the
        // single level where d first divides base^level.
        std::int64_t level = min_power_level(d, ds.base);
        std::int64_t power = pow_checked(ds.base, level);
        if (power < 0) {
            throw input_error(errc::bad_argument,
                              "mask_tree_roots: root level overflows the numerator range");
        }
        std::int64_t step = power / d;
        for (std::int64_t t = 1; t < d; ++t) {
            if (std::gcd(t, d) == 1) roots.vertices.push_back({t * step, level});
        }
        roots.max_level = std::max(roots.max_level, level);
    }
    std::sort(roots.vertices.begin(), roots.vertices.end(), CanonicalVertexOrder{});
    return roots;
}

CutDecision has_cut_set(const DigitSystem& ds) {
    require_zero_digit(ds, "has_cut_set");
    if (static_cast<std::int64_t>(ds.digits.size()) != ds.base) {
        throw input_error(errc::digit_count_mismatch,
                          "has_cut_set: cut-set criterion needs exactly base-many digits");
    }

    CutDecision decision;
    decision.roots = mask_tree_roots(ds);

    const std::int64_t target = std::max<std::int64_t>(decision.roots.max_level, 1);
    std::set<TreeVertex> root_lookup(decision.roots.vertices.begin(),
                                     decision.roots.vertices.end());

    // First-hit DFS: stop a branch at the first mask root; a branch that
    // reaches the target level uncut is a counterexample path.
    std::vector<TreeVertex> hits;
    std::vector<std::int64_t> digits;  // path digits d_0 .. d_{level-1}
    std::int64_t visited = 0;

    // Returns true while no uncut path has been found.
    auto dfs = [&](auto&& self, std::int64_t numerator, std::int64_t level,
                   std::int64_t power) -> bool {
        if (++visited > kTreeNodeCap) {
            throw resource_limit_error("has_cut_set: explored more than " +
                                       std::to_string(kTreeNodeCap) + " tree nodes");
        }
        if (root_lookup.count({numerator, level})) {
            hits.push_back({numerator, level});
            return true;
        }
        if (level == target) {
            decision.path = UncutPath{digits};
            return false;
        }
        for (std::int64_t e = 0; e < ds.base; ++e) {
            digits.push_back(e);
            if (!self(self, numerator + e * power, level + 1, power * ds.base)) return false;
            digits.pop_back();
        }
        return true;
    };

    decision.has_cut = true;
    for (std::int64_t d0 = 1; d0 < ds.base && decision.has_cut; ++d0) {
        digits.assign(1, d0);
        if (!dfs(dfs, d0, 1, ds.base)) decision.has_cut = false;
    }

    if (decision.has_cut) {
        std::sort(hits.begin(), hits.end(), CanonicalVertexOrder{});
        CutCertificate cert;
        cert.vertices = std::move(hits);
        cert.depth = cert.vertices.back().level;
        decision.certificate = std::move(cert);
    }
    return decision;
}

bool verify_cut_certificate(const DigitSystem& ds, const CutCertificate& cert) {
    try {
        if (!ds.contains_zero() || cert.vertices.empty() || cert.depth < 1) return false;

        const IntPolynomial mask = digit_polynomial(ds);
        std::int64_t max_level = 0;
        std::set<TreeVertex> lookup;
        for (const TreeVertex& v : cert.vertices) {
            if (!well_formed_vertex(ds.base, v)) return false;
            if (!lookup.insert(v).second) return false;  // duplicate
            if (!vanishes_at_order(mask, vertex_order(ds.base, v))) return false;
            max_level = std::max(max_level, v.level);
        }
        if (max_level != cert.depth) return false;

        for (const TreeVertex& a : cert.vertices) {
            for (const TreeVertex& b : cert.vertices) {
                if (is_ancestor(ds.base, a, b)) return false;
            }
        }

        // Every path down to `depth` must meet the antichain.
        std::int64_t visited = 0;
        auto covered = [&](auto&& self, std::int64_t numerator, std::int64_t level,
                           std::int64_t power) -> bool {
            if (++visited > kTreeNodeCap) return false;
            if (lookup.count({numerator, level})) return true;
            if (level == cert.depth) return false;
            for (std::int64_t e = 0; e < ds.base; ++e) {
                if (!self(self, numerator + e * power, level + 1, power * ds.base)) {
                    return false;
                }
            }
            return true;
        };
        for (std::int64_t d0 = 1; d0 < ds.base; ++d0) {
            if (!covered(covered, d0, 1, ds.base)) return false;
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

bool verify_uncut_path(const DigitSystem& ds, const UncutPath& path,
                       std::int64_t expected_length) {
    try {
        if (!ds.contains_zero()) return false;
        if (static_cast<std::int64_t>(path.digits.size()) != expected_length) return false;
        if (expected_length < 1) return false;

        const IntPolynomial mask = digit_polynomial(ds);
        std::int64_t numerator = 0;
        std::int64_t power = 1;
        const std::int64_t power_cap =
            std::numeric_limits<std::int64_t>::max() / ds.base;
        for (std::size_t t = 0; t < path.digits.size(); ++t) {
            std::int64_t e = path.digits[t];
            if (e < 0 || e >= ds.base) return false;
            if (t == 0 && e == 0) return false;  // level-1 numerator must be nonzero
            if (power > power_cap) return false;  // numerator range exhausted
            numerator += e * power;
            power *= ds.base;
            TreeVertex v{numerator, static_cast<std::int64_t>(t) + 1};
            if (!well_formed_vertex(ds.base, v)) return false;
            if (vanishes_at_order(mask, vertex_order(ds.base, v))) return false;
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace unifree
