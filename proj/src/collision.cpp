#include "unifree/collision.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "unifree/errors.hpp"

namespace unifree {

namespace {

void require_zero_digit(const DigitSystem& ds, const char* where) {
    if (!ds.contains_zero()) {
        throw input_error(errc::missing_zero_digit,
                          std::string(where) + ": digit set must contain 0");
    }
}

// Strip most-significant zeros; tuples are least-significant first.
void strip_high_zeros(std::vector<std::int64_t>& digits) {
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
}

Int tuple_value(const DigitSystem& ds, const std::vector<std::int64_t>& digits) {
    Int value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        value = value * ds.base + *it;
    }
    return value;
}

}  // namespace

UniquenessDecision decide_unique(const DigitSystem& ds, const Config& config) {
    require_zero_digit(ds, "decide_unique");

    // Carry automaton over s -> (s + a - b) / base. A return to carry 0 after
    // at least one step spells two distinct digit strings with equal value;
    // breadth-first order makes the found collision shortest.
    struct Step {
        std::int64_t prev;
        std::int64_t digit_a;
        std::int64_t digit_b;
    };
    std::map<std::int64_t, Step> parent;  // state -> first discovered inbound edge
    std::deque<std::int64_t> queue;

    std::optional<Step> closing;  // edge that re-enters state 0
    // First step must pick distinct digits: a shortest collision has its
    // strings differ already at position 0 (a common prefix could be cut).
    for (std::int64_t a : ds.digits) {
        if (closing) break;
        for (std::int64_t b : ds.digits) {
            if (a == b) continue;
            if ((a - b) % ds.base != 0) continue;
            std::int64_t s = (a - b) / ds.base;
            // s == 0 is impossible here (it would force a == b).
            if (!parent.count(s)) {
                parent.emplace(s, Step{0, a, b});
                queue.push_back(s);
            }
        }
    }

    while (!closing && !queue.empty()) {
        std::int64_t s = queue.front();
        queue.pop_front();
        for (std::int64_t a : ds.digits) {
            if (closing) break;
            for (std::int64_t b : ds.digits) {
                if ((s + a - b) % ds.base != 0) continue;
                std::int64_t next = (s + a - b) / ds.base;
                if (next == 0) {
                    closing = Step{s, a, b};
                    break;
                }
                if (!parent.count(next)) {
                    if (static_cast<std::int64_t>(parent.size()) >=
                        config.carry_state_cap) {
                        throw resource_limit_error(
                            "decide_unique: more than " +
                            std::to_string(config.carry_state_cap) +
                            " carry states enqueued");
                    }
                    parent.emplace(next, Step{s, a, b});
                    queue.push_back(next);
                }
            }
        }
    }

    UniquenessDecision decision;
    if (!closing) {
        decision.unique = true;
        return decision;
    }

    // Walk the parent chain back to state 0, collecting digit pairs from the
    // most significant position down.
    std::vector<std::int64_t> digits_a{closing->digit_a};
    std::vector<std::int64_t> digits_b{closing->digit_b};
    std::int64_t state = closing->prev;
    while (state != 0) {
        const Step& step = parent.at(state);
        digits_a.push_back(step.digit_a);
        digits_b.push_back(step.digit_b);
        state = step.prev;
    }
    std::reverse(digits_a.begin(), digits_a.end());
    std::reverse(digits_b.begin(), digits_b.end());

    strip_high_zeros(digits_a);
    strip_high_zeros(digits_b);

    CollisionWitness witness;
    witness.number = tuple_value(ds, digits_a);
    // Canonical order: shorter tuple first, lexicographic as tie break.
    bool a_first = digits_a.size() != digits_b.size()
                       ? digits_a.size() < digits_b.size()
                       : digits_a < digits_b;
    witness.expansion_a = a_first ? std::move(digits_a) : std::move(digits_b);
    witness.expansion_b = a_first ? std::move(digits_b) : std::move(digits_a);

    if (!verify_witness(ds, witness)) {
        throw internal_error("decide_unique: constructed witness failed verification");
    }
    decision.witness = std::move(witness);
    return decision;
}

Int count_expansions(const DigitSystem& ds, const Int& k) {
    if (k < 0) return 0;
    std::map<Int, Int> memo{{Int(0), Int(1)}};  // b(0) = 1: the empty tuple

    // Iterative post-order over the recurrence b(k) = sum b((k - a)/base).
    std::vector<Int> stack{k};
    while (!stack.empty()) {
        Int top = stack.back();
        if (memo.count(top)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        Int total = 0;
        for (std::int64_t a : ds.digits) {
            if (a > top) break;  // digits ascend
            if ((top - a) % ds.base != 0) continue;
            Int child = (top - a) / ds.base;
            auto it = memo.find(child);
            if (it == memo.end()) {
                stack.push_back(child);
                ready = false;
            } else if (ready) {
                total += it->second;
            }
        }
        if (ready) {
            memo.emplace(top, total);
            stack.pop_back();
        }
    }
    return memo.at(k);
}

WeakUniquenessDecision decide_weak_unique(const DigitSystem& ds, const Config& config) {
    if (ds.contains_zero()) {
        throw input_error(errc::smallest_digit_is_zero,
                          "decide_weak_unique: needs all-positive digits; weak and "
                          "plain uniqueness coincide once 0 is a digit");
    }
    // Equal-length tuples for A collide iff tuples for the shifted set
    // {0, a_2 - a_1, ...} collide; the shift cancels positionwise.
    std::vector<std::int64_t> shifted;
    shifted.reserve(ds.digits.size());
    for (std::int64_t a : ds.digits) shifted.push_back(a - ds.digits.front());
    DigitSystem shifted_system = validate(ds.base, std::move(shifted));

    WeakUniquenessDecision decision;
    UniquenessDecision inner = decide_unique(shifted_system, config);
    decision.weakly_unique = inner.unique;
    decision.shifted_witness = std::move(inner.witness);
    return decision;
}

bool verify_witness(const DigitSystem& ds, const CollisionWitness& witness) {
    const std::set<std::int64_t> digit_set(ds.digits.begin(), ds.digits.end());
    auto well_formed = [&](const std::vector<std::int64_t>& digits) {
        if (digits.empty() || digits.back() == 0) return false;
        for (std::int64_t a : digits) {
            if (!digit_set.count(a)) return false;
        }
        return true;
    };
    if (!well_formed(witness.expansion_a) || !well_formed(witness.expansion_b)) {
        return false;
    }
    if (witness.expansion_a == witness.expansion_b) return false;
    return tuple_value(ds, witness.expansion_a) == witness.number &&
           tuple_value(ds, witness.expansion_b) == witness.number;
}

}  // namespace unifree
