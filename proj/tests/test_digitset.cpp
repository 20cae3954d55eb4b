#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unifree/digit_system.hpp"
#include "unifree/errors.hpp"
#include "oracles.hpp"

using unifree::DigitSystem;
using unifree::errc;
using unifree::input_error;
using unifree::NormalizationRecord;
using unifree::ResidueProfile;

namespace {

errc code_of(void (*fn)()) {
    try {
        fn();
    } catch (const input_error& e) {
        return e.code();
    }
    FAIL("expected an input_error");
    return errc::bad_argument;
}

}  // namespace

TEST_CASE("validate sorts digits and keeps base") {
    DigitSystem ds = unifree::validate(4, {9, 0, 8, 1});
    CHECK(ds.base == 4);
    CHECK(ds.digits == std::vector<std::int64_t>{0, 1, 8, 9});
    CHECK(ds.contains_zero());
    CHECK(ds.max_digit() == 9);
}

TEST_CASE("validate rejects each malformed input with its own code") {
    CHECK(code_of([] { unifree::validate(1, {0, 1}); }) == errc::base_too_small);
    CHECK(code_of([] { unifree::validate(3, {}); }) == errc::empty_digits);
    CHECK(code_of([] { unifree::validate(3, {0, -2}); }) == errc::negative_digit);
    CHECK(code_of([] { unifree::validate(3, {0, 4, 4}); }) == errc::duplicate_digit);
}

TEST_CASE("normalize shifts to zero and scales to coprime digits") {
    // {3, 5, 9}: shift 3, remaining {0, 2, 6} have gcd 2, core {0, 1, 3}.
    NormalizationRecord rec = unifree::normalize(unifree::validate(3, {3, 5, 9}));
    CHECK(rec.shift == 3);
    CHECK(rec.scale == 2);
    CHECK(rec.core == unifree::validate(3, {0, 1, 3}));
}

TEST_CASE("normalize of a single digit uses scale 1") {
    NormalizationRecord rec = unifree::normalize(unifree::validate(5, {7}));
    CHECK(rec.shift == 7);
    CHECK(rec.scale == 1);
    CHECK(rec.core.digits == std::vector<std::int64_t>{0});
}

TEST_CASE("normalize is idempotent on cores") {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t base = 2 + static_cast<std::int64_t>(rng() % 6);
        std::size_t count = 2 + rng() % 5;
        DigitSystem ds = oracles::random_digit_system(rng, base, count, 40);
        NormalizationRecord rec = unifree::normalize(ds);
        NormalizationRecord again = unifree::normalize(rec.core);
        CHECK(again.shift == 0);
        CHECK(again.scale == 1);
        CHECK(again.core == rec.core);
        // Round trip: shift + scale * core digit reproduces the original.
        for (std::size_t i = 0; i < ds.digits.size(); ++i) {
            CHECK(ds.digits[i] == rec.shift + rec.scale * rec.core.digits[i]);
        }
    }
}

TEST_CASE("residue profile of the worked base-4 family") {
    ResidueProfile profile = unifree::residue_profile(unifree::validate(4, {0, 1, 8, 9}));
    CHECK(profile.residues == std::vector<std::int64_t>{0, 1, 0, 1});
    CHECK_FALSE(profile.distinct);
    CHECK(profile.irreducible);  // gcd(1, 8, 9, 4) = 1
}

TEST_CASE("residue profile flags reducible systems") {
    ResidueProfile profile = unifree::residue_profile(unifree::validate(4, {0, 2, 6}));
    CHECK_FALSE(profile.irreducible);  // gcd(2, 6, 4) = 2
    CHECK_FALSE(profile.distinct);
    ResidueProfile standard = unifree::residue_profile(unifree::validate(3, {0, 1, 2}));
    CHECK(standard.distinct);
    CHECK(standard.irreducible);
}

TEST_CASE("a single-digit system is never irreducible") {
    // The gcd over the (empty) difference set and the base is the base.
    CHECK_FALSE(unifree::residue_profile(unifree::validate(4, {5})).irreducible);
}

TEST_CASE("composite family reproduces the worked base-4 digit set") {
    CHECK(unifree::composite_family(2, 2) == unifree::validate(4, {0, 1, 8, 9}));
}

TEST_CASE("composite family layout for asymmetric factors") {
    // n1=2, n2=3: base 6, digits u*12 + v for u < 3, v < 2.
    CHECK(unifree::composite_family(2, 3) ==
          unifree::validate(6, {0, 1, 12, 13, 24, 25}));
    // n1=3, n2=2: base 6, digits u*18 + v for u < 2, v < 3.
    CHECK(unifree::composite_family(3, 2) ==
          unifree::validate(6, {0, 1, 2, 18, 19, 20}));
}

TEST_CASE("composite family is irreducible with clashing residues") {
    for (std::int64_t n1 = 2; n1 <= 4; ++n1) {
        for (std::int64_t n2 = 2; n2 <= 3; ++n2) {
            DigitSystem ds = unifree::composite_family(n1, n2);
            CHECK(static_cast<std::int64_t>(ds.digits.size()) == n1 * n2);
            ResidueProfile profile = unifree::residue_profile(ds);
            CHECK(profile.irreducible);
            CHECK_FALSE(profile.distinct);
        }
    }
    CHECK_THROWS_AS(unifree::composite_family(1, 4), input_error);
}
