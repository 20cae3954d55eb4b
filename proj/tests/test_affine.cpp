#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unifree/affine.hpp"
#include "unifree/errors.hpp"
#include "oracles.hpp"

using unifree::AffineMap;
using unifree::FreenessDecision;
using unifree::FunctionSystem;
using unifree::Int;
using unifree::RelationCertificate;
using unifree::SemigroupWord;

namespace {

FunctionSystem fs3_014() { return unifree::make_function_system(3, {0, 1, 4}); }

}  // namespace

TEST_CASE("system construction validates its pieces") {
    CHECK_THROWS_AS(unifree::make_function_system(1, {0, 1}), unifree::input_error);
    CHECK_THROWS_AS(unifree::make_function_system(3, {}), unifree::input_error);
    CHECK_THROWS_AS(unifree::make_function_system(3, {0, 4, 4}), unifree::input_error);
    CHECK_THROWS_AS(unifree::make_function_system(3, {0, 1}, {-2}), unifree::input_error);
    FunctionSystem fs = unifree::make_function_system(3, {4, 0, 1});
    CHECK(fs.offsets == std::vector<std::int64_t>{4, 0, 1});  // user order kept
}

TEST_CASE("compose follows leftmost-outermost orientation") {
    FunctionSystem fs = fs3_014();
    // (2,2): f2(f2(x)) = 3(3x+1)+1 = 9x+4.
    AffineMap m = unifree::compose(fs, SemigroupWord{{2, 2}});
    CHECK(m.slope == 9);
    CHECK(m.offset == 4);
    // (3,1): f3(f1(x)) = 3(3x)+4 = 9x+4.
    m = unifree::compose(fs, SemigroupWord{{3, 1}});
    CHECK(m.slope == 9);
    CHECK(m.offset == 4);
    // (1,3): f1(f3(x)) = 3(3x+4) = 9x+12.
    m = unifree::compose(fs, SemigroupWord{{1, 3}});
    CHECK(m.offset == 12);
    // Empty word is the identity.
    m = unifree::compose(fs, SemigroupWord{});
    CHECK(m.slope == 1);
    CHECK(m.offset == 0);
    CHECK_THROWS_AS(unifree::compose(fs, SemigroupWord{{4}}), unifree::input_error);
    CHECK_THROWS_AS(unifree::compose(fs, SemigroupWord{{0}}), unifree::input_error);
}

TEST_CASE("compose respects concatenation") {
    std::mt19937 rng(60302);
    FunctionSystem fs = unifree::make_function_system(4, {0, 3, 7, 9});
    for (int trial = 0; trial < 100; ++trial) {
        SemigroupWord w1, w2;
        for (std::size_t i = 0; i < rng() % 6; ++i) {
            w1.letters.push_back(static_cast<std::int32_t>(1 + rng() % 4));
        }
        for (std::size_t i = 0; i < rng() % 6; ++i) {
            w2.letters.push_back(static_cast<std::int32_t>(1 + rng() % 4));
        }
        SemigroupWord cat = w1;
        cat.letters.insert(cat.letters.end(), w2.letters.begin(), w2.letters.end());
        AffineMap a = unifree::compose(fs, w1);
        AffineMap b = unifree::compose(fs, w2);
        AffineMap c = unifree::compose(fs, cat);
        // Leftmost outermost: the concatenation applies w2 first, then w1.
        CHECK(c.slope == a.slope * b.slope);
        CHECK(c.offset == a.slope * b.offset + a.offset);
    }
}

TEST_CASE("the canonical non-free triple yields the worked relation") {
    FreenessDecision decision = unifree::decide_free(fs3_014());
    REQUIRE_FALSE(decision.free);
    REQUIRE(decision.certificate.has_value());
    const RelationCertificate& cert = *decision.certificate;
    CHECK(cert.left.letters == std::vector<std::int32_t>{2, 2});
    CHECK(cert.right.letters == std::vector<std::int32_t>{3, 1});
    CHECK(cert.composite.slope == 9);
    CHECK(cert.composite.offset == 4);
    CHECK(unifree::verify_relation(fs3_014(), cert));
    REQUIRE(decision.witness.has_value());
    CHECK(decision.witness->number == 4);
}

TEST_CASE("more maps than slope yields the short worked relation") {
    FunctionSystem fs = unifree::make_function_system(2, {0, 1, 2});
    FreenessDecision decision = unifree::decide_free(fs);
    REQUIRE_FALSE(decision.free);
    CHECK(decision.certificate->left.letters == std::vector<std::int32_t>{1, 2});
    CHECK(decision.certificate->right.letters == std::vector<std::int32_t>{3, 1});
    CHECK(decision.certificate->composite.slope == 4);
    CHECK(decision.certificate->composite.offset == 2);
}

TEST_CASE("free families pass and carry no certificate") {
    CHECK(unifree::decide_free(unifree::make_function_system(5, {0, 1, 2, 3, 4})).free);
    CHECK(unifree::decide_free(unifree::make_function_system(4, {0, 1, 8, 9})).free);
    CHECK(unifree::decide_free(unifree::make_function_system(2, {0, 2})).free);
    CHECK(unifree::decide_free(unifree::make_function_system(7, {3})).free);
    CHECK_FALSE(unifree::decide_free(unifree::make_function_system(5, {0, 1, 2, 3, 4}))
                    .certificate.has_value());
}

TEST_CASE("shifted and scaled offsets keep the decision and adapt the relation") {
    // {3x+3, 3x+5, 3x+9} reduces by shift 3, scale 2 to the canonical triple.
    FunctionSystem fs = unifree::make_function_system(3, {3, 5, 9});
    FreenessDecision decision = unifree::decide_free(fs);
    REQUIRE_FALSE(decision.free);
    CHECK(decision.reduction.shift == 3);
    CHECK(decision.reduction.scale == 2);
    CHECK(decision.reduction.core == unifree::validate(3, {0, 1, 3}));
    CHECK(decision.certificate->left.letters == std::vector<std::int32_t>{1, 2});
    CHECK(decision.certificate->right.letters == std::vector<std::int32_t>{3, 1});
    CHECK(decision.certificate->composite.slope == 9);
    CHECK(decision.certificate->composite.offset == 18);
    CHECK(unifree::verify_relation(fs, *decision.certificate));
}

TEST_CASE("freeness is invariant under shift and positive scaling") {
    std::mt19937 rng(88410);
    for (int trial = 0; trial < 150; ++trial) {
        std::int64_t slope = 2 + static_cast<std::int64_t>(rng() % 4);
        std::set<std::int64_t> picked;
        std::uniform_int_distribution<std::int64_t> pick(0, 20);
        std::size_t want = 2 + rng() % static_cast<std::size_t>(slope);
        while (picked.size() < want) picked.insert(pick(rng));
        std::vector<std::int64_t> offsets(picked.begin(), picked.end());
        bool base_free =
            unifree::decide_free(unifree::make_function_system(slope, offsets)).free;

        for (std::int64_t shift : {-7, -1, 3, 7}) {
            std::vector<std::int64_t> shifted;
            for (std::int64_t a : offsets) shifted.push_back(a + shift);
            FreenessDecision moved =
                unifree::decide_free(unifree::make_function_system(slope, shifted));
            CAPTURE(slope);
            CAPTURE(offsets);
            CAPTURE(shift);
            CHECK(moved.free == base_free);
            if (!moved.free) {
                CHECK(unifree::verify_relation(
                    unifree::make_function_system(slope, shifted), *moved.certificate));
            }
        }
        for (std::int64_t scale : {2, 3, 5}) {
            std::vector<std::int64_t> scaled;
            for (std::int64_t a : offsets) scaled.push_back(a * scale);
            CHECK(unifree::decide_free(unifree::make_function_system(slope, scaled)).free ==
                  base_free);
        }
    }
}

TEST_CASE("relations found match the brute-force shortest relation length") {
    std::mt19937 rng(27182);
    for (int trial = 0; trial < 80; ++trial) {
        std::int64_t slope = 2 + static_cast<std::int64_t>(rng() % 2);
        std::set<std::int64_t> picked;
        std::uniform_int_distribution<std::int64_t> pick(0, 12);
        std::size_t want = 2 + rng() % 2;
        while (picked.size() < want) picked.insert(pick(rng));
        FunctionSystem fs = unifree::make_function_system(
            slope, std::vector<std::int64_t>(picked.begin(), picked.end()));
        FreenessDecision decision = unifree::decide_free(fs);
        auto brute = oracles::shortest_relation_length(fs, 6);
        CAPTURE(fs.slope);
        CAPTURE(fs.offsets);
        if (decision.free) {
            CHECK_FALSE(brute.has_value());
        } else if (brute.has_value()) {
            CHECK(decision.certificate->left.letters.size() ==
                  static_cast<std::size_t>(*brute));
        }
    }
}

TEST_CASE("prime fast path agrees with the full decision") {
    CHECK(unifree::prime_fast_path_free(unifree::make_function_system(2, {0, 1})));
    CHECK(unifree::prime_fast_path_free(unifree::make_function_system(2, {0, 2})));
    CHECK_FALSE(unifree::prime_fast_path_free(fs3_014()));
    CHECK(unifree::prime_fast_path_free(unifree::make_function_system(3, {3, 5, 9})) ==
          unifree::decide_free(unifree::make_function_system(3, {3, 5, 9})).free);

    CHECK_THROWS_AS(unifree::prime_fast_path_free(unifree::make_function_system(4, {0, 1, 2, 3})),
                    unifree::input_error);
    CHECK_THROWS_AS(unifree::prime_fast_path_free(unifree::make_function_system(3, {0, 1})),
                    unifree::input_error);

    std::mt19937 rng(5090);
    for (int trial = 0; trial < 400; ++trial) {
        std::int64_t p = (trial % 3 == 0) ? 2 : ((trial % 3 == 1) ? 3 : 5);
        std::set<std::int64_t> picked;
        std::uniform_int_distribution<std::int64_t> pick(0, 30);
        while (picked.size() < static_cast<std::size_t>(p)) picked.insert(pick(rng));
        FunctionSystem fs = unifree::make_function_system(
            p, std::vector<std::int64_t>(picked.begin(), picked.end()));
        CAPTURE(fs.slope);
        CAPTURE(fs.offsets);
        CHECK(unifree::prime_fast_path_free(fs) == unifree::decide_free(fs).free);
    }
}

TEST_CASE("relation verifier rejects tampering") {
    RelationCertificate cert = *unifree::decide_free(fs3_014()).certificate;
    REQUIRE(unifree::verify_relation(fs3_014(), cert));

    RelationCertificate wrong_composite = cert;
    wrong_composite.composite.offset += 1;
    CHECK_FALSE(unifree::verify_relation(fs3_014(), wrong_composite));

    RelationCertificate equal_words = cert;
    equal_words.right = equal_words.left;
    CHECK_FALSE(unifree::verify_relation(fs3_014(), equal_words));

    RelationCertificate bad_letter = cert;
    bad_letter.left.letters[0] = 9;
    CHECK_FALSE(unifree::verify_relation(fs3_014(), bad_letter));

    RelationCertificate unequal = cert;
    unequal.left.letters = {1, 2};  // composes to 9x+3, not the right side
    CHECK_FALSE(unifree::verify_relation(fs3_014(), unequal));

    RelationCertificate empty_word = cert;
    empty_word.right.letters = {};
    CHECK_FALSE(unifree::verify_relation(fs3_014(), empty_word));
}

TEST_CASE("orbit density on the worked windows") {
    FunctionSystem doubling = unifree::make_function_system(2, {0, 1}, {0});
    unifree::DensityReport full = unifree::orbit_density(doubling, 255);
    CHECK(full.orbit_count == 256);  // every natural number is reachable

    FunctionSystem evens = unifree::make_function_system(2, {0, 2}, {0});
    unifree::DensityReport half = unifree::orbit_density(evens, 255);
    CHECK(half.orbit_count == 128);  // {0} together with the positive evens

    // Checkpoints: 2^i - 1 strictly below the limit, then the limit itself.
    REQUIRE(half.samples.size() == 8);
    CHECK(half.samples.front().limit == 1);
    CHECK(half.samples[6].limit == 127);
    CHECK(half.samples.back().limit == 255);
    CHECK(half.samples.back().count == half.orbit_count);
}

TEST_CASE("orbit density matches backward reachability on random systems") {
    std::mt19937 rng(140100);
    for (int trial = 0; trial < 60; ++trial) {
        std::int64_t slope = 2 + static_cast<std::int64_t>(rng() % 3);
        std::set<std::int64_t> picked;
        std::uniform_int_distribution<std::int64_t> pick(0, 9);
        std::size_t want = 1 + rng() % 3;
        while (picked.size() < want) picked.insert(pick(rng));
        std::vector<std::int64_t> seeds{static_cast<std::int64_t>(rng() % 4)};
        FunctionSystem fs = unifree::make_function_system(
            slope, std::vector<std::int64_t>(picked.begin(), picked.end()), seeds);
        unifree::DensityReport report = unifree::orbit_density(fs, 500);
        std::vector<char> oracle = oracles::orbit_by_backward_dp(fs, 500);
        std::int64_t expected = 0;
        for (char bit : oracle) expected += bit;
        CAPTURE(fs.slope);
        CAPTURE(fs.offsets);
        CAPTURE(fs.seeds);
        CHECK(report.orbit_count == expected);
    }
}

TEST_CASE("orbit density input contract") {
    CHECK_THROWS_AS(
        unifree::orbit_density(unifree::make_function_system(2, {0, 1}), 10),
        unifree::input_error);  // no seeds
    CHECK_THROWS_AS(
        unifree::orbit_density(unifree::make_function_system(2, {-2, 0}, {0}), 10),
        unifree::input_error);  // negative offset breaks the window argument
    unifree::Config tiny;
    tiny.orbit_cap = 8;
    CHECK_THROWS_AS(
        unifree::orbit_density(unifree::make_function_system(2, {0, 1}, {0}), 100, tiny),
        unifree::resource_limit_error);
}
