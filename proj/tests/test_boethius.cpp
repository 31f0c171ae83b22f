#include "rithmo/boethius.hpp"

#include <doctest.h>

#include <numeric>

using namespace rithmo;

TEST_CASE("classify canonical kinds") {
    ClassificationResult r = classify(6, 4);
    CHECK(r.canonical.kind == RatioKind::superparticular);
    CHECK(r.canonical.part_den == 2);
    CHECK(r.reduced == make_rational(3, 2));

    r = classify(15, 9);
    CHECK(r.canonical.kind == RatioKind::superpartient);
    CHECK(r.canonical.part_num == 2);
    CHECK(r.canonical.part_den == 3);

    r = classify(4, 2);
    CHECK(r.canonical.kind == RatioKind::multiple);
    CHECK(r.canonical.whole == 2);

    CHECK(classify(7, 7).canonical.kind == RatioKind::equal);

    r = classify(9, 4);
    CHECK(r.canonical.kind == RatioKind::multiple_superparticular);
    CHECK(r.canonical.whole == 2);
    CHECK(r.canonical.part_den == 4);

    r = classify(23, 6);  // 23/6 = 3 + 5/6
    CHECK(r.canonical.kind == RatioKind::multiple_superpartient);
    CHECK(r.canonical.whole == 3);
    CHECK(r.canonical.part_num == 5);
    CHECK(r.canonical.part_den == 6);

    r = classify(2, 3);
    CHECK(r.canonical.kind == RatioKind::other);
    CHECK(r.canonical.sub_ratio);

    CHECK_THROWS_AS(classify(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(classify(5, 0), std::invalid_argument);
}

TEST_CASE("literal witnesses") {
    SUBCASE("the canonical class can be inexpressible as a witness") {
        // 9 : 4 needs n = m itself, which is not a proper divisor.
        CHECK(classify(9, 4).all_representations.empty());
    }
    SUBCASE("witnesses may repeat a class with non-coprime parameters") {
        ClassificationResult r = classify(20, 12);
        REQUIRE(r.all_representations.size() == 2);
        CHECK(r.all_representations[0].kind == RatioKind::superpartient);
        CHECK(r.all_representations[0].part_num == 2);
        CHECK(r.all_representations[0].part_den == 3);
        CHECK(r.all_representations[1].part_num == 4);
        CHECK(r.all_representations[1].part_den == 6);
    }
    SUBCASE("multiples witness through divisibility") {
        ClassificationResult r = classify(12, 4);
        REQUIRE(!r.all_representations.empty());
        CHECK(r.all_representations[0].kind == RatioKind::multiple);
        CHECK(r.all_representations[0].whole == 3);
    }
    SUBCASE("every witness satisfies its own equation") {
        for (long p = 1; p <= 60; ++p) {
            for (long m = 1; m <= 60; ++m) {
                for (const auto& w : classify(p, m).all_representations) {
                    CHECK(relation_holds(p, m, w));
                }
            }
        }
    }
}

TEST_CASE("relation_holds") {
    CHECK(relation_holds(9, 4, {RatioKind::multiple_superparticular, 2, 1, 4, false}));
    CHECK(relation_holds(6, 4, {RatioKind::superparticular, 1, 1, 2, false}));
    CHECK_FALSE(relation_holds(6, 4, {RatioKind::multiple, 2, 0, 0, false}));

    SUBCASE("malformed parameters") {
        CHECK_THROWS_AS(relation_holds(6, 4, {RatioKind::multiple, 1, 0, 0, false}),
                        std::invalid_argument);
        CHECK_THROWS_AS(relation_holds(6, 4, {RatioKind::superpartient, 1, 1, 3, false}),
                        std::invalid_argument);
        CHECK_THROWS_AS(relation_holds(6, 4, {RatioKind::superparticular, 1, 1, 1, false}),
                        std::invalid_argument);
        CHECK_THROWS_AS(relation_holds(6, 4, {RatioKind::other, 0, 0, 0, false}),
                        std::invalid_argument);
    }
}

TEST_CASE("classification round trip and partition") {
    for (long p = 1; p <= 200; ++p) {
        for (long m = 1; m <= 200; ++m) {
            ClassificationResult r = classify(p, m);
            CHECK(relation_holds(p, m, r.canonical));
            const RatioClass& c = r.canonical;
            if (p > m) {
                // Exactly one of the six proper kinds, with parameters in range.
                CHECK(c.kind != RatioKind::other);
                CHECK(c.kind != RatioKind::equal);
                switch (c.kind) {
                    case RatioKind::multiple:
                        CHECK(c.whole >= 2);
                        break;
                    case RatioKind::superparticular:
                        CHECK(c.part_den >= 2);
                        break;
                    case RatioKind::superpartient:
                        CHECK(c.part_den >= 3);
                        CHECK(c.part_num >= 2);
                        CHECK(c.part_num <= c.part_den - 1);
                        CHECK(gcd(c.part_num, c.part_den) == 1);
                        break;
                    case RatioKind::multiple_superparticular:
                        CHECK(c.whole >= 2);
                        CHECK(c.part_den >= 2);
                        break;
                    case RatioKind::multiple_superpartient:
                        CHECK(c.whole >= 2);
                        CHECK(c.part_den >= 3);
                        CHECK(gcd(c.part_num, c.part_den) == 1);
                        break;
                    default:
                        break;
                }
            } else if (p == m) {
                CHECK(c.kind == RatioKind::equal);
            } else {
                CHECK(c.kind == RatioKind::other);
                CHECK(c.sub_ratio);
            }
        }
    }
}

TEST_CASE("witness enumeration is skipped for huge consequents") {
    ExactInt huge("10000000000000000");  // 10^16
    ClassificationResult r = classify(huge * 3 / 2, huge);
    CHECK_FALSE(r.witnesses_enumerated);
    CHECK(r.all_representations.empty());
    CHECK(r.canonical.kind == RatioKind::superparticular);
}
