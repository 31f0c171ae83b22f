#include "rithmo/fibcore.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <vector>

using namespace rithmo;

TEST_CASE("fib matches the reference rows") {
    const std::vector<long> row0_14 = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377};
    for (std::size_t i = 0; i < row0_14.size(); ++i) {
        CHECK(fib(static_cast<std::int64_t>(i)) == row0_14[i]);
    }
    const std::vector<long> row_neg6_6 = {-8, 5, -3, 2, -1, 1, 0, 1, 1, 2, 3, 5, 8};
    for (std::size_t i = 0; i < row_neg6_6.size(); ++i) {
        CHECK(fib(static_cast<std::int64_t>(i) - 6) == row_neg6_6[i]);
    }
}

TEST_CASE("fast doubling agrees with the naive recurrence oracle") {
    for (std::int64_t k = -300; k <= 300; ++k) {
        CHECK(fib(k) == testing::naive_fib(k));
    }
}

TEST_CASE("recurrence and negation symmetry") {
    for (std::int64_t k = -200; k <= 200; ++k) {
        CHECK(fib(k + 1) == fib(k) + fib(k - 1));
    }
    for (std::int64_t k = 1; k <= 200; ++k) {
        CHECK(fib(-k) == neg_one_pow(k + 1) * fib(k));
    }
}

TEST_CASE("gfib") {
    SUBCASE("worked values") {
        CHECK(gfib({1, 2}, 3) == 3);
        CHECK(gfib({1, 1}, 7) == 13);
        CHECK(gfib({1, 3}, 5) == 11);
    }
    SUBCASE("matches the naive recurrence both directions") {
        std::vector<GeneralizedFibSeed> seeds = {{1, 2}, {2, 5}, {-3, 7}, {0, 1}, {4, 0}, {-5, -8}};
        for (const auto& seed : seeds) {
            for (std::int64_t m = -50; m <= 50; ++m) {
                CHECK(gfib(seed, m) == testing::naive_gfib(seed, m));
            }
        }
    }
    SUBCASE("standard seed reduces to fib") {
        for (std::int64_t m = -30; m <= 30; ++m) {
            CHECK(gfib({1, 1}, m) == fib(m));
        }
    }
    SUBCASE("closed form for seed (1, n)") {
        for (std::int64_t n = 1; n <= 9; ++n) {
            GeneralizedFibSeed seed(1, n);
            for (std::int64_t m = 1; m <= 200; ++m) {
                CHECK(gfib(seed, m) == fib(m - 1) * n + fib(m - 2));
            }
        }
    }
    SUBCASE("all-zero seed is rejected") {
        CHECK_THROWS_AS(GeneralizedFibSeed(0, 0), std::invalid_argument);
    }
}

TEST_CASE("characteristic") {
    CHECK(characteristic({1, 1}) == 1);
    CHECK(characteristic({1, 2}) == -1);
    CHECK(characteristic({1, 9}) == -71);

    SUBCASE("equals the seed determinant") {
        GeneralizedFibSeed seed(3, 7);
        ExactInt g1 = gfib(seed, 1), g2 = gfib(seed, 2), g3 = gfib(seed, 3);
        CHECK(characteristic(seed) == g3 * g1 - g2 * g2);
    }
    SUBCASE("determinant alternates in sign and is invariant in magnitude") {
        for (const auto& seed : std::vector<GeneralizedFibSeed>{{1, 4}, {2, 5}, {-3, 2}}) {
            ExactInt mu = characteristic(seed);
            for (std::int64_t m = 1; m <= 100; ++m) {
                ExactInt det = gfib(seed, m + 2) * gfib(seed, m) -
                               gfib(seed, m + 1) * gfib(seed, m + 1);
                CHECK(det == neg_one_pow(m + 1) * mu);
                CHECK(abs(det) == abs(mu));
            }
        }
    }
}

TEST_CASE("phi_power") {
    CHECK(phi_power(1) == GoldenElement{1, 0});
    CHECK(phi_power(2) == GoldenElement{1, 1});  // phi^2 = phi + 1
    CHECK(phi_power(5) == GoldenElement{5, 3});

    SUBCASE("two computation paths agree") {
        for (std::int64_t k = 0; k <= 200; ++k) {
            GoldenElement e = phi_power(k);
            CHECK(e.u == fib(k));
            CHECK(e.v == fib(k - 1));
        }
    }
    SUBCASE("negative index is rejected") {
        CHECK_THROWS_AS(phi_power(-1), std::invalid_argument);
    }
}

TEST_CASE("fib_ratio") {
    CHECK(fib_ratio(5) == make_rational(8, 5));
    CHECK(fib_ratio(1) == make_rational(1, 1));
    CHECK(fib_ratio(-5) == make_rational(-3, 5));
    CHECK_THROWS_AS(fib_ratio(0), std::domain_error);

    SUBCASE("error against alpha shrinks strictly and alternates sides") {
        const int digits = 60;
        Decimal alpha = golden_constants(digits).alpha;
        Decimal prev_err = (Decimal(fib_ratio(2), digits) - alpha).abs();
        int prev_side = (Decimal(fib_ratio(2), digits) - alpha).sign();
        for (std::int64_t k = 3; k <= 60; ++k) {
            Decimal diff = Decimal(fib_ratio(k), digits) - alpha;
            CHECK(diff.abs() < prev_err);
            CHECK(diff.sign() == -prev_side);
            prev_err = diff.abs();
            prev_side = diff.sign();
        }
    }
}

TEST_CASE("phi_approx") {
    SUBCASE("closed form at 12 digits") {
        CHECK(phi_approx(PhiMethod::closed_form, 1, 12).str() == "1.61803398875");
    }
    SUBCASE("first convergent is 1") {
        CHECK(phi_approx(PhiMethod::convergent, 1, 12) == Decimal(ExactInt(1), 12));
    }
    SUBCASE("nested radical is within 1e-12 after 60 iterations") {
        Decimal nested = phi_approx(PhiMethod::nested_radical, 60, 50);
        Decimal closed = phi_approx(PhiMethod::closed_form, 1, 50);
        CHECK((nested - closed).abs() < Decimal::power_of_ten(-12, 50));
    }
    SUBCASE("continued fraction tracks the exact convergents") {
        for (int depth : {1, 2, 3, 10, 40}) {
            Decimal cf = phi_approx(PhiMethod::continued_fraction, depth, 40);
            Decimal conv = phi_approx(PhiMethod::convergent, depth, 40);
            CHECK((cf - conv).abs() < Decimal::power_of_ten(-30, 40));
        }
    }
    SUBCASE("rejects bad arguments") {
        CHECK_THROWS_AS(phi_approx(PhiMethod::closed_form, 0, 50), std::invalid_argument);
        CHECK_THROWS_AS(phi_approx(PhiMethod::closed_form, 1, 9), std::invalid_argument);
    }
}

TEST_CASE("golden constants satisfy the defining relations") {
    for (int precision : {10, 50, 120}) {
        GoldenConstants c = golden_constants(precision);
        Decimal tol = Decimal::power_of_ten(2 - precision, precision);
        CHECK((c.alpha + c.beta - Decimal(ExactInt(1), precision)).abs() < tol);
        CHECK((c.alpha * c.beta + Decimal(ExactInt(1), precision)).abs() < tol);
    }
}

TEST_CASE("binet_check") {
    SUBCASE("worked indices") {
        BinetReport r10 = binet_check(10, 30);
        CHECK(r10.matches);
        CHECK(r10.rounded == 55);
        BinetReport r0 = binet_check(0, 30);
        CHECK(r0.matches);
        CHECK(r0.rounded == 0);
        BinetReport rn6 = binet_check(-6, 30);
        CHECK(rn6.matches);
        CHECK(rn6.rounded == -8);
    }
    SUBCASE("matches across a window") {
        for (std::int64_t k = -60; k <= 60; ++k) {
            CHECK(binet_check(k, 30).matches);
        }
    }
    SUBCASE("insufficient precision is an error, not a wrong answer") {
        CHECK_THROWS_AS(binet_check(300, 10), precision_error);
    }
    SUBCASE("index budget is enforced") {
        CHECK_THROWS_AS(binet_check(301, 50), std::invalid_argument);
    }
}
