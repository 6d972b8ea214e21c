#include "ktwist/slopes.hpp"

#include <doctest.h>

using namespace ktwist;

TEST_CASE("slope normalization") {
    CHECK(TorusSlope(2, 4) == TorusSlope(1, 2));
    CHECK(TorusSlope(-1, -5) == TorusSlope(1, 5));
    CHECK(TorusSlope(0, -3) == TorusSlope(0, 1));
    CHECK(TorusSlope(-3, 0) == TorusSlope(1, 0));
    CHECK_THROWS(TorusSlope(0, 0));
}

TEST_CASE("delta computes geometric intersection numbers") {
    CHECK(delta(TorusSlope(1, 0), TorusSlope(1, 0)) == 0);
    CHECK(delta(TorusSlope(1, 0), TorusSlope(0, 1)) == 1);
    CHECK(delta(TorusSlope(1, 0), TorusSlope(1, 5)) == 5);
    // Symmetry and vanishing exactly on equal slopes.
    for (int p = 0; p <= 3; ++p)
        for (int q = -3; q <= 3; ++q) {
            if (p == 0 && q == 0) continue;
            TorusSlope a(p, q);
            TorusSlope b(1, 2);
            CHECK(delta(a, b) == delta(b, a));
            CHECK((delta(a, b) == 0) == (a == b));
        }
}

TEST_CASE("surgery slopes") {
    CHECK(surgery_slope(2) == TorusSlope(1, 2));
    CHECK(surgery_slope(5) == TorusSlope(1, 5));
    CHECK(delta(meridian(), surgery_slope(-1)) == 1);
    for (int n = -6; n <= 6; ++n) {
        if (n == 0) continue;
        CHECK(delta(meridian(), surgery_slope(n)) == (n < 0 ? -n : n));
    }
    CHECK_THROWS_AS(surgery_slope(0), Error);
}

TEST_CASE("unit intersectors") {
    auto one = unit_intersectors(TorusSlope(1, 5));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == seifert_longitude());

    auto two = unit_intersectors(TorusSlope(1, 1));
    REQUIRE(two.size() == 2);
    CHECK((two[0] == seifert_longitude() || two[1] == seifert_longitude()));

    auto two2 = unit_intersectors(TorusSlope(1, 2));
    REQUIRE(two2.size() == 2);
    CHECK(two2[0] == TorusSlope(0, 1));
    CHECK(two2[1] == TorusSlope(1, 1));
}

TEST_CASE("unit intersectors satisfy both conditions by recomputation") {
    for (int n = -6; n <= 6; ++n) {
        if (n == 0) continue;
        TorusSlope mu_prime = surgery_slope(n);
        auto inter = unit_intersectors(mu_prime);
        bool has_longitude = false;
        for (const auto& s : inter) {
            CHECK(delta(meridian(), s) == 1);
            CHECK(delta(mu_prime, s) == 1);
            if (s == seifert_longitude()) has_longitude = true;
        }
        CHECK(has_longitude);
        size_t expected = (n == 1 || n == -1 || n == 2 || n == -2) ? 2 : 1;
        CHECK(inter.size() == expected);
    }
}

TEST_CASE("filling classification") {
    CHECK(filling_classification(TorusSlope(1, 0), TorusSlope(0, 1)).restores_ambient);
    FillingClass lens = filling_classification(TorusSlope(2, 1), TorusSlope(0, 1));
    CHECK_FALSE(lens.restores_ambient);
    CHECK(lens.lens_order == 2);
    CHECK(filling_classification(TorusSlope(0, 1), TorusSlope(0, 1)).lens_order == 0);
}

TEST_CASE("nugatory dichotomy by order") {
    CHECK(nugatory_slope_test(5) == NugatoryVerdict::ForcedNugatory);
    CHECK(nugatory_slope_test(2) == NugatoryVerdict::ForcedNugatory);
    CHECK(nugatory_slope_test(-2) == NugatoryVerdict::ForcedNugatory);
    CHECK(nugatory_slope_test(-1) == NugatoryVerdict::WeaklyNugatoryOnly);
    CHECK(nugatory_slope_test(1) == NugatoryVerdict::WeaklyNugatoryOnly);
    CHECK_THROWS_AS(nugatory_slope_test(0), Error);
}
