#include "ktwist/invariants.hpp"

#include "ktwist/moves.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace ktwist;

namespace {

// Textbook values, recomputed here by the independent state-sum oracle
// before being asserted against the fast evaluator.
const LaurentPoly kLeftTrefoilJones = LaurentPoly::monomial(-1, -4) + LaurentPoly::monomial(1, -3) +
                                      LaurentPoly::monomial(1, -1);
const LaurentPoly kFigureEightJones = LaurentPoly::monomial(1, -2) + LaurentPoly::monomial(-1, -1) +
                                      LaurentPoly(1) + LaurentPoly::monomial(-1, 1) +
                                      LaurentPoly::monomial(1, 2);

}  // namespace

TEST_CASE("oracle agrees with the frozen table values") {
    CHECK(oracle::brute_force_jones(oracle::left_trefoil()) == kLeftTrefoilJones);
    CHECK(oracle::brute_force_jones(oracle::figure_eight()) == kFigureEightJones);
}

TEST_CASE("fast bracket matches the brute-force state sum") {
    for (const PlanarDiagram& d : {PlanarDiagram::unknot(), oracle::left_trefoil(), oracle::figure_eight(),
                                   connected_sum(oracle::left_trefoil(), oracle::figure_eight())}) {
        CHECK(kauffman_bracket(d) == oracle::brute_force_bracket(d));
        CHECK(jones(d) == oracle::brute_force_jones(d));
    }
    // Including diagrams with kinks and scrambles.
    for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
        PlanarDiagram d = scramble(oracle::left_trefoil(), 6, seed, 12);
        CHECK(jones(d) == oracle::brute_force_jones(d));
    }
}

TEST_CASE("jones of the unknot is 1") {
    CHECK(jones(PlanarDiagram::unknot()) == LaurentPoly(1));
}

TEST_CASE("figure-eight Jones is symmetric under variable inversion") {
    LaurentPoly j = jones(oracle::figure_eight());
    CHECK(j == kFigureEightJones);
    CHECK(j == j.inverted_variable());
    CHECK(j.terms().size() == 5);
}

TEST_CASE("mirror law over the corpus") {
    for (const PlanarDiagram& d : {oracle::left_trefoil(), oracle::figure_eight(),
                                   connected_sum(oracle::left_trefoil(), oracle::left_trefoil())})
        CHECK(jones(mirror(d)) == jones(d).inverted_variable());
}

TEST_CASE("bracket respects the crossing limit") {
    CHECK_THROWS_AS(kauffman_bracket(oracle::figure_eight(), 3), Error);
    PlanarDiagram big = oracle::figure_eight();
    for (int i = 0; i < 6; ++i) big = connected_sum(big, oracle::figure_eight());
    CHECK_THROWS_AS(jones(big), Error);  // 28 crossings > default limit
}

TEST_CASE("determinants via the Goeritz matrix") {
    CHECK(determinant(PlanarDiagram::unknot()) == 1);
    CHECK(determinant(oracle::left_trefoil()) == 3);
    CHECK(determinant(oracle::figure_eight()) == 5);
}

TEST_CASE("determinant cross-check against the state sum at t = -1") {
    for (const PlanarDiagram& d : {PlanarDiagram::unknot(), oracle::left_trefoil(), oracle::figure_eight()})
        CHECK(determinant(d) == oracle::brute_force_determinant(d));
    for (std::uint64_t seed : {5ull, 6ull, 7ull, 8ull}) {
        PlanarDiagram d = scramble(oracle::figure_eight(), 5, seed, 12);
        Integer v = jones(d).evaluate(-1);
        CHECK(determinant(d) == (v < 0 ? -v : v));
    }
}

TEST_CASE("double cover homology") {
    CHECK(branched_cover_homology(PlanarDiagram::unknot()).is_trivial());

    AbelianGroup tref = branched_cover_homology(oracle::left_trefoil());
    REQUIRE(tref.divisors.size() == 1);
    CHECK(tref.divisors[0] == 3);
    CHECK(tref.free_rank == 0);
    CHECK(tref.to_string() == "Z/3");

    AbelianGroup granny =
        branched_cover_homology(connected_sum(oracle::left_trefoil(), oracle::left_trefoil()));
    REQUIRE(granny.divisors.size() == 2);
    CHECK(granny.divisors[0] == 3);
    CHECK(granny.divisors[1] == 3);
    CHECK(granny.to_string() == "Z/3 + Z/3");
}

TEST_CASE("group order equals the determinant") {
    for (const PlanarDiagram& d : {oracle::left_trefoil(), oracle::figure_eight(),
                                   connected_sum(oracle::figure_eight(), oracle::left_trefoil())})
        CHECK(branched_cover_homology(d).order() == determinant(d));
}

TEST_CASE("determinant is multiplicative under connected sum") {
    PlanarDiagram a = oracle::left_trefoil(), b = oracle::figure_eight();
    CHECK(determinant(connected_sum(a, b)) == determinant(a) * determinant(b));
}

TEST_CASE("certify_distinct reports the first differing invariant") {
    auto r1 = certify_distinct(PlanarDiagram::unknot(), oracle::figure_eight());
    CHECK(r1.distinct);
    CHECK(r1.invariant == "determinant");
    CHECK(r1.lhs == "1");
    CHECK(r1.rhs == "5");

    auto r2 = certify_distinct(oracle::left_trefoil(), oracle::left_trefoil());
    CHECK_FALSE(r2.distinct);

    auto r3 = certify_distinct(oracle::left_trefoil(), mirror(oracle::left_trefoil()));
    CHECK(r3.distinct);
    CHECK(r3.invariant == "jones");

    // Granny vs square knot: distinguished by Jones only.
    PlanarDiagram granny = connected_sum(oracle::left_trefoil(), oracle::left_trefoil());
    PlanarDiagram square = connected_sum(oracle::left_trefoil(), mirror(oracle::left_trefoil()));
    auto r4 = certify_distinct(granny, square);
    CHECK(r4.distinct);
    CHECK(r4.invariant == "jones");
}

TEST_CASE("invariance of jones, determinant and homology under move scrambles") {
    for (const PlanarDiagram& base : {oracle::left_trefoil(), oracle::figure_eight()}) {
        LaurentPoly j = jones(base);
        Integer det = determinant(base);
        AbelianGroup h = branched_cover_homology(base);
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            PlanarDiagram d = scramble(base, 8, seed, 14);
            CHECK(jones(d) == j);
            CHECK(determinant(d) == det);
            CHECK(branched_cover_homology(d) == h);
        }
    }
}
