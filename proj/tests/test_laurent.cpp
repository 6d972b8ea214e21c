#include "ktwist/laurent.hpp"

#include <doctest.h>

using namespace ktwist;

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly p = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, -2);
    LaurentPoly q = LaurentPoly::monomial(1, 1);
    CHECK((p * q).coeff(4) == 2);
    CHECK((p * q).coeff(-1) == -1);
    CHECK((p - p).is_zero());
    CHECK(p + LaurentPoly() == p);
    CHECK((-p).coeff(3) == -2);
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly p = LaurentPoly::monomial(1, 2);
    p += LaurentPoly::monomial(-1, 2);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK(LaurentPoly::monomial(0, 5).is_zero());
}

TEST_CASE("variable inversion and shifting") {
    LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(1, -1);
    LaurentPoly inv = p.inverted_variable();
    CHECK(inv.coeff(-2) == 3);
    CHECK(inv.coeff(1) == 1);
    CHECK(inv.inverted_variable() == p);
    CHECK(p.shifted(2).coeff(4) == 3);
}

TEST_CASE("evaluation at integer points") {
    // 2x^2 - x^-1 at x = -1: 2 + 1 = 3
    LaurentPoly p = LaurentPoly::monomial(2, 2) + LaurentPoly::monomial(-1, -1);
    CHECK(p.evaluate(-1) == 3);
    CHECK(LaurentPoly(7).evaluate(5) == 7);
}

TEST_CASE("evaluation rejects non-integral results") {
    LaurentPoly p = LaurentPoly::monomial(1, -1);
    CHECK_THROWS_AS(p.evaluate(2), std::domain_error);
    CHECK(p.evaluate(-1) == -1);
}

TEST_CASE("exact division") {
    LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    LaurentPoly p = delta * delta * LaurentPoly::monomial(3, -1);
    CHECK(p.divide_exact(delta) == delta * LaurentPoly::monomial(3, -1));
    CHECK_THROWS_AS((p + LaurentPoly(1)).divide_exact(delta), std::domain_error);
}

TEST_CASE("serialization format") {
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly(1).to_string() == "1");
    LaurentPoly p = LaurentPoly::monomial(-1, -4) + LaurentPoly::monomial(1, -3) + LaurentPoly::monomial(1, -1);
    CHECK(p.to_string("t") == "-1t^-4 + 1t^-3 + 1t^-1");
}
