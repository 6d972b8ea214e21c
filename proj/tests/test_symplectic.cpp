#include "ktwist/symplectic.hpp"

#include <doctest.h>

using namespace ktwist;

namespace {

CurveClass basis_vector(int genus, int index) {
    CurveClass c;
    c.v.assign(2 * static_cast<size_t>(genus), 0);
    c.v[static_cast<size_t>(index)] = 1;
    return c;
}

}  // namespace

TEST_CASE("transvection along a separating class is trivial") {
    CurveClass zero;
    zero.v.assign(4, 0);
    CHECK(transvection(zero, 7) == SymplecticMatrix::identity(2));
}

TEST_CASE("genus-one shears") {
    // v = a_1: x -> x + n<x, v>v sends b_1 to b_1 - n a_1 in the fixed
    // convention; both basis images are checked.
    SymplecticMatrix t = transvection(basis_vector(1, 0), 1);
    CurveClass a = basis_vector(1, 0), b = basis_vector(1, 1);
    CHECK(t.apply(a).v == a.v);
    CHECK(t.apply(b).v[0] == -1);
    CHECK(t.apply(b).v[1] == 1);

    SymplecticMatrix u = transvection(basis_vector(1, 1), 1);
    CHECK(u.apply(b).v == b.v);
    CHECK(u.apply(a).v[1] == 1);
}

TEST_CASE("transvections are additive in the power") {
    SymplecticSampler sampler(2, 7);
    for (int i = 0; i < 10; ++i) {
        CurveClass v = sampler.next_primitive_class();
        long n = sampler.next_int(-4, 4), m = sampler.next_int(-4, 4);
        CHECK(transvection(v, n) * transvection(v, m) == transvection(v, n + m));
    }
}

TEST_CASE("transvections preserve the symplectic form and fix the orthogonal complement") {
    SymplecticSampler sampler(3, 11);
    for (int i = 0; i < 20; ++i) {
        CurveClass v = sampler.next_primitive_class();
        SymplecticMatrix t = transvection(v, sampler.next_int(-5, 5));
        CHECK(is_symplectic(t.matrix()));
        CHECK(t.apply(v).v == v.v);
        // A vector symplectically orthogonal to v stays fixed.
        CurveClass w = sampler.next_primitive_class();
        Integer pairing = symplectic_pairing(w.v, v.v);
        if (pairing == 0) CHECK(t.apply(w).v == w.v);
    }
}

TEST_CASE("core relation verification") {
    SymplecticSampler sampler(2, 23);
    CurveClass zero;
    zero.v.assign(4, 0);
    SymplecticMatrix a = sampler.next();
    CHECK(verify_core_relation(a, a, SymplecticMatrix::identity(2), zero, 5));

    // Constructed witness.
    CurveClass v = sampler.next_primitive_class();
    SymplecticMatrix b = sampler.next(), c = sampler.next();
    long n = 3;
    SymplecticMatrix lhs_a = transvection(v, -n) * c * b * c.inverse();
    CHECK(verify_core_relation(lhs_a, b, c, v, n));

    // The identity fails with a transvected left side.
    CurveClass e1 = basis_vector(2, 0);
    CHECK_FALSE(verify_core_relation(SymplecticMatrix::identity(2), SymplecticMatrix::identity(2),
                                     SymplecticMatrix::identity(2), e1, 1));
}

TEST_CASE("core relation is invariant under simultaneous conjugation") {
    SymplecticSampler sampler(2, 31);
    for (int i = 0; i < 10; ++i) {
        CurveClass v = sampler.next_primitive_class();
        long n = sampler.next_int(-3, 3);
        SymplecticMatrix b = sampler.next(), c = sampler.next(), d = sampler.next();
        SymplecticMatrix a = transvection(v, -n) * c * b * c.inverse();
        REQUIRE(verify_core_relation(a, b, c, v, n));
        // D T_v^n D^-1 = T_{Dv}^n.
        CurveClass dv = d.apply(v);
        CHECK(d * transvection(v, n) * d.inverse() == transvection(dv, n));
        CHECK(verify_core_relation(d * a * d.inverse(), b, d * c, dv, n));
    }
}

TEST_CASE("commutator witnesses") {
    SymplecticSampler sampler(2, 41);
    SymplecticMatrix g = sampler.next(), h = sampler.next();
    CHECK(is_commutator_witness(g * h * g.inverse() * h.inverse(), g, h));
    SymplecticMatrix id = SymplecticMatrix::identity(2);
    CHECK(is_commutator_witness(id, id, g));
    CHECK_FALSE(is_commutator_witness(transvection(basis_vector(2, 0), 1), id, id));
}

TEST_CASE("conjugacy residue") {
    SymplecticSampler sampler(2, 53);
    SymplecticMatrix a = sampler.next();
    CHECK_FALSE(conjugacy_residue(a, a).distinct);
    auto res = conjugacy_residue(SymplecticMatrix::identity(2), transvection(basis_vector(2, 0), 1));
    CHECK(res.distinct);
    // Actually conjugate pairs never get flagged.
    for (int i = 0; i < 10; ++i) {
        SymplecticMatrix c = sampler.next();
        CHECK_FALSE(conjugacy_residue(c * a * c.inverse(), a).distinct);
    }
}

TEST_CASE("genus-one monodromy fixture for the fourth twist knot") {
    SymplecticMatrix m = figure_eight_monodromy_action();
    auto poly = m.matrix().char_poly();  // x^2 - 3x + 1
    REQUIRE(poly.size() == 3);
    CHECK(poly[0] == 1);
    CHECK(poly[1] == -3);
    CHECK(poly[2] == 1);
    IntMatrix id = IntMatrix::identity(2);
    // Squared monodromy presents the double branched cover's homology.
    Integer d2 = (m.matrix() * m.matrix() - id).determinant();
    CHECK((d2 < 0 ? -d2 : d2) == 5);
    Integer dm = (m.matrix() + id).determinant();
    CHECK((dm < 0 ? -dm : dm) == 5);
}

TEST_CASE("dimension mismatches are rejected") {
    SymplecticMatrix g1 = SymplecticMatrix::identity(1);
    SymplecticMatrix g2 = SymplecticMatrix::identity(2);
    CHECK_THROWS_AS(g1 * g2, Error);
    CHECK_THROWS_AS(is_commutator_witness(g1, g2, g2), Error);
    IntMatrix bad = IntMatrix::identity(2);
    bad.at(0, 1) = 1;
    bad.at(1, 0) = 1;
    CHECK_THROWS_AS(SymplecticMatrix{bad}, Error);
}
