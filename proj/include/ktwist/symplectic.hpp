#pragma once

#include "ktwist/errors.hpp"
#include "ktwist/snf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ktwist {

// Homology class of a simple closed curve on a genus-g surface with one
// boundary component, in the basis (a_1, b_1, ..., a_g, b_g) with
// <a_i, b_i> = 1.  The zero vector encodes a separating curve.
struct CurveClass {
    std::vector<Integer> v;

    int genus() const { return static_cast<int>(v.size()) / 2; }
    bool is_zero() const;
};

// 2g x 2g integer matrix preserving the standard symplectic form.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(IntMatrix m);
    static SymplecticMatrix identity(int genus);

    int genus() const { return mat_.rows() / 2; }
    const IntMatrix& matrix() const { return mat_; }

    SymplecticMatrix operator*(const SymplecticMatrix& other) const;
    SymplecticMatrix inverse() const;
    bool operator==(const SymplecticMatrix& other) const { return mat_ == other.mat_; }
    bool operator!=(const SymplecticMatrix& other) const { return mat_ != other.mat_; }

    CurveClass apply(const CurveClass& v) const;

private:
    IntMatrix mat_;
};

// Standard symplectic form J on 2g generators, block-diagonal with
// [[0, 1], [-1, 0]] blocks.
IntMatrix symplectic_form(int genus);
bool is_symplectic(const IntMatrix& m);

// <x, y> in the fixed form convention.
Integer symplectic_pairing(const std::vector<Integer>& x, const std::vector<Integer>& y);

// Homology action of the n-th power of a Dehn twist along a curve of class
// v: the transvection x -> x + n <x, v> v.
SymplecticMatrix transvection(const CurveClass& v, long n);

// True iff transvection(v, n) * A == C * B * C^-1 exactly.  A and B stand
// for the homology actions of the squared monodromies, C for the conjugating
// homeomorphism.
bool verify_core_relation(const SymplecticMatrix& A, const SymplecticMatrix& B, const SymplecticMatrix& C,
                          const CurveClass& v, long n);

// True iff M == G H G^-1 H^-1 exactly.
bool is_commutator_witness(const SymplecticMatrix& M, const SymplecticMatrix& G, const SymplecticMatrix& H);

// Conjugacy-class filter: reports the first conjugacy invariant on which the
// two matrices differ, or nothing when every computed invariant matches.
// Never a proof of conjugacy.
struct ConjugacyResidue {
    bool distinct = false;
    std::string witness;  // name + values of the differing invariant
};

ConjugacyResidue conjugacy_residue(const SymplecticMatrix& a, const SymplecticMatrix& b);

// Homology action of the genus-one monodromy of the fourth twist knot's
// 4-crossing form (one positive and one negative elementary shear).
SymplecticMatrix figure_eight_monodromy_action();

// Deterministic generator of symplectic matrices (products of random
// transvections), for witness construction.
class SymplecticSampler {
public:
    SymplecticSampler(int genus, unsigned long long seed);
    SymplecticMatrix next(int twist_count = 8);
    CurveClass next_primitive_class();
    long next_int(long lo, long hi);

private:
    int genus_;
    unsigned long long state_;
};

}  // namespace ktwist
