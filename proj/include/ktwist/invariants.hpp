#pragma once

#include "ktwist/diagram.hpp"
#include "ktwist/laurent.hpp"
#include "ktwist/snf.hpp"

#include <string>
#include <vector>

namespace ktwist {

inline constexpr int kDefaultCrossingLimit = 24;

// Kauffman bracket in the variable A, normalized so the 0-crossing unknot
// has bracket 1.  Evaluation contracts crossings one at a time in a greedy
// low-frontier order, memoizing partial results by the connectivity pattern
// of the open boundary.  Throws ResourceExceeded above `max_crossings`.
LaurentPoly kauffman_bracket(const PlanarDiagram& d, int max_crossings = kDefaultCrossingLimit);

// Jones polynomial of a knot in the variable t: the bracket normalized by
// (-A)^(-3w) under the substitution t = A^-4.
LaurentPoly jones(const PlanarDiagram& d, int max_crossings = kDefaultCrossingLimit);

// Checkerboard data: `shaded` flags per face (the color class not containing
// face 0), and the Goeritz matrix of the shading with the first shaded
// row/column deleted.
struct GoeritzData {
    std::vector<bool> shaded;
    IntMatrix reduced;  // symmetric; |det| is the knot determinant
};

GoeritzData goeritz(const PlanarDiagram& d);

// |det| of the reduced Goeritz matrix.
Integer determinant(const PlanarDiagram& d);

// First homology of the double cover of S^3 branched over the knot, as the
// cokernel of the reduced Goeritz matrix in Smith normal form.
AbelianGroup branched_cover_homology(const PlanarDiagram& d);

struct Distinctness {
    bool distinct = false;
    std::string invariant;  // "determinant" | "homology" | "jones"
    std::string lhs, rhs;
};

// First differing invariant among (determinant, branched-cover homology,
// Jones); not distinct means the pair is indistinguishable by these.
Distinctness certify_distinct(const PlanarDiagram& d1, const PlanarDiagram& d2,
                              int max_crossings = kDefaultCrossingLimit);

}  // namespace ktwist
