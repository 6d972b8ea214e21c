#pragma once

#include "ktwist/diagram.hpp"
#include "ktwist/moves.hpp"

#include <vector>

namespace ktwist {

// Two antiparallel strands on a common face, where a two-strand twist can
// act.  The strands are antiparallel exactly when the face sees both arcs
// from the same side.
struct TwistSite {
    int arc_a = 0;
    int arc_b = 0;
    int face = -1;

    bool operator==(const TwistSite& other) const {
        return arc_a == other.arc_a && arc_b == other.arc_b && face == other.face;
    }
};

// Every valid site of the diagram, ordered by (face, arc_a, arc_b).
std::vector<TwistSite> find_twist_sites(const PlanarDiagram& d);

// Inserts |n| crossings of one sign between the two strands of the site,
// through the face.  Positive n inserts positive crossings.  The output is
// a knot diagram with exactly |n| more crossings.
PlanarDiagram two_strand_twist(const PlanarDiagram& d, const TwistSite& s, int n);

struct TwistResult {
    PlanarDiagram diagram;
    TwistSite induced_site;  // the same strand pair, west of the new twist region
};

TwistResult two_strand_twist_tracked(const PlanarDiagram& d, const TwistSite& s, int n);

// Twists by n, then by m at the induced site; equal to a single (n+m)-twist
// up to Reidemeister moves.
PlanarDiagram compose_twists(const PlanarDiagram& d, const TwistSite& s, int n, int m);

// A non-coherent band: attachment arcs on a common face plus the parity of
// the half twist in the band.  Surgery along it is the order-one twist at
// the underlying site, with sign -1 for parity 1 and +1 for parity 0.
struct Band {
    int arc_a = 0;
    int arc_b = 0;
    int face = -1;
    int half_twist_parity = 0;
};

TwistSite band_to_site(const PlanarDiagram& d, const Band& b);
PlanarDiagram band_surgery(const PlanarDiagram& d, const Band& b);
int band_twist_sign(const Band& b);

// The alternative twisting circle: realized by pushing one strand of the
// site across the other (an isotopy of the diagram); `diagram` is the
// isotoped copy carrying `site`, the fresh bigon.  Twists along the
// alternative circle act with the opposite sign in the diagram convention,
// so the order-one identity reads
//   jones(companion_twist(d, s, +1)) == jones(two_strand_twist(d, s, -1))
// and symmetrically.
struct CompanionSite {
    PlanarDiagram diagram;
    TwistSite site;
};

CompanionSite companion_site(const PlanarDiagram& d, const TwistSite& s);

// The n-twist along the companion circle of the site.
PlanarDiagram companion_twist(const PlanarDiagram& d, const TwistSite& s, int n);

// Adds the twisting circle of the site as a second component: a round
// circle crossing each strand twice with zero linking.  Used to test
// whether the circle bounds a disk in the knot complement.
PlanarDiagram encircle_site(const PlanarDiagram& d, const TwistSite& s);

// Adds the alternative twisting circle instead: tilted through the site so
// that order-one twists along it realize the opposite-sign twist.  It meets
// the site circle twice and a meridian arc once.
PlanarDiagram encircle_companion(const PlanarDiagram& d, const TwistSite& s);

// Sound, incomplete nugatory certificate: the site spans a kink, where the
// twisting circle slides off the fold.
bool nugatory_kink_certificate(const PlanarDiagram& d, const TwistSite& s);

// Standard twist-knot diagram with k+2 crossings (k=1 the trefoil, k=2 the
// figure-eight), carrying the twist-region site between its two band
// strands.
struct MarkedDiagram {
    PlanarDiagram diagram;
    TwistSite site;
};

PlanarDiagram twist_knot(int k);
MarkedDiagram twist_knot_marked(int k);

// The chirally cosmetic family: the -(2k+1)-twist at the twist-knot site
// turns the knot into its mirror image.
struct FamilyCase {
    PlanarDiagram diagram;
    TwistSite site;
    int n = 0;
};

FamilyCase twist_family_case(int k);

// Bundled example configurations.
MarkedDiagram unknot_twist_example();        // clasp unknot; -1 cosmetic, +2 gives the figure-eight
MarkedDiagram figure_eight_twist_example();  // figure-eight; -5 gives its mirror

struct BandExample {
    PlanarDiagram diagram;
    Band band;
};

BandExample trivial_band_example();  // band across a kink; surgery changes nothing

}  // namespace ktwist
