#pragma once

#include "ktwist/diagram.hpp"

#include <chrono>
#include <optional>
#include <random>
#include <vector>

namespace ktwist {

// Exploration limits for simplification searches.  `max_r3_moves` bounds the
// number of states expanded; `max_crossings_explored`, when positive, allows
// intermediate states up to that many crossings (0 means never grow past the
// input size).
struct SimplifyBudget {
    int max_r3_moves = 2000;
    int max_crossings_explored = 0;
    std::optional<std::chrono::milliseconds> time_bound;
};

// -- move primitives ---------------------------------------------------------

// Removes the removable kink at `crossing`, if any.
std::optional<PlanarDiagram> try_r1_remove(const PlanarDiagram& d, int crossing);

// Removes the bigon at face `face_idx` when one strand passes over the other
// at both of its corners.
std::optional<PlanarDiagram> try_r2_remove(const PlanarDiagram& d, int face_idx);

// Slides the strand along step `rot` of the triangular face `face_idx`
// across the opposite crossing, when that strand passes over (or under) both
// others.
std::optional<PlanarDiagram> try_r3(const PlanarDiagram& d, int face_idx, int rot);

// Adds a kink on `arc`.  `loop_left` picks the side of the new monogon,
// `over_first` which passage of the new crossing runs on top.
PlanarDiagram r1_add(const PlanarDiagram& d, int arc, bool loop_left, bool over_first);

// Pushes a finger of the arc at step `step_x` across the arc at step
// `step_y` of face `face_idx` (distinct arcs); the two new crossings carry
// the finger strand on top iff `x_over`.
PlanarDiagram r2_add(const PlanarDiagram& d, int face_idx, int step_x, int step_y, bool x_over);

struct R2AddResult {
    PlanarDiagram diagram;
    int x_mid_arc = 0;        // middle piece of the displaced strand
    int y_mid_arc = 0;        // middle piece of the crossed strand
    int bigon_face_idx = -1;  // face between the two fresh crossings
};

R2AddResult r2_add_tracked(const PlanarDiagram& d, int face_idx, int step_x, int step_y, bool x_over);

// -- search ------------------------------------------------------------------

// Reduces with greedy kink/bigon removal, escaping plateaus by a bounded
// breadth-first exploration of triangle slides (and, when the budget allows
// larger intermediates, finger pushes).  Never returns a diagram with more
// crossings than the input.
PlanarDiagram simplify(const PlanarDiagram& d, const SimplifyBudget& budget = {});

enum class Verdict3 { Yes, No, Unknown };
const char* verdict3_name(Verdict3 v);

// Yes: simplifies to a round circle.  No: an invariant obstruction
// (determinant or Jones) rules the unknot out.  Unknown otherwise.
Verdict3 is_unknot(const PlanarDiagram& d, const SimplifyBudget& budget = {});

// Unlink certificate for link intermediates: true when the budgeted search
// reaches a crossing-free diagram.
bool certify_unlink(const PlanarDiagram& d, const SimplifyBudget& budget = {});

// Seeded random Reidemeister scramble, keeping the crossing count at most
// `max_crossings`.
PlanarDiagram scramble(const PlanarDiagram& d, int moves, std::uint64_t seed, int max_crossings = 16);

}  // namespace ktwist
