#pragma once

#include "ktwist/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ktwist {

// One crossing of a diagram.  Slot k holds the arc label occupying the k-th
// position counterclockwise around the crossing, starting from the incoming
// under-strand.  The over-strand enters at slot `over_in` (1 or 3) and
// leaves at the opposite slot.
//
// Sign convention: with the under-strand pointing up, a crossing whose
// over-strand runs left-to-right (over_in == 3) is positive.
struct Crossing {
    std::array<int, 4> arcs{};
    int over_in = 1;
    int sign = 0;

    bool operator==(const Crossing& other) const {
        return arcs == other.arcs && over_in == other.over_in && sign == other.sign;
    }
};

// A knot (or, for internal intermediates, link) diagram.  Arc labels run
// 1..n_arcs and increase along the orientation of each component.  A
// crossing-free component is tracked in free_loops; the canonical unknot is
// the empty diagram with one free loop.
class PlanarDiagram {
public:
    PlanarDiagram() : free_loops_(1) {}  // 0-crossing unknot

    static PlanarDiagram unknot() { return PlanarDiagram(); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int n_arcs() const { return 2 * crossing_count(); }
    int free_loops() const { return free_loops_; }
    bool is_link() const { return link_; }
    int component_count() const { return components_ + free_loops_; }

    int writhe() const;
    PlanarDiagram mirrored() const;

    bool operator==(const PlanarDiagram& other) const {
        return crossings_ == other.crossings_ && free_loops_ == other.free_loops_ && link_ == other.link_;
    }
    bool operator!=(const PlanarDiagram& other) const { return !(*this == other); }

private:
    friend class RawDiagram;
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    int components_ = 0;  // components passing through crossings
    bool link_ = false;
};

// A slot of a crossing, identifying one end of an arc.
struct EdgeEnd {
    int crossing = -1;
    int slot = -1;

    bool valid() const { return crossing >= 0; }
    bool operator==(const EdgeEnd& other) const { return crossing == other.crossing && slot == other.slot; }
};

// Where an arc starts (tail: outgoing slot) and ends (head: incoming slot).
struct ArcEnds {
    EdgeEnd tail, head;
};

// Tail/head table indexed by arc label (entry 0 unused).
std::vector<ArcEnds> arc_table(const PlanarDiagram& d);

enum class Side { Left, Right };

struct FaceEntry {
    int arc = 0;
    Side side = Side::Left;

    bool operator==(const FaceEntry& other) const { return arc == other.arc && side == other.side; }
};

struct Face {
    std::vector<FaceEntry> entries;
};

// One boundary step of a face walk: arc traversed from `from` to `to`
// (face on the left of travel); along_flow records whether the travel
// direction agrees with the arc's orientation.
struct FaceStep {
    int arc = 0;
    bool along_flow = true;
    EdgeEnd from, to;
};

struct FaceDetail {
    std::vector<FaceStep> steps;

    Face face() const;
};

// All complementary regions, in deterministic order.  For a connected
// diagram with c crossings the result has c + 2 faces.
std::vector<Face> faces(const PlanarDiagram& d);
std::vector<FaceDetail> face_details(const PlanarDiagram& d);

// Face index of the corner between slots `corner` and `corner`+1 of each
// crossing; filled by face extraction.
std::vector<std::array<int, 4>> corner_faces(const PlanarDiagram& d);

// Mirror image: every crossing sign flipped, arcs untouched.  Involution.
PlanarDiagram mirror(const PlanarDiagram& d);

// Connected sum, splicing arc 1 of each operand.
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2);

// Text form: one "X a b c d" line per crossing, '#' comments.
PlanarDiagram parse_pd(const std::string& text);
std::string to_pd_text(const PlanarDiagram& d);

// Dowker-Thistlethwaite ingestion: realizes a planar embedding or reports
// Unrealizable.  A positive entry means the even-numbered visit passes over.
PlanarDiagram parse_dt(const std::vector<long>& code);
std::vector<long> dt_code(const PlanarDiagram& d);

// Canonical encoding: minimum over all traversal starts, for dedup and
// byte-stable reports.
std::string canonical_code(const PlanarDiagram& d);

// Mutable diagram under construction or surgery.  Edge ids are arbitrary
// nonnegative integers; finalize() walks, orients, relabels, validates and
// produces an immutable PlanarDiagram.
class RawDiagram {
public:
    struct RawCrossing {
        std::array<int, 4> ends{};  // edge ids, counterclockwise (rotation arbitrary)
        int over_slot = 0;          // any slot lying on the over-strand
    };

    RawDiagram() = default;
    explicit RawDiagram(const PlanarDiagram& d);

    std::vector<RawCrossing>& crossings() { return cx_; }
    const std::vector<RawCrossing>& crossings() const { return cx_; }
    int& free_loops() { return free_loops_; }
    void set_link(bool link) { link_ = link; }
    bool link() const { return link_; }

    int fresh_edge();

    // Replaces one end of edge `old_id` (located at `at`) with `new_id`.
    void reattach(const EdgeEnd& at, int new_id);

    // Walks, orients, relabels and validates.  `new_labels`, when given, is
    // filled with the arc label assigned to each old edge id.
    PlanarDiagram finalize(std::vector<int>* new_labels = nullptr) const;

private:
    std::vector<RawCrossing> cx_;
    int free_loops_ = 0;
    int next_edge_ = 0;
    bool link_ = false;
};

}  // namespace ktwist
