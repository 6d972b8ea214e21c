#include "ktwist/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ktwist {

namespace {

int succ_label(int e, int n_arcs) { return e % n_arcs + 1; }

}  // namespace

int PlanarDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
}

std::vector<ArcEnds> arc_table(const PlanarDiagram& d) {
    std::vector<ArcEnds> table(static_cast<size_t>(d.n_arcs()) + 1);
    const auto& cs = d.crossings();
    for (int ci = 0; ci < static_cast<int>(cs.size()); ++ci) {
        const Crossing& c = cs[ci];
        for (int s = 0; s < 4; ++s) {
            bool incoming = (s == 0 || s == c.over_in);
            ArcEnds& ae = table[static_cast<size_t>(c.arcs[s])];
            if (incoming)
                ae.head = EdgeEnd{ci, s};
            else
                ae.tail = EdgeEnd{ci, s};
        }
    }
    return table;
}

Face FaceDetail::face() const {
    Face f;
    for (const auto& s : steps) f.entries.push_back({s.arc, s.along_flow ? Side::Left : Side::Right});
    return f;
}

namespace {

struct FaceScan {
    std::vector<FaceDetail> details;
    std::vector<std::array<int, 4>> corners;  // corner k: between slot k and k+1
};

FaceScan scan_faces(const PlanarDiagram& d) {
    FaceScan out;
    int nc = d.crossing_count();
    out.corners.assign(static_cast<size_t>(nc), {-1, -1, -1, -1});
    if (nc == 0) {
        out.details.resize(static_cast<size_t>(d.free_loops()) + 1);
        return out;
    }
    auto table = arc_table(d);
    // Directed arc (e, along): along=true runs tail->head.
    std::vector<std::array<bool, 2>> seen(static_cast<size_t>(d.n_arcs()) + 1, {false, false});
    for (int e0 = 1; e0 <= d.n_arcs(); ++e0)
        for (int dir0 = 0; dir0 < 2; ++dir0) {
            if (seen[e0][dir0]) continue;
            FaceDetail fd;
            int face_idx = static_cast<int>(out.details.size());
            int e = e0;
            bool along = (dir0 == 0);
            while (true) {
                if (seen[e][along ? 0 : 1]) break;
                seen[e][along ? 0 : 1] = true;
                EdgeEnd arrive = along ? table[e].head : table[e].tail;
                EdgeEnd leave_from = along ? table[e].tail : table[e].head;
                fd.steps.push_back({e, along, leave_from, arrive});
                // Face on the left: turn past the corner clockwise of the
                // arrival slot and leave by the previous slot.
                int corner = (arrive.slot + 3) % 4;
                out.corners[arrive.crossing][corner] = face_idx;
                int out_slot = (arrive.slot + 3) % 4;
                int e_next = d.crossings()[arrive.crossing].arcs[out_slot];
                bool next_along = (table[e_next].tail == EdgeEnd{arrive.crossing, out_slot});
                e = e_next;
                along = next_along;
            }
            out.details.push_back(std::move(fd));
        }
    return out;
}

}  // namespace

std::vector<FaceDetail> face_details(const PlanarDiagram& d) { return scan_faces(d).details; }

std::vector<Face> faces(const PlanarDiagram& d) {
    std::vector<Face> out;
    for (const auto& fd : scan_faces(d).details) out.push_back(fd.face());
    return out;
}

std::vector<std::array<int, 4>> corner_faces(const PlanarDiagram& d) { return scan_faces(d).corners; }

RawDiagram::RawDiagram(const PlanarDiagram& d) {
    for (const auto& c : d.crossings()) {
        RawCrossing rc;
        for (int s = 0; s < 4; ++s) rc.ends[s] = c.arcs[s] - 1;
        rc.over_slot = c.over_in;
        cx_.push_back(rc);
    }
    free_loops_ = d.free_loops();
    link_ = d.is_link();
    next_edge_ = d.n_arcs();
}

int RawDiagram::fresh_edge() {
    int m = next_edge_;
    for (const auto& c : cx_)
        for (int e : c.ends) m = std::max(m, e + 1);
    next_edge_ = m + 1;
    return m;
}

void RawDiagram::reattach(const EdgeEnd& at, int new_id) { cx_[at.crossing].ends[at.slot] = new_id; }

PlanarDiagram RawDiagram::finalize(std::vector<int>* new_labels) const {
    PlanarDiagram d;
    d.free_loops_ = free_loops_;
    d.link_ = link_;
    d.components_ = 0;
    if (cx_.empty()) {
        if (!link_ && free_loops_ != 1)
            throw Error(ErrorCode::Disconnected, "a knot diagram without crossings must be one circle");
        if (new_labels) new_labels->clear();
        return d;
    }

    const int nc = static_cast<int>(cx_.size());
    // Occurrences of each edge id, in crossing/slot scan order.
    std::map<int, std::vector<EdgeEnd>> occ;
    for (int ci = 0; ci < nc; ++ci)
        for (int s = 0; s < 4; ++s) occ[cx_[ci].ends[s]].push_back({ci, s});
    for (const auto& [id, ends] : occ)
        if (ends.size() != 2) {
            std::ostringstream msg;
            msg << "edge " << id << " has " << ends.size() << " ends";
            throw Error(ErrorCode::MalformedCode, msg.str());
        }

    // Walk every component; the passage through a crossing pairs opposite
    // slots.  Each edge gets an orientation (tail first in walk order) and a
    // fresh 1-based label.
    std::map<int, int> label;     // old id -> new label
    std::map<int, EdgeEnd> tail;  // old id -> tail end under the walk
    int next_label = 1;
    for (const auto& [start_id, start_ends] : occ) {
        if (label.count(start_id)) continue;
        ++d.components_;
        int e = start_id;
        // First-listed occurrence is where the walk leaves from.
        EdgeEnd from = start_ends[0];
        while (!label.count(e)) {
            label[e] = next_label++;
            tail[e] = from;
            const auto& ends = occ[e];
            EdgeEnd head = (ends[0] == from) ? ends[1] : ends[0];
            EdgeEnd next_from{head.crossing, (head.slot + 2) % 4};
            e = cx_[head.crossing].ends[next_from.slot];
            from = next_from;
        }
    }

    if (!link_ && d.components_ + free_loops_ != 1)
        throw Error(ErrorCode::Disconnected, "diagram does not describe a single knot");

    // Graph connectivity: pieces of the 4-valent graph.
    std::vector<int> piece(static_cast<size_t>(nc), -1);
    int n_pieces = 0;
    for (int seed = 0; seed < nc; ++seed) {
        if (piece[seed] >= 0) continue;
        std::vector<int> stack{seed};
        piece[seed] = n_pieces;
        while (!stack.empty()) {
            int ci = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int e = cx_[ci].ends[s];
                for (const EdgeEnd& end : occ[e])
                    if (piece[end.crossing] < 0) {
                        piece[end.crossing] = n_pieces;
                        stack.push_back(end.crossing);
                    }
            }
        }
        ++n_pieces;
    }
    if (!link_ && n_pieces != 1) throw Error(ErrorCode::Disconnected, "crossing graph is disconnected");

    d.crossings_.resize(static_cast<size_t>(nc));
    for (int ci = 0; ci < nc; ++ci) {
        const RawCrossing& rc = cx_[ci];
        int over_a = rc.over_slot;
        int under_a = (over_a + 1) % 4;
        // The incoming one of the two under slots.
        auto incoming = [&](int slot) {
            int e = rc.ends[slot];
            return !(tail[e] == EdgeEnd{ci, slot});
        };
        int under_in;
        if (incoming(under_a) && !incoming((under_a + 2) % 4))
            under_in = under_a;
        else if (incoming((under_a + 2) % 4) && !incoming(under_a))
            under_in = (under_a + 2) % 4;
        else
            throw Error(ErrorCode::OrientationInconsistent, "under-strand flow is not consistent");
        Crossing& c = d.crossings_[ci];
        for (int k = 0; k < 4; ++k) c.arcs[k] = label[rc.ends[(under_in + k) % 4]];
        int over_in_abs;
        if (incoming(over_a) && !incoming((over_a + 2) % 4))
            over_in_abs = over_a;
        else if (incoming((over_a + 2) % 4) && !incoming(over_a))
            over_in_abs = (over_a + 2) % 4;
        else
            throw Error(ErrorCode::OrientationInconsistent, "over-strand flow is not consistent");
        c.over_in = (over_in_abs - under_in + 4) % 4;
        c.sign = (c.over_in == 3) ? 1 : -1;
    }

    // Euler check per piece: F = c + 2 on the sphere.
    auto scan = scan_faces(d);
    std::vector<int> piece_faces(static_cast<size_t>(n_pieces), 0);
    std::vector<int> piece_cx(static_cast<size_t>(n_pieces), 0);
    std::vector<int> face_piece(scan.details.size(), -1);
    for (int ci = 0; ci < nc; ++ci) {
        ++piece_cx[piece[ci]];
        for (int k = 0; k < 4; ++k) {
            int f = scan.corners[ci][k];
            if (f >= 0 && face_piece[f] < 0) {
                face_piece[f] = piece[ci];
                ++piece_faces[piece[ci]];
            }
        }
    }
    for (int p = 0; p < n_pieces; ++p)
        if (piece_faces[p] != piece_cx[p] + 2)
            throw Error(ErrorCode::Unrealizable, "crossing data admits no planar embedding");

    if (new_labels) {
        new_labels->clear();
        int max_id = 0;
        for (const auto& [id, ends] : occ) max_id = std::max(max_id, id);
        new_labels->assign(static_cast<size_t>(max_id) + 1, 0);
        for (const auto& [id, lab] : label) (*new_labels)[id] = lab;
    }
    return d;
}

PlanarDiagram mirror(const PlanarDiagram& d) { return d.mirrored(); }

PlanarDiagram PlanarDiagram::mirrored() const {
    // Swaps over and under at every crossing; the projection, labels and
    // flows stay fixed, so applying this twice restores the object exactly.
    PlanarDiagram m = *this;
    for (Crossing& c : m.crossings_) {
        int r = c.over_in;  // the old over-in slot becomes the new under-in
        std::array<int, 4> rotated{};
        for (int k = 0; k < 4; ++k) rotated[k] = c.arcs[(r + k) % 4];
        c.arcs = rotated;
        c.over_in = (4 - r) % 4;
        c.sign = -c.sign;
    }
    return m;
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2) {
    if (d1.crossing_count() == 0) return d2;
    if (d2.crossing_count() == 0) return d1;
    if (d1.is_link() || d2.is_link())
        throw Error(ErrorCode::MalformedCode, "connected sum is defined for knot diagrams");
    RawDiagram raw(d1);
    int shift = d1.n_arcs();
    for (const Crossing& c : d2.crossings()) {
        RawDiagram::RawCrossing rc;
        for (int s = 0; s < 4; ++s) rc.ends[s] = c.arcs[s] - 1 + shift;
        rc.over_slot = c.over_in;
        raw.crossings().push_back(rc);
    }
    // Splice arc 1 of d1 with arc 1 of d2: swap their head attachments.
    auto t1 = arc_table(d1);
    auto t2 = arc_table(d2);
    EdgeEnd h1 = t1[1].head;
    EdgeEnd h2 = t2[1].head;
    h2.crossing += d1.crossing_count();
    raw.reattach(h1, shift);  // head of d2's arc 1 id
    raw.reattach(h2, 0);      // head of d1's arc 1 id
    return raw.finalize();
}

PlanarDiagram parse_pd(const std::string& text) {
    // Strip comments, split on whitespace/commas, drop X markers.
    std::vector<long> nums;
    std::string cur;
    bool in_comment = false;
    auto flush = [&]() {
        if (cur.empty()) return;
        if (cur == "X" || cur == "x") {
            cur.clear();
            return;
        }
        try {
            size_t pos = 0;
            long v = std::stol(cur, &pos);
            if (pos != cur.size()) throw std::invalid_argument(cur);
            nums.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::MalformedCode, "bad token '" + cur + "' in PD text");
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush();
            in_comment = false;
            continue;
        }
        if (in_comment) continue;
        if (ch == '#') {
            flush();
            in_comment = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '(' || ch == ')') {
            flush();
            continue;
        }
        cur.push_back(ch);
    }
    flush();

    if (nums.size() % 4 != 0) throw Error(ErrorCode::MalformedCode, "PD text is not a list of 4-tuples");
    int nc = static_cast<int>(nums.size()) / 4;
    if (nc == 0) return PlanarDiagram::unknot();
    int n_arcs = 2 * nc;
    std::vector<int> count(static_cast<size_t>(n_arcs) + 1, 0);
    for (long v : nums) {
        if (v < 1 || v > n_arcs) throw Error(ErrorCode::MalformedCode, "arc label out of range");
        ++count[static_cast<size_t>(v)];
    }
    for (int e = 1; e <= n_arcs; ++e)
        if (count[e] != 2) {
            std::ostringstream msg;
            msg << "arc " << e << " appears " << count[e] << " times";
            throw Error(ErrorCode::MalformedCode, msg.str());
        }

    RawDiagram raw;
    for (int ci = 0; ci < nc; ++ci) {
        int a = static_cast<int>(nums[4 * ci]);
        int b = static_cast<int>(nums[4 * ci + 1]);
        int c = static_cast<int>(nums[4 * ci + 2]);
        int dd = static_cast<int>(nums[4 * ci + 3]);
        if (succ_label(a, n_arcs) != c)
            throw Error(ErrorCode::OrientationInconsistent, "under-strand labels do not follow the orientation");
        if (succ_label(b, n_arcs) != dd && succ_label(dd, n_arcs) != b)
            throw Error(ErrorCode::OrientationInconsistent, "over-strand labels do not follow the orientation");
        RawDiagram::RawCrossing rc;
        rc.ends = {a - 1, b - 1, c - 1, dd - 1};
        rc.over_slot = 1;
        raw.crossings().push_back(rc);
    }
    try {
        return raw.finalize();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Unrealizable)
            throw Error(ErrorCode::MalformedCode, std::string("PD code not planar: ") + e.what());
        throw;
    }
}

std::string to_pd_text(const PlanarDiagram& d) {
    std::ostringstream out;
    for (const Crossing& c : d.crossings())
        out << "X " << c.arcs[0] << " " << c.arcs[1] << " " << c.arcs[2] << " " << c.arcs[3] << "\n";
    return out.str();
}

PlanarDiagram parse_dt(const std::vector<long>& code) {
    const int nc = static_cast<int>(code.size());
    if (nc == 0) return PlanarDiagram::unknot();
    if (nc > 18) throw Error(ErrorCode::ResourceExceeded, "DT realization supports at most 18 crossings");
    const int n = 2 * nc;
    std::vector<int> partner(static_cast<size_t>(n) + 1, 0);
    std::vector<bool> even_over(static_cast<size_t>(n) + 1, false);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (int i = 0; i < nc; ++i) {
        long v = code[i];
        long av = v < 0 ? -v : v;
        if (av % 2 != 0 || av < 2 || av > n) throw Error(ErrorCode::MalformedCode, "DT entries must be even and in range");
        if (used[av]) throw Error(ErrorCode::MalformedCode, "DT entry repeated");
        used[av] = true;
        int o = 2 * i + 1;
        int diff = std::abs(static_cast<int>(av) - o);
        if (diff == 1 || diff == n - 1)
            throw Error(ErrorCode::MalformedCode, "DT pairing joins adjacent visits");
        partner[o] = static_cast<int>(av);
        partner[av] = o;
        even_over[av] = (v > 0);
    }

    // Visit t consumes edge before(t) and produces edge t (1-based).
    auto before = [&](int t) { return (t - 2 + n) % n + 1; };

    for (unsigned long mask = 0; mask < (1ul << (nc - 1)) * 2; mask += 2) {
        // Bit j of mask/1 picks the handedness of crossing j; crossing 0 fixed.
        RawDiagram raw;
        raw.set_link(false);
        bool ok = true;
        for (int j = 0; j < nc && ok; ++j) {
            int o = 2 * j + 1;
            int v = partner[o];
            bool flip = (j > 0) && ((mask >> j) & 1ul);
            RawDiagram::RawCrossing rc;
            rc.ends[0] = before(o) - 1;
            rc.ends[2] = o - 1;
            if (!flip) {
                rc.ends[1] = before(v) - 1;
                rc.ends[3] = v - 1;
            } else {
                rc.ends[1] = v - 1;
                rc.ends[3] = before(v) - 1;
            }
            rc.over_slot = even_over[v] ? 1 : 0;
            raw.crossings().push_back(rc);
        }
        if (!ok) continue;
        try {
            return raw.finalize();
        } catch (const Error&) {
            continue;
        }
    }
    throw Error(ErrorCode::Unrealizable, "DT sequence admits no planar embedding");
}

std::vector<long> dt_code(const PlanarDiagram& d) {
    const int nc = d.crossing_count();
    if (nc == 0) return {};
    if (d.is_link()) throw Error(ErrorCode::MalformedCode, "DT codes describe knots");
    auto table = arc_table(d);
    const int n = 2 * nc;
    // Visit time of arc e's head is e; collect the two times per crossing.
    std::vector<std::vector<int>> times(static_cast<size_t>(nc));
    std::vector<std::vector<int>> slots(static_cast<size_t>(nc));
    for (int e = 1; e <= n; ++e) {
        times[table[e].head.crossing].push_back(e);
        slots[table[e].head.crossing].push_back(table[e].head.slot);
    }
    std::vector<long> code(static_cast<size_t>(nc));
    for (int ci = 0; ci < nc; ++ci) {
        int t0 = times[ci][0], t1 = times[ci][1];
        int s0 = slots[ci][0], s1 = slots[ci][1];
        if (t0 % 2 == 0) {
            std::swap(t0, t1);
            std::swap(s0, s1);
        }
        if (t0 % 2 == 0 || t1 % 2 != 0)
            throw Error(ErrorCode::OrientationInconsistent, "crossing visits are not odd/even paired");
        bool even_passes_over = (s1 != 0);  // slot 0 is the incoming under-strand
        code[static_cast<size_t>((t0 - 1) / 2)] = even_passes_over ? t1 : -t1;
    }
    return code;
}

namespace {

std::string encode_with_start(const PlanarDiagram& d, int start_arc, bool forward) {
    // Relabel by walking the diagram from the given arc and direction;
    // remaining components continue greedily from the smallest relabeled
    // candidate.  Returns the serialized, sorted crossing list.
    auto table = arc_table(d);
    const int n = d.n_arcs();
    std::vector<int> relabel(static_cast<size_t>(n) + 1, 0);
    std::vector<bool> flipped(static_cast<size_t>(n) + 1, false);
    int next = 1;

    auto walk_component = [&](int arc0, bool fwd0) {
        int e = arc0;
        bool fwd = fwd0;
        while (relabel[e] == 0) {
            relabel[e] = next++;
            flipped[e] = !fwd;
            EdgeEnd head = fwd ? table[e].head : table[e].tail;
            int out_slot = (head.slot + 2) % 4;
            int e2 = d.crossings()[head.crossing].arcs[out_slot];
            bool fwd2 = (table[e2].tail == EdgeEnd{head.crossing, out_slot});
            e = e2;
            fwd = fwd2;
        }
    };
    walk_component(start_arc, forward);
    // Deterministic continuation for extra components (label-dependent, which
    // is acceptable: starts are minimized over below).
    for (int e = 1; e <= n; ++e)
        if (relabel[e] == 0) walk_component(e, true);

    std::vector<std::array<int, 5>> rows;
    for (const Crossing& c : d.crossings()) {
        // Each strand of the crossing may have its orientation reversed by
        // the new walk; the incoming slot of a reversed strand moves to the
        // opposite side.
        std::array<int, 5> row{};
        int base = flipped[c.arcs[0]] ? 2 : 0;  // new under-in slot
        for (int k = 0; k < 4; ++k) row[k] = relabel[c.arcs[(base + k) % 4]];
        int over_in_abs = flipped[c.arcs[c.over_in]] ? (c.over_in + 2) % 4 : c.over_in;
        row[4] = (over_in_abs - base + 4) % 4;
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream out;
    out << d.free_loops() << ";";
    for (const auto& r : rows) out << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << ":" << r[4] << ";";
    return out.str();
}

}  // namespace

std::string canonical_code(const PlanarDiagram& d) {
    if (d.crossing_count() == 0) {
        std::ostringstream out;
        out << d.free_loops() << ";";
        return out.str();
    }
    std::string best;
    for (int e = 1; e <= d.n_arcs(); ++e)
        for (bool fwd : {true, false}) {
            std::string s = encode_with_start(d, e, fwd);
            if (best.empty() || s < best) best = s;
        }
    return best;
}

}  // namespace ktwist
