#include "ktwist/moves.hpp"

#include "ktwist/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace ktwist {

namespace {

// Deletes the listed crossings, splicing each strand straight through them.
// Strand pieces that close up entirely inside the deleted set become free
// loops.
PlanarDiagram remove_crossings_spliced(const PlanarDiagram& d, const std::vector<int>& removed) {
    std::vector<bool> gone(static_cast<size_t>(d.crossing_count()), false);
    for (int r : removed) gone[r] = true;

    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        return parent[x] = find(it->second);
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (int r : removed) {
        const Crossing& c = d.crossings()[r];
        unite(c.arcs[0], c.arcs[2]);
        unite(c.arcs[1], c.arcs[3]);
    }

    RawDiagram raw;
    raw.set_link(d.is_link());
    raw.free_loops() = d.free_loops();
    std::set<int> survivors;
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
        if (gone[ci]) continue;
        RawDiagram::RawCrossing rc;
        const Crossing& c = d.crossings()[ci];
        for (int s = 0; s < 4; ++s) {
            int id = find(c.arcs[s]);
            rc.ends[s] = id;
            survivors.insert(id);
        }
        rc.over_slot = c.over_in;
        raw.crossings().push_back(rc);
    }
    std::set<int> vanished;
    for (int r : removed)
        for (int s = 0; s < 4; ++s) {
            int id = find(d.crossings()[r].arcs[s]);
            if (!survivors.count(id)) vanished.insert(id);
        }
    raw.free_loops() += static_cast<int>(vanished.size());
    return raw.finalize();
}

bool over_at(const Crossing& c, int slot) { return (slot - c.over_in) % 2 == 0; }

}  // namespace

std::optional<PlanarDiagram> try_r1_remove(const PlanarDiagram& d, int crossing) {
    if (crossing < 0 || crossing >= d.crossing_count()) return std::nullopt;
    const Crossing& c = d.crossings()[crossing];
    bool kink = false;
    for (int s = 0; s < 4; ++s)
        if (c.arcs[s] == c.arcs[(s + 1) % 4]) kink = true;
    if (!kink) return std::nullopt;
    return remove_crossings_spliced(d, {crossing});
}

namespace {

std::optional<PlanarDiagram> r2_remove_impl(const PlanarDiagram& d, const FaceDetail& fd) {
    if (fd.steps.size() != 2) return std::nullopt;
    const FaceStep& s0 = fd.steps[0];
    const FaceStep& s1 = fd.steps[1];
    if (s0.arc == s1.arc) return std::nullopt;
    int x1 = s0.to.crossing, x2 = s1.to.crossing;
    if (x1 == x2) return std::nullopt;
    // One strand must run on top at both corners.
    bool a_over_1 = over_at(d.crossings()[x1], s0.to.slot);
    bool a_over_2 = over_at(d.crossings()[x2], s0.from.slot);
    if (a_over_1 != a_over_2) return std::nullopt;
    return remove_crossings_spliced(d, {x1, x2});
}

std::optional<PlanarDiagram> r3_impl(const PlanarDiagram& d, const FaceDetail& fd, int rot);

}  // namespace

std::optional<PlanarDiagram> try_r2_remove(const PlanarDiagram& d, int face_idx) {
    auto details = face_details(d);
    if (face_idx < 0 || face_idx >= static_cast<int>(details.size())) return std::nullopt;
    return r2_remove_impl(d, details[face_idx]);
}

std::optional<PlanarDiagram> try_r3(const PlanarDiagram& d, int face_idx, int rot) {
    auto details = face_details(d);
    if (face_idx < 0 || face_idx >= static_cast<int>(details.size())) return std::nullopt;
    return r3_impl(d, details[face_idx], rot);
}

namespace {

std::optional<PlanarDiagram> r3_impl(const PlanarDiagram& d, const FaceDetail& fd, int rot) {
    if (fd.steps.size() != 3) return std::nullopt;
    const FaceStep& s0 = fd.steps[static_cast<size_t>(rot % 3)];
    const FaceStep& s1 = fd.steps[static_cast<size_t>((rot + 1) % 3)];
    const FaceStep& s2 = fd.steps[static_cast<size_t>((rot + 2) % 3)];
    int e0 = s0.arc, e1 = s1.arc, e2 = s2.arc;
    if (e0 == e1 || e1 == e2 || e0 == e2) return std::nullopt;
    int P = s0.to.crossing, Q = s1.to.crossing, R = s2.to.crossing;
    if (P == Q || Q == R || P == R) return std::nullopt;
    int x = s0.to.slot, y = s1.to.slot, z = s2.to.slot;
    // The strand through e0 must pass over both others, or under both.
    bool over_p = over_at(d.crossings()[P], x);
    bool over_r = over_at(d.crossings()[R], (z + 1) % 4);
    if (over_p != over_r) return std::nullopt;

    RawDiagram raw(d);
    auto old_end = [&](int ci, int slot) { return d.crossings()[ci].arcs[slot] - 1; };
    int l_out_left = old_end(R, (z + 1) % 4);
    int l_out_right = old_end(P, (x + 2) % 4);
    int m_in = old_end(P, (x + 1) % 4);
    int m_out = old_end(Q, (y + 2) % 4);
    int n_in = old_end(Q, (y + 1) % 4);
    int n_out = old_end(R, (z + 2) % 4);

    auto& cp = raw.crossings()[P].ends;
    cp[x % 4] = l_out_left;
    cp[(x + 1) % 4] = e1 - 1;
    cp[(x + 2) % 4] = e0 - 1;
    cp[(x + 3) % 4] = m_out;
    auto& cq = raw.crossings()[Q].ends;
    cq[y % 4] = m_in;
    cq[(y + 1) % 4] = e2 - 1;
    cq[(y + 2) % 4] = e1 - 1;
    cq[(y + 3) % 4] = n_out;
    auto& cr = raw.crossings()[R].ends;
    cr[z % 4] = n_in;
    cr[(z + 1) % 4] = e0 - 1;
    cr[(z + 2) % 4] = e2 - 1;
    cr[(z + 3) % 4] = l_out_right;
    return raw.finalize();
}

}  // namespace

PlanarDiagram r1_add(const PlanarDiagram& d, int arc, bool loop_left, bool over_first) {
    if (d.crossing_count() == 0) {
        // Kink on the bare circle: a one-crossing diagram.
        RawDiagram raw;
        raw.set_link(d.is_link());
        raw.free_loops() = d.free_loops() - 1;
        RawDiagram::RawCrossing rc;
        if (loop_left)
            rc.ends = {0, 1, 1, 0};
        else
            rc.ends = {0, 0, 1, 1};
        rc.over_slot = over_first ? 0 : 1;
        raw.crossings().push_back(rc);
        return raw.finalize();
    }
    auto table = arc_table(d);
    if (arc < 1 || arc > d.n_arcs()) throw std::invalid_argument("r1_add: bad arc");
    RawDiagram raw(d);
    int loop = raw.fresh_edge();
    int tail_piece = arc - 1;
    int head_piece = raw.fresh_edge();
    raw.reattach(table[arc].head, head_piece);
    RawDiagram::RawCrossing rc;
    // Strand passes slots 0 -> 2; the loop occupies an adjacent pair.
    if (loop_left)
        rc.ends = {tail_piece, head_piece, loop, loop};
    else
        rc.ends = {tail_piece, loop, loop, head_piece};
    rc.over_slot = over_first ? 0 : 1;
    raw.crossings().push_back(rc);
    return raw.finalize();
}

R2AddResult r2_add_tracked(const PlanarDiagram& d, int face_idx, int step_x, int step_y, bool x_over) {
    auto details = face_details(d);
    const FaceDetail& fd = details.at(static_cast<size_t>(face_idx));
    const FaceStep& sx = fd.steps.at(static_cast<size_t>(step_x));
    const FaceStep& sy = fd.steps.at(static_cast<size_t>(step_y));
    if (sx.arc == sy.arc) throw Error(ErrorCode::InvalidSite, "finger move needs two distinct arcs");

    RawDiagram raw(d);
    int xid = sx.arc - 1, yid = sy.arc - 1;
    int x_mid = raw.fresh_edge();
    int x_a = raw.fresh_edge();
    int y_1 = raw.fresh_edge();
    int y_2 = raw.fresh_edge();
    raw.reattach(sx.to, x_a);
    raw.reattach(sy.to, y_2);
    int x1_index = static_cast<int>(raw.crossings().size());
    // Walking y, the finger of x is crossed at X1 then X2; walking x, X2
    // comes first.  Tuples are counterclockwise.
    RawDiagram::RawCrossing cx1;
    cx1.ends = {y_1, x_a, yid, x_mid};
    cx1.over_slot = x_over ? 1 : 0;
    RawDiagram::RawCrossing cx2;
    cx2.ends = {y_2, xid, y_1, x_mid};
    cx2.over_slot = x_over ? 1 : 0;
    raw.crossings().push_back(cx1);
    raw.crossings().push_back(cx2);

    std::vector<int> labels;
    R2AddResult out{raw.finalize(&labels), 0, 0, -1};
    out.x_mid_arc = labels[static_cast<size_t>(x_mid)];
    out.y_mid_arc = labels[static_cast<size_t>(y_1)];
    // Locate the bigon between the two new crossings: its boundary consists
    // of exactly the two middle pieces.
    auto new_details = face_details(out.diagram);
    for (int f = 0; f < static_cast<int>(new_details.size()); ++f) {
        const auto& steps = new_details[f].steps;
        if (steps.size() != 2) continue;
        int a = steps[0].arc, b = steps[1].arc;
        if ((a == out.x_mid_arc && b == out.y_mid_arc) || (a == out.y_mid_arc && b == out.x_mid_arc)) {
            out.bigon_face_idx = f;
            break;
        }
    }
    if (out.bigon_face_idx < 0) throw std::logic_error("finger move lost its bigon");
    (void)x1_index;
    return out;
}

PlanarDiagram r2_add(const PlanarDiagram& d, int face_idx, int step_x, int step_y, bool x_over) {
    return r2_add_tracked(d, face_idx, step_x, step_y, x_over).diagram;
}

namespace {

// All decreasing moves available, ordered deterministically by the lowest
// arc label they touch.
struct CandidateMove {
    int sort_key;
    PlanarDiagram result;
};

std::vector<CandidateMove> decreasing_moves(const PlanarDiagram& d) {
    std::vector<CandidateMove> out;
    for (int ci = 0; ci < d.crossing_count(); ++ci)
        if (auto r = try_r1_remove(d, ci)) {
            int key = *std::min_element(d.crossings()[ci].arcs.begin(), d.crossings()[ci].arcs.end());
            out.push_back({key, std::move(*r)});
        }
    auto details = face_details(d);
    for (int f = 0; f < static_cast<int>(details.size()); ++f)
        if (details[f].steps.size() == 2)
            if (auto r = r2_remove_impl(d, details[f])) {
                int key = std::min(details[f].steps[0].arc, details[f].steps[1].arc);
                out.push_back({key, std::move(*r)});
            }
    std::stable_sort(out.begin(), out.end(),
                     [](const CandidateMove& a, const CandidateMove& b) { return a.sort_key < b.sort_key; });
    return out;
}

PlanarDiagram greedy_reduce(PlanarDiagram d) {
    while (true) {
        auto moves = decreasing_moves(d);
        if (moves.empty()) return d;
        d = moves.front().result;
        if (d.crossing_count() == 0) return d;
    }
}

}  // namespace

PlanarDiagram simplify(const PlanarDiagram& d, const SimplifyBudget& budget) {
    auto start_time = std::chrono::steady_clock::now();
    auto exhausted = [&](int expansions) {
        if (expansions >= budget.max_r3_moves) return true;
        if (budget.time_bound && std::chrono::steady_clock::now() - start_time > *budget.time_bound) return true;
        return false;
    };

    PlanarDiagram best = greedy_reduce(d);
    if (best.crossing_count() == 0) return best;
    const int cap = std::max(best.crossing_count(), budget.max_crossings_explored);

    // Best-first over greedy-reduced states, smallest diagrams first,
    // insertion order breaking ties.
    std::map<std::pair<int, long>, PlanarDiagram> open;
    std::set<std::string> seen;
    long counter = 0;
    open.emplace(std::make_pair(best.crossing_count(), counter++), best);
    seen.insert(canonical_code(best));
    int expansions = 0;

    while (!open.empty() && !exhausted(expansions)) {
        PlanarDiagram cur = std::move(open.begin()->second);
        open.erase(open.begin());
        ++expansions;

        std::vector<PlanarDiagram> nexts;
        auto details = face_details(cur);
        for (int f = 0; f < static_cast<int>(details.size()); ++f) {
            if (details[f].steps.size() != 3) continue;
            for (int rot = 0; rot < 3; ++rot)
                if (auto r = r3_impl(cur, details[f], rot)) nexts.push_back(std::move(*r));
        }
        if (budget.max_crossings_explored > 0 && cur.crossing_count() + 2 <= cap) {
            for (int f = 0; f < static_cast<int>(details.size()); ++f) {
                const auto& steps = details[f].steps;
                for (size_t i = 0; i < steps.size(); ++i)
                    for (size_t j = 0; j < steps.size(); ++j) {
                        if (i == j || steps[i].arc == steps[j].arc) continue;
                        for (bool over : {true, false})
                            nexts.push_back(r2_add(cur, f, static_cast<int>(i), static_cast<int>(j), over));
                    }
            }
        }
        for (auto& nd : nexts) {
            PlanarDiagram reduced = greedy_reduce(std::move(nd));
            if (reduced.crossing_count() < best.crossing_count()) best = reduced;
            if (best.crossing_count() == 0) return best;
            if (reduced.crossing_count() + 2 > cap + 2) continue;
            std::string code = canonical_code(reduced);
            if (seen.insert(code).second)
                open.emplace(std::make_pair(reduced.crossing_count(), counter++), std::move(reduced));
        }
    }
    return best;
}

const char* verdict3_name(Verdict3 v) {
    switch (v) {
        case Verdict3::Yes: return "Yes";
        case Verdict3::No: return "No";
        case Verdict3::Unknown: return "Unknown";
    }
    return "?";
}

Verdict3 is_unknot(const PlanarDiagram& d, const SimplifyBudget& budget) {
    if (d.is_link() || d.component_count() != 1)
        throw Error(ErrorCode::MalformedCode, "unknot detection applies to knot diagrams");
    PlanarDiagram s = simplify(d, budget);
    if (s.crossing_count() == 0) return Verdict3::Yes;
    if (determinant(s) != 1) return Verdict3::No;
    try {
        if (jones(s) != LaurentPoly(1)) return Verdict3::No;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ResourceExceeded) throw;
    }
    return Verdict3::Unknown;
}

bool certify_unlink(const PlanarDiagram& d, const SimplifyBudget& budget) {
    PlanarDiagram s = simplify(d, budget);
    return s.crossing_count() == 0;
}

PlanarDiagram scramble(const PlanarDiagram& d, int moves, std::uint64_t seed, int max_crossings) {
    std::mt19937_64 rng(seed);
    PlanarDiagram cur = d;
    for (int step = 0; step < moves; ++step) {
        int kind = static_cast<int>(rng() % 10);
        if (cur.crossing_count() == 0) kind = 0;  // only a kink applies
        if (kind < 3) {
            if (cur.crossing_count() + 1 > max_crossings) continue;
            int arc = cur.crossing_count() == 0 ? 1 : 1 + static_cast<int>(rng() % cur.n_arcs());
            cur = r1_add(cur, arc, rng() % 2 == 0, rng() % 2 == 0);
        } else if (kind < 7) {
            if (cur.crossing_count() + 2 > max_crossings) continue;
            auto details = face_details(cur);
            std::vector<std::array<int, 3>> options;
            for (int f = 0; f < static_cast<int>(details.size()); ++f) {
                const auto& steps = details[f].steps;
                for (size_t i = 0; i < steps.size(); ++i)
                    for (size_t j = 0; j < steps.size(); ++j)
                        if (i != j && steps[i].arc != steps[j].arc)
                            options.push_back({f, static_cast<int>(i), static_cast<int>(j)});
            }
            if (options.empty()) continue;
            auto pick = options[rng() % options.size()];
            cur = r2_add(cur, pick[0], pick[1], pick[2], rng() % 2 == 0);
        } else {
            auto details = face_details(cur);
            std::vector<std::pair<int, int>> options;
            for (int f = 0; f < static_cast<int>(details.size()); ++f)
                if (details[f].steps.size() == 3)
                    for (int rot = 0; rot < 3; ++rot) options.emplace_back(f, rot);
            bool done = false;
            while (!options.empty() && !done) {
                size_t k = rng() % options.size();
                if (auto r = try_r3(cur, options[k].first, options[k].second)) {
                    cur = std::move(*r);
                    done = true;
                }
                options.erase(options.begin() + static_cast<long>(k));
            }
        }
    }
    return cur;
}

}  // namespace ktwist
