#include "ktwist/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ktwist {

namespace {

LaurentPoly loop_value() {
    // delta = -A^2 - A^-2
    return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
}

// Greedy contraction order: repeatedly take the crossing that leaves the
// smallest open boundary, ties to the lowest index.
std::vector<int> contraction_order(const PlanarDiagram& d) {
    const int nc = d.crossing_count();
    auto table = arc_table(d);
    std::vector<bool> processed(static_cast<size_t>(nc), false);
    std::vector<int> order;
    int frontier = 0;
    for (int step = 0; step < nc; ++step) {
        int best = -1, best_score = 0, best_delta = 0;
        for (int ci = 0; ci < nc; ++ci) {
            if (processed[ci]) continue;
            int consumed = 0, fresh = 0;
            for (int s = 0; s < 4; ++s) {
                int e = d.crossings()[ci].arcs[s];
                EdgeEnd other = (table[e].head == EdgeEnd{ci, s}) ? table[e].tail : table[e].head;
                if (other.crossing == ci) continue;  // kink edge stays local
                if (processed[other.crossing])
                    ++consumed;
                else
                    ++fresh;
            }
            int score = frontier - consumed + fresh;
            // Penalize jumps away from the processed region.
            if (step > 0 && consumed == 0) score += 1000;
            if (best < 0 || score < best_score) {
                best = ci;
                best_score = score;
                best_delta = fresh - consumed;
            }
        }
        processed[best] = true;
        order.push_back(best);
        frontier += best_delta;
    }
    return order;
}

using Matching = std::vector<int>;  // over sorted open keys: partner indices

struct StateMap {
    std::map<Matching, LaurentPoly> states;
};

}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& d, int max_crossings) {
    const int nc = d.crossing_count();
    if (nc > max_crossings) {
        std::ostringstream msg;
        msg << "bracket evaluation limited to " << max_crossings << " crossings, got " << nc;
        throw Error(ErrorCode::ResourceExceeded, msg.str());
    }
    LaurentPoly delta = loop_value();
    LaurentPoly extra = LaurentPoly(1);
    int loops_free = d.free_loops();
    if (nc == 0) {
        if (loops_free == 0) return LaurentPoly(1);
        LaurentPoly r(1);
        for (int i = 1; i < loops_free; ++i) r = r * delta;
        return r;
    }
    for (int i = 0; i < loops_free; ++i) extra = extra * delta;

    auto table = arc_table(d);
    std::vector<int> order = contraction_order(d);
    std::vector<int> pos(static_cast<size_t>(nc), -1);
    for (int i = 0; i < nc; ++i) pos[order[i]] = i;

    // An open end is an edge-end on an unprocessed crossing whose partner
    // end is processed.  Keys are encoded as crossing*4 + slot.
    auto key_of = [](const EdgeEnd& e) { return e.crossing * 4 + e.slot; };

    std::map<int, int> open_partner_slot;  // nothing persistent; matchings carry it

    std::vector<int> open_keys;  // sorted
    StateMap cur;
    cur.states[{}] = LaurentPoly(1);

    for (int step = 0; step < nc; ++step) {
        int ci = order[step];
        const Crossing& cx = d.crossings()[ci];

        // Attachment per slot: -2-s2 encodes a kink link to slot s2 of ci;
        // nonnegative values index open_keys (consumed) offset by +1; 0
        // encodes a fresh end.
        struct Slot {
            enum Kind { Kink, Consume, Fresh } kind;
            int arg;  // kink: partner slot; consume: index into open_keys; fresh: new key
        };
        std::array<Slot, 4> slots{};
        for (int s = 0; s < 4; ++s) {
            int e = cx.arcs[s];
            EdgeEnd self{ci, s};
            EdgeEnd other = (table[e].head == self) ? table[e].tail : table[e].head;
            if (other.crossing == ci) {
                slots[s] = {Slot::Kink, other.slot};
            } else if (pos[other.crossing] < step) {
                int k = key_of(self);
                int idx = static_cast<int>(std::lower_bound(open_keys.begin(), open_keys.end(), k) - open_keys.begin());
                slots[s] = {Slot::Consume, idx};
            } else {
                slots[s] = {Slot::Fresh, key_of(other)};
            }
        }

        // New open key set.
        std::vector<int> consumed_idx;
        std::vector<int> fresh_keys;
        for (int s = 0; s < 4; ++s) {
            if (slots[s].kind == Slot::Consume) consumed_idx.push_back(slots[s].arg);
            if (slots[s].kind == Slot::Fresh) fresh_keys.push_back(slots[s].arg);
        }
        std::sort(fresh_keys.begin(), fresh_keys.end());
        fresh_keys.erase(std::unique(fresh_keys.begin(), fresh_keys.end()), fresh_keys.end());
        std::vector<int> next_keys;
        for (size_t i = 0; i < open_keys.size(); ++i)
            if (std::find(consumed_idx.begin(), consumed_idx.end(), static_cast<int>(i)) == consumed_idx.end())
                next_keys.push_back(open_keys[i]);
        for (int k : fresh_keys) next_keys.insert(std::lower_bound(next_keys.begin(), next_keys.end(), k), k);

        std::vector<int> next_index_of_old(open_keys.size(), -1);
        for (size_t i = 0; i < open_keys.size(); ++i) {
            auto it = std::lower_bound(next_keys.begin(), next_keys.end(), open_keys[i]);
            if (it != next_keys.end() && *it == open_keys[i])
                next_index_of_old[i] = static_cast<int>(it - next_keys.begin());
        }
        auto next_index_of_key = [&](int k) {
            return static_cast<int>(std::lower_bound(next_keys.begin(), next_keys.end(), k) - next_keys.begin());
        };

        auto consumed_slot_node = [&](int open_index) {
            for (size_t t = 0; t < consumed_idx.size(); ++t)
                if (consumed_idx[t] == open_index) return 4 + static_cast<int>(t);
            return -1;
        };

        StateMap next;
        for (const auto& [matching, coeff] : cur.states) {
            for (int choice = 0; choice < 2; ++choice) {
                // A-smoothing joins slots (0,1) and (2,3); B joins (0,3),(1,2).
                std::array<std::pair<int, int>, 2> joins =
                    choice == 0 ? std::array<std::pair<int, int>, 2>{{{0, 1}, {2, 3}}}
                                : std::array<std::pair<int, int>, 2>{{{0, 3}, {1, 2}}};

                // Chase strands through a small graph: slot points 0..3 plus
                // one node per consumed open end.  Chain endpoints are fresh
                // slots and consumed ends whose matching partner survives;
                // cycles close loops.
                const int n_nodes = 4 + static_cast<int>(consumed_idx.size());
                struct Lk {
                    int a, b;
                    bool used = false;
                };
                std::vector<Lk> links;
                std::vector<std::vector<int>> inc(static_cast<size_t>(n_nodes));
                auto link = [&](int a, int b) {
                    inc[a].push_back(static_cast<int>(links.size()));
                    inc[b].push_back(static_cast<int>(links.size()));
                    links.push_back({a, b, false});
                };
                for (auto [x, y] : joins) link(x, y);
                for (int s = 0; s < 4; ++s) {
                    if (slots[s].kind == Slot::Kink) {
                        if (slots[s].arg > s) link(s, slots[s].arg);
                    } else if (slots[s].kind == Slot::Consume) {
                        link(s, consumed_slot_node(slots[s].arg));
                    }
                }
                for (size_t t = 0; t < consumed_idx.size(); ++t) {
                    int partner = matching[consumed_idx[t]];
                    int pn = consumed_slot_node(partner);
                    if (pn >= 0 && pn > 4 + static_cast<int>(t)) link(4 + static_cast<int>(t), pn);
                }

                // Identity carried by an endpoint node, as an index into
                // next_keys.
                auto endpoint_target = [&](int node) {
                    if (node < 4) return next_index_of_key(slots[node].arg);  // fresh slot
                    int partner = matching[consumed_idx[static_cast<size_t>(node - 4)]];
                    return next_index_of_old[partner];
                };
                auto walk_from = [&](int n0) {
                    int cur_node = n0;
                    while (true) {
                        int eid = -1;
                        for (int cand : inc[cur_node])
                            if (!links[cand].used) {
                                eid = cand;
                                break;
                            }
                        if (eid < 0) return cur_node;
                        links[eid].used = true;
                        cur_node = (links[eid].a == cur_node) ? links[eid].b : links[eid].a;
                    }
                };

                std::vector<std::pair<int, int>> new_pairs;
                int loops = 0;
                for (int n0 = 0; n0 < n_nodes; ++n0) {
                    if (inc[n0].size() != 1 || links[inc[n0][0]].used) continue;
                    int other = walk_from(n0);
                    new_pairs.emplace_back(endpoint_target(n0), endpoint_target(other));
                }
                for (const auto& l : links) {
                    if (l.used) continue;
                    walk_from(l.a);
                    ++loops;
                }

                // Assemble the next matching: surviving pairs plus new ones.
                Matching nm(next_keys.size(), -1);
                for (size_t i = 0; i < open_keys.size(); ++i) {
                    int ni = next_index_of_old[i];
                    if (ni < 0) continue;
                    int p = matching[i];
                    int np = next_index_of_old[p];
                    if (np >= 0) nm[ni] = np;
                }
                for (auto [x, y] : new_pairs) {
                    nm[x] = y;
                    nm[y] = x;
                }
                for (int v : nm)
                    if (v < 0) throw std::logic_error("bracket state has an unmatched open end");

                LaurentPoly c = coeff * LaurentPoly::monomial(1, choice == 0 ? 1 : -1);
                for (int i = 0; i < loops; ++i) c = c * delta;
                auto it = next.states.find(nm);
                if (it == next.states.end())
                    next.states.emplace(std::move(nm), std::move(c));
                else
                    it->second += c;
            }
        }
        open_keys = std::move(next_keys);
        cur = std::move(next);
    }

    LaurentPoly total;
    for (auto& [m, c] : cur.states) total += c;
    // Every state closed at least one loop; the reduced bracket divides out
    // a single delta.
    LaurentPoly result = total.divide_exact(delta);
    return result * extra;
}

LaurentPoly jones(const PlanarDiagram& d, int max_crossings) {
    if (d.is_link() || d.component_count() != 1)
        throw Error(ErrorCode::MalformedCode, "Jones normalization here applies to knots");
    LaurentPoly br = kauffman_bracket(d, max_crossings);
    int w = d.writhe();
    LaurentPoly norm = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
    LaurentPoly in_a = norm * br;
    LaurentPoly out;
    for (const auto& [e, c] : in_a.terms()) {
        if (e % 4 != 0) throw std::logic_error("knot Jones exponents must be multiples of 4 in A");
        out += LaurentPoly::monomial(c, -e / 4);
    }
    return out;
}

GoeritzData goeritz(const PlanarDiagram& d) {
    GoeritzData out;
    const int nc = d.crossing_count();
    if (nc == 0) {
        out.reduced = IntMatrix(0, 0);
        return out;
    }
    auto details = face_details(d);
    auto corners = corner_faces(d);
    const int nf = static_cast<int>(details.size());

    // Two-color faces across arcs.
    std::vector<std::array<int, 2>> arc_faces(static_cast<size_t>(d.n_arcs()) + 1, {-1, -1});
    for (int f = 0; f < nf; ++f)
        for (const auto& step : details[f].steps) arc_faces[step.arc][step.along_flow ? 0 : 1] = f;
    std::vector<int> color(static_cast<size_t>(nf), -1);
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int e = 1; e <= d.n_arcs(); ++e) {
            if (arc_faces[e][0] == f || arc_faces[e][1] == f) {
                int g = arc_faces[e][0] == f ? arc_faces[e][1] : arc_faces[e][0];
                if (color[g] < 0) {
                    color[g] = 1 - color[f];
                    stack.push_back(g);
                } else if (color[g] == color[f]) {
                    throw std::logic_error("diagram faces are not checkerboard colorable");
                }
            }
        }
    }

    out.shaded.assign(static_cast<size_t>(nf), false);
    std::vector<int> shaded_index(static_cast<size_t>(nf), -1);
    int m = 0;
    for (int f = 0; f < nf; ++f)
        if (color[f] == 1) {
            out.shaded[f] = true;
            shaded_index[f] = m++;
        }

    IntMatrix full(m, m);
    for (int ci = 0; ci < nc; ++ci) {
        // Opposite corners share a color; find the shaded pair.
        int f0 = corners[ci][0], f1 = corners[ci][1];
        bool shaded02 = out.shaded[f0];
        int fa, fb;
        int eta;
        if (shaded02) {
            fa = corners[ci][0];
            fb = corners[ci][2];
            eta = -1;
        } else {
            fa = f1;
            fb = corners[ci][3];
            eta = 1;
        }
        int i = shaded_index[fa], j = shaded_index[fb];
        if (i == j) continue;
        full.at(i, j) -= eta;
        full.at(j, i) -= eta;
        full.at(i, i) += eta;
        full.at(j, j) += eta;
    }

    if (m <= 1) {
        out.reduced = IntMatrix(0, 0);
        return out;
    }
    out.reduced = full.minor_removed(0, 0);
    // Guard: the determinant magnitude must not depend on the deleted index.
    Integer det0 = out.reduced.determinant();
    Integer det1 = full.minor_removed(1, 1).determinant();
    if (det0 < 0) det0 = -det0;
    if (det1 < 0) det1 = -det1;
    if (det0 != det1) throw std::logic_error("Goeritz deletion invariance violated");
    return out;
}

Integer determinant(const PlanarDiagram& d) {
    Integer det = goeritz(d).reduced.determinant();
    return det < 0 ? -det : det;
}

AbelianGroup branched_cover_homology(const PlanarDiagram& d) { return cokernel(goeritz(d).reduced); }

Distinctness certify_distinct(const PlanarDiagram& d1, const PlanarDiagram& d2, int max_crossings) {
    Distinctness r;
    Integer det1 = determinant(d1), det2 = determinant(d2);
    if (det1 != det2) {
        r.distinct = true;
        r.invariant = "determinant";
        r.lhs = det1.str();
        r.rhs = det2.str();
        return r;
    }
    AbelianGroup h1 = branched_cover_homology(d1), h2 = branched_cover_homology(d2);
    if (!(h1 == h2)) {
        r.distinct = true;
        r.invariant = "homology";
        r.lhs = h1.to_string();
        r.rhs = h2.to_string();
        return r;
    }
    LaurentPoly j1 = jones(d1, max_crossings), j2 = jones(d2, max_crossings);
    if (j1 != j2) {
        r.distinct = true;
        r.invariant = "jones";
        r.lhs = j1.to_string("t");
        r.rhs = j2.to_string("t");
        return r;
    }
    return r;
}

}  // namespace ktwist
