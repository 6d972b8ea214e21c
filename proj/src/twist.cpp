#include "ktwist/twist.hpp"

#include <algorithm>
#include <set>

namespace ktwist {

namespace {

// The first matching pair of steps for the site, in face-walk order.
struct SitePlacement {
    FaceStep step_a, step_b;
};

SitePlacement resolve_site(const PlanarDiagram& d, const TwistSite& s) {
    auto details = face_details(d);
    if (s.face < 0 || s.face >= static_cast<int>(details.size()))
        throw Error(ErrorCode::InvalidSite, "site face out of range");
    if (s.arc_a == s.arc_b) throw Error(ErrorCode::InvalidSite, "site arcs must differ");
    const auto& steps = details[static_cast<size_t>(s.face)].steps;
    bool coherent_only = false;
    for (size_t i = 0; i < steps.size(); ++i)
        for (size_t j = 0; j < steps.size(); ++j) {
            if (i == j) continue;
            if (steps[i].arc != s.arc_a || steps[j].arc != s.arc_b) continue;
            if (steps[i].along_flow == steps[j].along_flow) return {steps[i], steps[j]};
            coherent_only = true;
        }
    if (coherent_only)
        throw Error(ErrorCode::InvalidSite, "site strands are coherently oriented on this face");
    throw Error(ErrorCode::InvalidSite, "site arcs do not share the face");
}

}  // namespace

std::vector<TwistSite> find_twist_sites(const PlanarDiagram& d) {
    std::vector<TwistSite> out;
    auto details = face_details(d);
    for (int f = 0; f < static_cast<int>(details.size()); ++f) {
        const auto& steps = details[static_cast<size_t>(f)].steps;
        std::set<std::pair<int, int>> pairs;
        for (size_t i = 0; i < steps.size(); ++i)
            for (size_t j = i + 1; j < steps.size(); ++j) {
                if (steps[i].arc == steps[j].arc) continue;
                if (steps[i].along_flow != steps[j].along_flow) continue;
                pairs.insert({std::min(steps[i].arc, steps[j].arc), std::max(steps[i].arc, steps[j].arc)});
            }
        for (const auto& [a, b] : pairs) out.push_back({a, b, f});
    }
    return out;
}

namespace {

struct InsertionResult {
    PlanarDiagram diagram;
    std::vector<int> labels;
};

// Builds the twist insertion with the given over-diagonal choice.  Which
// diagonal yields which crossing sign depends on the site's geometry, so the
// caller probes and keeps the build matching sign(n).
InsertionResult build_twist(const PlanarDiagram& d, const TwistSite& s, const SitePlacement& place, int m,
                            int over_slot) {
    RawDiagram raw(d);
    const int a_id = s.arc_a - 1;
    const int b_id = s.arc_b - 1;

    std::vector<int> u_seg(static_cast<size_t>(m) + 1), v_seg(static_cast<size_t>(m) + 1);
    u_seg[0] = a_id;
    v_seg[0] = b_id;
    for (int i = 1; i <= m; ++i) {
        u_seg[static_cast<size_t>(i)] = raw.fresh_edge();
        v_seg[static_cast<size_t>(i)] = raw.fresh_edge();
    }
    // East stubs: with an odd number of crossings the strand entering at the
    // bottom leaves at the top, so the east attachments swap.
    int bottom_east = (m % 2 == 0) ? u_seg[static_cast<size_t>(m)] : v_seg[static_cast<size_t>(m)];
    int top_east = (m % 2 == 0) ? v_seg[static_cast<size_t>(m)] : u_seg[static_cast<size_t>(m)];
    raw.reattach(place.step_a.to, bottom_east);  // a's eastern continuation
    raw.reattach(place.step_b.from, top_east);   // b's eastern continuation

    for (int i = 1; i <= m; ++i) {
        RawDiagram::RawCrossing rc;
        int up = u_seg[static_cast<size_t>(i - 1)], uc = u_seg[static_cast<size_t>(i)];
        int vp = v_seg[static_cast<size_t>(i - 1)], vc = v_seg[static_cast<size_t>(i)];
        // Counterclockwise tuple (ES, EN, WN, WS).
        if (i % 2 == 1)
            rc.ends = {vc, uc, vp, up};
        else
            rc.ends = {uc, vc, up, vp};
        rc.over_slot = over_slot;
        raw.crossings().push_back(rc);
    }
    InsertionResult out;
    out.diagram = raw.finalize(&out.labels);
    return out;
}

}  // namespace

TwistResult two_strand_twist_tracked(const PlanarDiagram& d, const TwistSite& s, int n) {
    if (n == 0) throw Error(ErrorCode::ZeroTwist, "a 0-twist changes nothing");
    SitePlacement place = resolve_site(d, s);
    const int m = n > 0 ? n : -n;
    const int first_new = d.crossing_count();
    const int want_sign = n > 0 ? 1 : -1;

    InsertionResult built = build_twist(d, s, place, m, 1);
    if (built.diagram.crossings()[static_cast<size_t>(first_new)].sign != want_sign)
        built = build_twist(d, s, place, m, 0);
    for (int i = 0; i < m; ++i)
        if (built.diagram.crossings()[static_cast<size_t>(first_new + i)].sign != want_sign)
            throw std::logic_error("twist insertion signs are not uniform");

    std::vector<int>& labels = built.labels;
    TwistResult out{std::move(built.diagram), {}};
    if (out.diagram.component_count() != 1 || out.diagram.crossing_count() != d.crossing_count() + m)
        throw std::logic_error("twist insertion produced an unexpected diagram");

    int new_a = labels[static_cast<size_t>(s.arc_a - 1)];
    int new_b = labels[static_cast<size_t>(s.arc_b - 1)];
    // The induced site lives on the face fragment west of the first new
    // crossing.
    auto details = face_details(out.diagram);
    int found = -1;
    for (int f = 0; f < static_cast<int>(details.size()) && found < 0; ++f) {
        const auto& steps = details[static_cast<size_t>(f)].steps;
        bool touches_first = false;
        bool has_a = false, has_b = false;
        bool flow_a = false, flow_b = false;
        for (const auto& st : steps) {
            if (st.to.crossing == first_new || st.from.crossing == first_new) touches_first = true;
            if (st.arc == new_a) {
                has_a = true;
                flow_a = st.along_flow;
            }
            if (st.arc == new_b) {
                has_b = true;
                flow_b = st.along_flow;
            }
        }
        if (touches_first && has_a && has_b && flow_a == flow_b) found = f;
    }
    if (found < 0) throw std::logic_error("twist insertion lost its induced site");
    out.induced_site = {std::min(new_a, new_b), std::max(new_a, new_b), found};
    return out;
}

PlanarDiagram two_strand_twist(const PlanarDiagram& d, const TwistSite& s, int n) {
    return two_strand_twist_tracked(d, s, n).diagram;
}

PlanarDiagram compose_twists(const PlanarDiagram& d, const TwistSite& s, int n, int m) {
    if (n == 0 && m == 0) return d;
    if (n == 0) return two_strand_twist(d, s, m);
    TwistResult first = two_strand_twist_tracked(d, s, n);
    if (m == 0) return first.diagram;
    return two_strand_twist(first.diagram, first.induced_site, m);
}

int band_twist_sign(const Band& b) { return b.half_twist_parity == 1 ? -1 : 1; }

TwistSite band_to_site(const PlanarDiagram& d, const Band& b) {
    TwistSite s{std::min(b.arc_a, b.arc_b), std::max(b.arc_a, b.arc_b), b.face};
    try {
        resolve_site(d, s);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidSite &&
            std::string(e.what()).find("coherently") != std::string::npos)
            throw Error(ErrorCode::CoherentBand, "band attaches to coherently oriented strands");
        throw;
    }
    return s;
}

PlanarDiagram band_surgery(const PlanarDiagram& d, const Band& b) {
    return two_strand_twist(d, band_to_site(d, b), band_twist_sign(b));
}

CompanionSite companion_site(const PlanarDiagram& d, const TwistSite& s) {
    SitePlacement place = resolve_site(d, s);
    auto details = face_details(d);
    const auto& steps = details[static_cast<size_t>(s.face)].steps;
    int ia = -1, ib = -1;
    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
        if (ia < 0 && steps[static_cast<size_t>(i)].arc == place.step_a.arc &&
            steps[static_cast<size_t>(i)].along_flow == place.step_a.along_flow &&
            steps[static_cast<size_t>(i)].from == place.step_a.from)
            ia = i;
        if (ib < 0 && steps[static_cast<size_t>(i)].arc == place.step_b.arc &&
            steps[static_cast<size_t>(i)].along_flow == place.step_b.along_flow &&
            steps[static_cast<size_t>(i)].from == place.step_b.from)
            ib = i;
    }
    if (ia < 0 || ib < 0) throw std::logic_error("companion construction lost the site steps");
    // Push one strand of the site across the other, passing under it; the
    // companion site is the fresh bigon between the displaced pieces.
    R2AddResult slid = r2_add_tracked(d, s.face, ia, ib, /*x_over=*/false);
    TwistSite site{std::min(slid.x_mid_arc, slid.y_mid_arc), std::max(slid.x_mid_arc, slid.y_mid_arc),
                   slid.bigon_face_idx};
    return {std::move(slid.diagram), site};
}

PlanarDiagram companion_twist(const PlanarDiagram& d, const TwistSite& s, int n) {
    // A twist along the companion circle acts with the opposite sign in the
    // diagram convention: its disk is cooriented against the site circle's.
    CompanionSite comp = companion_site(d, s);
    return two_strand_twist(comp.diagram, comp.site, -n);
}

PlanarDiagram encircle_site(const PlanarDiagram& d, const TwistSite& s) {
    SitePlacement place = resolve_site(d, s);
    RawDiagram raw(d);
    raw.set_link(true);
    const int a_id = s.arc_a - 1, b_id = s.arc_b - 1;
    int a1 = raw.fresh_edge(), a2 = raw.fresh_edge();
    int b1 = raw.fresh_edge(), b2 = raw.fresh_edge();
    int c1 = raw.fresh_edge(), c2 = raw.fresh_edge(), c3 = raw.fresh_edge(), c4 = raw.fresh_edge();
    raw.reattach(place.step_a.to, a2);
    raw.reattach(place.step_b.from, b2);
    // Circle: up through both strands on the west, down on the east, under
    // the strands on the way up and over on the way down.
    RawDiagram::RawCrossing x1;  // circle crosses a, west
    x1.ends = {c4, a1, c1, a_id};
    x1.over_slot = 1;
    RawDiagram::RawCrossing x2;  // circle crosses b, west
    x2.ends = {c1, b1, c2, b_id};
    x2.over_slot = 1;
    RawDiagram::RawCrossing x3;  // circle crosses b, east
    x3.ends = {c3, b2, c2, b1};
    x3.over_slot = 0;
    RawDiagram::RawCrossing x4;  // circle crosses a, east
    x4.ends = {c4, a2, c3, a1};
    x4.over_slot = 0;
    raw.crossings().push_back(x1);
    raw.crossings().push_back(x2);
    raw.crossings().push_back(x3);
    raw.crossings().push_back(x4);
    return raw.finalize();
}

PlanarDiagram encircle_companion(const PlanarDiagram& d, const TwistSite& s) {
    SitePlacement place = resolve_site(d, s);
    RawDiagram raw(d);
    raw.set_link(true);
    const int a_id = s.arc_a - 1, b_id = s.arc_b - 1;
    int a1 = raw.fresh_edge(), a2 = raw.fresh_edge();
    int b1 = raw.fresh_edge(), b2 = raw.fresh_edge();
    int w1 = raw.fresh_edge(), w2 = raw.fresh_edge(), w3 = raw.fresh_edge(), w4 = raw.fresh_edge();
    raw.reattach(place.step_a.to, a2);
    raw.reattach(place.step_b.from, b2);
    // The alternative circle is tilted: it dips under the bottom strand on
    // the west, runs through the face, and climbs over the top strand on the
    // east, so its disk is pierced once by each strand.
    RawDiagram::RawCrossing y1;  // circle under a, west
    y1.ends = {a1, w1, a_id, w4};
    y1.over_slot = 0;
    RawDiagram::RawCrossing y2;  // circle under a, east of y1
    y2.ends = {a2, w3, a1, w4};
    y2.over_slot = 0;
    RawDiagram::RawCrossing z1;  // circle over b, west
    z1.ends = {b1, w2, b_id, w1};
    z1.over_slot = 1;
    RawDiagram::RawCrossing z2;  // circle over b, east
    z2.ends = {b2, w2, b1, w3};
    z2.over_slot = 1;
    raw.crossings().push_back(y1);
    raw.crossings().push_back(y2);
    raw.crossings().push_back(z1);
    raw.crossings().push_back(z2);
    return raw.finalize();
}

bool nugatory_kink_certificate(const PlanarDiagram& d, const TwistSite& s) {
    auto table = arc_table(d);
    auto is_loop_at = [&](int arc, int& crossing) {
        if (table[arc].head.crossing != table[arc].tail.crossing) return false;
        crossing = table[arc].head.crossing;
        return true;
    };
    auto incident = [&](int arc, int crossing) {
        return table[arc].head.crossing == crossing || table[arc].tail.crossing == crossing;
    };
    int x = -1;
    if (is_loop_at(s.arc_a, x) && incident(s.arc_b, x)) return true;
    if (is_loop_at(s.arc_b, x) && incident(s.arc_a, x)) return true;
    return false;
}

namespace {

// Twist-knot template: a band folded back on itself, with t crossings
// between its legs, whose fold the closure strand threads (one crossing on
// each leg, alternating over/under).  Determinant |2t+1|.
constexpr bool kClosureOverLeftLeg = true;

// Marked template: diagram plus the labels of the two band legs below the
// twist region.
struct Template {
    PlanarDiagram diagram;
    int left_leg_arc = 0;
    int right_leg_arc = 0;
};

Template twist_template(int t) {
    const int m = t >= 0 ? t : -t;
    RawDiagram raw;
    // Edge i (1-based) joins traversal passage i to passage i+1: ascending
    // leg through tau_1..tau_m, h1, the fold, h2, descending through
    // tau_m..tau_1, then the closure through h2 and h1 and back to the
    // start.  g(0) wraps to the last edge.
    const int n_edges = 2 * m + 4;
    auto g = [&](int i) { return (i == 0 ? n_edges : i) - 1; };

    // Crossing A carries the ascending leg, B the descending one.  The
    // closure runs west through the eye, meeting the right-hand column
    // first; with an odd twist count the ascending leg exits the region on
    // the right, so A and B trade places under it.
    bool a_on_left = (m % 2 == 0);
    RawDiagram::RawCrossing ca;                // ccw (S, E, N, W)
    if (a_on_left)
        ca.ends = {g(m), g(2 * m + 3), g(m + 1), g(2 * m + 4)};
    else
        ca.ends = {g(m), g(2 * m + 2), g(m + 1), g(2 * m + 3)};
    RawDiagram::RawCrossing cb;
    if (a_on_left)
        cb.ends = {g(m + 2), g(2 * m + 2), g(m + 1), g(2 * m + 3)};
    else
        cb.ends = {g(m + 2), g(2 * m + 3), g(m + 1), g(2 * m + 4)};
    // The closure threads the eye: over one leg, under the other.
    bool closure_over_a = (kClosureOverLeftLeg == a_on_left);
    ca.over_slot = closure_over_a ? 1 : 0;  // closure horizontal at {E, W}
    cb.over_slot = closure_over_a ? 0 : 1;
    raw.crossings().push_back(ca);
    raw.crossings().push_back(cb);
    for (int i = 1; i <= m; ++i) {
        RawDiagram::RawCrossing tau;
        // ccw (SE, NE, NW, SW); the ascending passage consumes g(i-1), the
        // descending one consumes g(2m+2-i).
        if (i % 2 == 1)
            tau.ends = {g(2 * m + 3 - i), g(i), g(2 * m + 2 - i), g(i - 1)};
        else
            tau.ends = {g(i - 1), g(2 * m + 2 - i), g(i), g(2 * m + 3 - i)};
        tau.over_slot = (t > 0) ? 0 : 1;
        raw.crossings().push_back(tau);
    }
    std::vector<int> labels;
    Template out{raw.finalize(&labels), 0, 0};
    out.left_leg_arc = labels[static_cast<size_t>(g(2 * m + 4))];
    out.right_leg_arc = labels[static_cast<size_t>(g(2 * m + 2))];
    return out;
}

// The face between the two band legs, below the twist region.
TwistSite template_site(const Template& tpl, int m) {
    const PlanarDiagram& d = tpl.diagram;
    auto details = face_details(d);
    for (int f = 0; f < static_cast<int>(details.size()); ++f) {
        const auto& steps = details[static_cast<size_t>(f)].steps;
        bool has_a = false, has_b = false, flow_a = false, flow_b = false;
        bool anchored = false;
        for (const auto& st : steps) {
            if (st.arc == tpl.left_leg_arc) {
                has_a = true;
                flow_a = st.along_flow;
            }
            if (st.arc == tpl.right_leg_arc) {
                has_b = true;
                flow_b = st.along_flow;
            }
            int anchor = (m >= 1) ? 2 : 1;  // tau_1, or h2 for the bare template
            if (st.to.crossing == anchor || st.from.crossing == anchor) anchored = true;
        }
        if (has_a && has_b && anchored && flow_a == flow_b)
            return {std::min(tpl.left_leg_arc, tpl.right_leg_arc),
                    std::max(tpl.left_leg_arc, tpl.right_leg_arc), f};
    }
    throw std::logic_error("template band face not found");
}

MarkedDiagram marked_template(int t) {
    Template tpl = twist_template(t);
    TwistSite site = template_site(tpl, t >= 0 ? t : -t);
    return {std::move(tpl.diagram), site};
}

}  // namespace

PlanarDiagram twist_knot(int k) {
    if (k < 1) throw std::invalid_argument("twist knots are indexed from 1");
    return twist_template(k).diagram;
}

MarkedDiagram twist_knot_marked(int k) {
    if (k < 1) throw std::invalid_argument("twist knots are indexed from 1");
    return marked_template(k);
}

FamilyCase twist_family_case(int k) {
    MarkedDiagram md = twist_knot_marked(k);
    return {std::move(md.diagram), md.site, -(2 * k + 1)};
}

MarkedDiagram unknot_twist_example() { return marked_template(0); }

MarkedDiagram figure_eight_twist_example() { return twist_knot_marked(2); }

BandExample trivial_band_example() {
    // A kinked unknot; the band spans the kink, where surgery only turns the
    // curl over.
    PlanarDiagram d = r1_add(PlanarDiagram::unknot(), 1, true, true);
    d = r1_add(d, 1, true, true);
    auto sites = find_twist_sites(d);
    for (const auto& s : sites)
        if (nugatory_kink_certificate(d, s)) return {d, Band{s.arc_a, s.arc_b, s.face, 1}};
    throw std::logic_error("kinked unknot lost its band site");
}

}  // namespace ktwist
