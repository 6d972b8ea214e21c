#pragma once

// Independent reference implementations used to pin expected values.  These
// deliberately avoid the library's evaluation strategy: the bracket is a
// plain 2^c state sum with union-find loop counting.

#include "ktwist/diagram.hpp"
#include "ktwist/laurent.hpp"

#include <numeric>
#include <vector>

namespace ktwist::oracle {

inline LaurentPoly brute_force_bracket(const PlanarDiagram& d) {
    const int nc = d.crossing_count();
    LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    if (nc == 0) {
        LaurentPoly r(1);
        for (int i = 1; i < d.free_loops(); ++i) r = r * delta;
        return r;
    }
    // Points: slot s of crossing c is node 4c + s.  Arcs join their two
    // occurrence points; each smoothing joins two slot pairs.
    std::vector<std::pair<int, int>> arc_links;
    {
        std::vector<int> first(static_cast<size_t>(d.n_arcs()) + 1, -1);
        for (int ci = 0; ci < nc; ++ci)
            for (int s = 0; s < 4; ++s) {
                int arc = d.crossings()[ci].arcs[s];
                if (first[arc] < 0)
                    first[arc] = 4 * ci + s;
                else
                    arc_links.push_back({first[arc], 4 * ci + s});
            }
    }
    LaurentPoly total;
    std::vector<int> parent(static_cast<size_t>(4 * nc));
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (unsigned long state = 0; state < (1ul << nc); ++state) {
        std::iota(parent.begin(), parent.end(), 0);
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (const auto& [a, b] : arc_links) unite(a, b);
        int exponent = 0;
        for (int ci = 0; ci < nc; ++ci) {
            if ((state >> ci) & 1ul) {
                unite(4 * ci + 0, 4 * ci + 3);
                unite(4 * ci + 1, 4 * ci + 2);
                exponent -= 1;
            } else {
                unite(4 * ci + 0, 4 * ci + 1);
                unite(4 * ci + 2, 4 * ci + 3);
                exponent += 1;
            }
        }
        int loops = 0;
        for (int p = 0; p < 4 * nc; ++p)
            if (find(p) == p) ++loops;
        LaurentPoly term = LaurentPoly::monomial(1, exponent);
        for (int i = 1; i < loops; ++i) term = term * delta;
        total += term;
    }
    return total;
}

inline LaurentPoly brute_force_jones(const PlanarDiagram& d) {
    LaurentPoly br = brute_force_bracket(d);
    int w = d.writhe();
    LaurentPoly norm = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
    LaurentPoly in_a = norm * br;
    LaurentPoly out;
    for (const auto& [e, c] : in_a.terms()) out += LaurentPoly::monomial(c, -e / 4);
    return out;
}

// |V(-1)|, the determinant read off the state sum.
inline Integer brute_force_determinant(const PlanarDiagram& d) {
    Integer v = brute_force_jones(d).evaluate(-1);
    return v < 0 ? -v : v;
}

// Pinned reference diagrams (standard table forms).
inline PlanarDiagram left_trefoil() { return parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"); }
inline PlanarDiagram figure_eight() { return parse_pd("X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8\n"); }

}  // namespace ktwist::oracle
