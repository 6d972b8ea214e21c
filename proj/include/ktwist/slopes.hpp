#pragma once

#include "ktwist/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ktwist {

// Slope on a torus as a primitive integer pair in a fixed (meridian,
// longitude) basis.  (p, q) and (-p, -q) name the same slope; the canonical
// representative has p > 0, or equals (0, 1).
struct TorusSlope {
    std::int64_t p = 0;
    std::int64_t q = 1;

    TorusSlope() = default;
    TorusSlope(std::int64_t p_in, std::int64_t q_in);

    bool operator==(const TorusSlope& other) const { return p == other.p && q == other.q; }
    bool operator!=(const TorusSlope& other) const { return !(*this == other); }
    bool operator<(const TorusSlope& other) const { return p != other.p ? p < other.p : q < other.q; }

    std::string to_string() const;
};

inline TorusSlope meridian() { return TorusSlope(1, 0); }
inline TorusSlope seifert_longitude() { return TorusSlope(0, 1); }

// Minimal geometric intersection number |p_a q_b - q_a p_b|.
std::int64_t delta(const TorusSlope& a, const TorusSlope& b);

// The surgery slope induced on the lifted twisting arc by an n-twist
// downstairs: 1/n in the surface framing, i.e. (1, n) in the
// (meridian, longitude) basis.  Throws ZeroTwist for n = 0.
TorusSlope surgery_slope(int n);

// All slopes meeting both the meridian (1,0) and mu_prime exactly once
// geometrically.  Finite whenever mu_prime is not the meridian itself.
std::vector<TorusSlope> unit_intersectors(const TorusSlope& mu_prime);

struct FillingClass {
    bool restores_ambient = false;
    std::int64_t lens_order = 1;  // delta(filling, disk_slope); 0 flags the reducible filling

    bool operator==(const FillingClass& other) const {
        return restores_ambient == other.restores_ambient && lens_order == other.lens_order;
    }
};

// Classifies the Dehn filling of the unknotted-lift exterior along `filling`
// when the disk slope is `disk_slope`: the filled manifold carries a lens
// summand of order delta(filling, disk_slope), trivial exactly when that
// number is 1.
FillingClass filling_classification(const TorusSlope& filling, const TorusSlope& disk_slope);

enum class NugatoryVerdict { ForcedNugatory, WeaklyNugatoryOnly };

// Order-based dichotomy for a cosmetic twist with unknotted lift: orders
// >= 2 force the twist to be nugatory, order 1 only weakly nugatory.
NugatoryVerdict nugatory_slope_test(int n);

const char* nugatory_verdict_name(NugatoryVerdict v);

}  // namespace ktwist
