#include "ktwist/slopes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ktwist {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedCode: return "MalformedCode";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::OrientationInconsistent: return "OrientationInconsistent";
        case ErrorCode::Unrealizable: return "Unrealizable";
        case ErrorCode::InvalidSite: return "InvalidSite";
        case ErrorCode::ZeroTwist: return "ZeroTwist";
        case ErrorCode::CoherentBand: return "CoherentBand";
        case ErrorCode::ResourceExceeded: return "ResourceExceeded";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSymplectic: return "NotSymplectic";
        case ErrorCode::FixtureMissing: return "FixtureMissing";
        case ErrorCode::NotUnknot: return "NotUnknot";
    }
    return "Unknown";
}

TorusSlope::TorusSlope(std::int64_t p_in, std::int64_t q_in) : p(p_in), q(q_in) {
    if (p == 0 && q == 0) throw std::invalid_argument("(0,0) is not a slope");
    std::int64_t g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    p /= g;
    q /= g;
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
}

std::string TorusSlope::to_string() const {
    std::ostringstream out;
    out << "(" << p << "," << q << ")";
    return out.str();
}

std::int64_t delta(const TorusSlope& a, const TorusSlope& b) {
    std::int64_t d = a.p * b.q - a.q * b.p;
    return d < 0 ? -d : d;
}

TorusSlope surgery_slope(int n) {
    if (n == 0) throw Error(ErrorCode::ZeroTwist, "surgery slope undefined for a 0-twist");
    return TorusSlope(1, n);
}

std::vector<TorusSlope> unit_intersectors(const TorusSlope& mu_prime) {
    // Candidates meeting the meridian once are a*mu +- lambda, i.e. (a, e)
    // with e = +-1.  Meeting mu_prime = (p, q) once then pins a to the
    // integer solutions of |p e - q a| = 1, a finite set unless q = 0.
    if (mu_prime.q == 0)
        throw std::invalid_argument("unit intersectors of the meridian itself are not a finite set");
    std::vector<TorusSlope> out;
    for (std::int64_t e : {std::int64_t(1), std::int64_t(-1)})
        for (std::int64_t target : {std::int64_t(1), std::int64_t(-1)}) {
            // p*e - q*a = target
            std::int64_t num = mu_prime.p * e - target;
            if (num % mu_prime.q != 0) continue;
            out.emplace_back(num / mu_prime.q, e);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FillingClass filling_classification(const TorusSlope& filling, const TorusSlope& disk_slope) {
    FillingClass r;
    r.lens_order = delta(filling, disk_slope);
    r.restores_ambient = (r.lens_order == 1);
    return r;
}

NugatoryVerdict nugatory_slope_test(int n) {
    if (n == 0) throw Error(ErrorCode::ZeroTwist, "nugatory test undefined for a 0-twist");
    return (n == 1 || n == -1) ? NugatoryVerdict::WeaklyNugatoryOnly : NugatoryVerdict::ForcedNugatory;
}

const char* nugatory_verdict_name(NugatoryVerdict v) {
    return v == NugatoryVerdict::ForcedNugatory ? "ForcedNugatory" : "WeaklyNugatoryOnly";
}

}  // namespace ktwist
