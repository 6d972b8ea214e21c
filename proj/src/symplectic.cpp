#include "ktwist/symplectic.hpp"

#include <numeric>
#include <sstream>

namespace ktwist {

bool CurveClass::is_zero() const {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntMatrix symplectic_form(int genus) {
    IntMatrix j(2 * genus, 2 * genus);
    for (int i = 0; i < genus; ++i) {
        j.at(2 * i, 2 * i + 1) = 1;
        j.at(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

bool is_symplectic(const IntMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
    IntMatrix j = symplectic_form(m.rows() / 2);
    return m.transposed() * j * m == j;
}

Integer symplectic_pairing(const std::vector<Integer>& x, const std::vector<Integer>& y) {
    if (x.size() != y.size() || x.size() % 2 != 0)
        throw Error(ErrorCode::DimensionMismatch, "symplectic pairing needs equal even-length vectors");
    Integer s = 0;
    for (size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
}

SymplecticMatrix::SymplecticMatrix(IntMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() % 2 != 0)
        throw Error(ErrorCode::DimensionMismatch, "symplectic matrix must be square of even size");
    if (!is_symplectic(mat_)) throw Error(ErrorCode::NotSymplectic, "matrix does not preserve the symplectic form");
}

SymplecticMatrix SymplecticMatrix::identity(int genus) { return SymplecticMatrix(IntMatrix::identity(2 * genus)); }

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& other) const {
    if (genus() != other.genus()) throw Error(ErrorCode::DimensionMismatch, "symplectic product genus mismatch");
    return SymplecticMatrix(mat_ * other.mat_);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    // C^T J C = J gives C^-1 = -J C^T J.
    IntMatrix j = symplectic_form(genus());
    IntMatrix inv = j * mat_.transposed() * j;
    for (int i = 0; i < inv.rows(); ++i)
        for (int k = 0; k < inv.cols(); ++k) inv.at(i, k) = -inv.at(i, k);
    return SymplecticMatrix(std::move(inv));
}

CurveClass SymplecticMatrix::apply(const CurveClass& v) const {
    if (v.genus() != genus()) throw Error(ErrorCode::DimensionMismatch, "curve class genus mismatch");
    CurveClass r;
    r.v.assign(v.v.size(), 0);
    for (int i = 0; i < mat_.rows(); ++i)
        for (int j = 0; j < mat_.cols(); ++j) r.v[i] += mat_.at(i, j) * v.v[j];
    return r;
}

SymplecticMatrix transvection(const CurveClass& v, long n) {
    if (v.v.empty() || v.v.size() % 2 != 0)
        throw Error(ErrorCode::DimensionMismatch, "curve class must have positive even length");
    int dim = static_cast<int>(v.v.size());
    // x -> x + n <x, v> v written out as I - n v v^T J.
    IntMatrix j = symplectic_form(dim / 2);
    IntMatrix m = IntMatrix::identity(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            Integer jv = 0;  // (Jv)_c = <e_c, v>
            for (int k = 0; k < dim; ++k) jv += j.at(c, k) * v.v[k];
            m.at(r, c) += Integer(n) * v.v[r] * jv;
        }
    return SymplecticMatrix(std::move(m));
}

bool verify_core_relation(const SymplecticMatrix& A, const SymplecticMatrix& B, const SymplecticMatrix& C,
                          const CurveClass& v, long n) {
    if (A.genus() != B.genus() || A.genus() != C.genus() || A.genus() != v.genus())
        throw Error(ErrorCode::DimensionMismatch, "core relation operands must share one genus");
    SymplecticMatrix lhs = transvection(v, n) * A;
    SymplecticMatrix rhs = C * B * C.inverse();
    return lhs == rhs;
}

bool is_commutator_witness(const SymplecticMatrix& M, const SymplecticMatrix& G, const SymplecticMatrix& H) {
    if (M.genus() != G.genus() || M.genus() != H.genus())
        throw Error(ErrorCode::DimensionMismatch, "commutator operands must share one genus");
    return M == G * H * G.inverse() * H.inverse();
}

namespace {

std::string poly_string(const std::vector<Integer>& coeffs) {
    std::ostringstream out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ",";
        out << coeffs[i];
    }
    return out.str();
}

std::string divisor_string(const AbelianGroup& g) { return g.to_string(); }

}  // namespace

ConjugacyResidue conjugacy_residue(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    if (a.genus() != b.genus()) throw Error(ErrorCode::DimensionMismatch, "conjugacy residue genus mismatch");
    ConjugacyResidue r;
    Integer ta = a.matrix().trace(), tb = b.matrix().trace();
    if (ta != tb) {
        r.distinct = true;
        std::ostringstream out;
        out << "trace: " << ta << " vs " << tb;
        r.witness = out.str();
        return r;
    }
    auto pa = a.matrix().char_poly(), pb = b.matrix().char_poly();
    if (pa != pb) {
        r.distinct = true;
        r.witness = "char poly: [" + poly_string(pa) + "] vs [" + poly_string(pb) + "]";
        return r;
    }
    // Invariant factors of A -+ I distinguish conjugacy classes sharing a
    // characteristic polynomial.
    IntMatrix id = IntMatrix::identity(a.matrix().rows());
    AbelianGroup am = cokernel(a.matrix() - id), bm = cokernel(b.matrix() - id);
    if (!(am == bm)) {
        r.distinct = true;
        r.witness = "coker(M - I): " + divisor_string(am) + " vs " + divisor_string(bm);
        return r;
    }
    AbelianGroup ap = cokernel(a.matrix() + id), bp = cokernel(b.matrix() + id);
    if (!(ap == bp)) {
        r.distinct = true;
        r.witness = "coker(M + I): " + divisor_string(ap) + " vs " + divisor_string(bp);
        return r;
    }
    return r;
}

SymplecticMatrix figure_eight_monodromy_action() {
    CurveClass a{{1, 0}};
    CurveClass b{{0, 1}};
    return transvection(a, 1) * transvection(b, -1);
}

SymplecticSampler::SymplecticSampler(int genus, unsigned long long seed) : genus_(genus), state_(seed) {
    if (genus_ < 1) throw std::invalid_argument("sampler genus must be positive");
    if (state_ == 0) state_ = 0x9e3779b97f4a7c15ull;
}

long SymplecticSampler::next_int(long lo, long hi) {
    // splitmix64 step
    state_ += 0x9e3779b97f4a7c15ull;
    unsigned long long z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return lo + static_cast<long>(z % static_cast<unsigned long long>(hi - lo + 1));
}

CurveClass SymplecticSampler::next_primitive_class() {
    while (true) {
        CurveClass c;
        c.v.resize(2 * static_cast<size_t>(genus_));
        long g = 0;
        for (auto& x : c.v) {
            long val = next_int(-3, 3);
            x = val;
            g = std::gcd(g, val < 0 ? -val : val);
        }
        if (g == 0) continue;
        if (g > 1)
            for (auto& x : c.v) x /= g;
        return c;
    }
}

SymplecticMatrix SymplecticSampler::next(int twist_count) {
    SymplecticMatrix m = SymplecticMatrix::identity(genus_);
    for (int i = 0; i < twist_count; ++i) {
        long n = 0;
        while (n == 0) n = next_int(-2, 2);
        m = m * transvection(next_primitive_class(), n);
    }
    return m;
}

}  // namespace ktwist
