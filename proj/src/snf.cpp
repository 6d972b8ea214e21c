#include "ktwist/snf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ktwist {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) r.at(i, j) += a * other.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + other.data_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - other.data_[i];
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::minor_removed(int row, int col) const {
    IntMatrix r(rows_ - 1, cols_ - 1);
    for (int i = 0, ri = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (int j = 0, rj = 0; j < cols_; ++j) {
            if (j == col) continue;
            r.at(ri, rj) = at(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

Integer IntMatrix::trace() const {
    Integer t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

std::vector<Integer> IntMatrix::char_poly() const {
    if (rows_ != cols_) throw std::invalid_argument("char_poly of non-square matrix");
    // Faddeev-LeVerrier; all divisions are exact for integer matrices.
    int n = rows_;
    std::vector<Integer> c(static_cast<size_t>(n) + 1);
    c[n] = 1;
    IntMatrix m_k(n, n);
    for (int k = 1; k <= n; ++k) {
        if (k == 1)
            m_k = *this;
        else {
            IntMatrix shifted = m_k;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            m_k = (*this) * shifted;
        }
        Integer t = m_k.trace();
        if (t % k != 0) throw std::logic_error("Faddeev-LeVerrier inexact division");
        c[n - k] = -t / k;
    }
    return c;
}

Integer AbelianGroup::order() const {
    if (free_rank > 0) return 0;
    Integer o = 1;
    for (const auto& d : divisors) o *= d;
    return o;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& d : divisors) {
        if (!first) out << " + ";
        first = false;
        out << "Z/" << d;
    }
    for (int i = 0; i < free_rank; ++i) {
        if (!first) out << " + ";
        first = false;
        out << "Z";
    }
    return out.str();
}

namespace {

Integer int_abs(const Integer& v) { return v < 0 ? -v : v; }

}  // namespace

std::vector<Integer> smith_normal_form(IntMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    const int n = std::min(rows, cols);
    std::vector<Integer> diag;
    int t = 0;
    while (t < n) {
        // Least-absolute-value pivot among the remaining block.
        int pr = -1, pc = -1;
        Integer best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m.at(i, j) == 0) continue;
                Integer a = int_abs(m.at(i, j));
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;  // all-zero block
        for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pr, j));
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pc));

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Integer q = m.at(i, t) / m.at(t, t);
                for (int j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(i, j));
                    reduced = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Integer q = m.at(t, j) / m.at(t, t);
                for (int i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
                    reduced = false;
                }
            }
            if (reduced) {
                // Pivot must divide every remaining entry; absorb an offender
                // into the pivot column and restart the reduction.
                for (int i = t + 1; i < rows && reduced; ++i)
                    for (int j = t + 1; j < cols && reduced; ++j)
                        if (m.at(i, j) % m.at(t, t) != 0) {
                            for (int jj = 0; jj < cols; ++jj) m.at(t, jj) += m.at(i, jj);
                            reduced = false;
                        }
            }
        }
        diag.push_back(int_abs(m.at(t, t)));
        ++t;
    }
    return diag;
}

AbelianGroup cokernel(const IntMatrix& m) {
    std::vector<Integer> diag = smith_normal_form(m);
    AbelianGroup g;
    for (const auto& d : diag)
        if (d > 1) g.divisors.push_back(d);
    g.free_rank = m.rows() - static_cast<int>(diag.size());
    return g;
}

}  // namespace ktwist
