#pragma once

#include "ktwist/laurent.hpp"

#include <string>
#include <vector>

namespace ktwist {

// Dense integer matrix over arbitrary-precision integers.  Only the handful
// of exact operations needed here are provided.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix transposed() const;
    IntMatrix minor_removed(int row, int col) const;

    Integer determinant() const;               // exact, fraction-free Gauss-Bareiss
    Integer trace() const;
    std::vector<Integer> char_poly() const;    // coefficients of det(xI - M), ascending

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

// Finitely generated abelian group in invariant-factor form: divisors
// d1 | d2 | ... (entries equal to 1 are dropped) plus a free rank.
struct AbelianGroup {
    std::vector<Integer> divisors;
    int free_rank = 0;

    bool is_trivial() const { return divisors.empty() && free_rank == 0; }
    Integer order() const;  // 0 when free_rank > 0
    std::string to_string() const;

    bool operator==(const AbelianGroup& other) const {
        return divisors == other.divisors && free_rank == other.free_rank;
    }
};

// Smith normal form diagonal of an integer matrix, pivoting on least
// absolute value.  Returns nonnegative diagonal entries satisfying the
// divisibility chain.
std::vector<Integer> smith_normal_form(IntMatrix m);

// Cokernel of the matrix viewed as a map Z^cols -> Z^rows.
AbelianGroup cokernel(const IntMatrix& m);

}  // namespace ktwist
