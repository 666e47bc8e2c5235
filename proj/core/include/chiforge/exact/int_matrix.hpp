#pragma once

#include "chiforge/exact/rational.hpp"

#include <optional>
#include <vector>

namespace chiforge::exact {

/// Rectangular matrix over Z.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), Integer(0)) {
        input_check(rows >= 0 && cols >= 0, "IntMatrix: negative dimensions");
    }
    static IntMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Integer& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Integer& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool is_diagonal() const;

private:
    long rows_, cols_;
    std::vector<Integer> a_;
};

/// Exact determinant (square matrices) via rational Gaussian elimination.
Integer det(const IntMatrix& m);

struct SmithResult {
    IntMatrix d; ///< diagonal, d_1 | d_2 | ..., entries nonnegative
    IntMatrix u; ///< unimodular, rows x rows
    IntMatrix v; ///< unimodular, cols x cols; d = u * m * v
};

/// Smith normal form by classical elimination with transformation tracking.
SmithResult smith_normal_form(const IntMatrix& m);

/// Inverse of a unimodular integer matrix (exact; throws if not unimodular).
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Solves a x = b (mod modulus); returns a solution with entries in
/// [0, modulus) or nullopt when none exists.  Decision is exact via the
/// Smith form of a.
std::optional<std::vector<Integer>> solve_affine_mod(const IntMatrix& a,
                                                     const std::vector<Integer>& b,
                                                     const Integer& modulus);

} // namespace chiforge::exact
