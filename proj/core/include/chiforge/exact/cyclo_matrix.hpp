#pragma once

#include "chiforge/exact/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace chiforge::exact {

/// Rectangular matrix over the cyclotomic numbers, with exact
/// conjugate-transpose.
class CycloMatrix {
public:
    CycloMatrix() : rows_(0), cols_(0) {}
    CycloMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
        input_check(rows >= 0 && cols >= 0, "CycloMatrix: negative dimensions");
    }
    static CycloMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Cyclotomic& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Cyclotomic& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    CycloMatrix operator+(const CycloMatrix& o) const;
    CycloMatrix operator-(const CycloMatrix& o) const;
    CycloMatrix operator*(const CycloMatrix& o) const;
    CycloMatrix scaled(const Cyclotomic& c) const;
    /// Conjugate transpose.
    CycloMatrix dagger() const;
    bool operator==(const CycloMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const CycloMatrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    /// x with x * this == identity, when unitary-checked externally or square
    /// invertible; throws InputError if singular.
    CycloMatrix inverse() const;
    Cyclotomic trace_unnormalized() const;

    /// Kronecker product.
    static CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b);

private:
    long rows_, cols_;
    std::vector<Cyclotomic> a_;
};

long rank(const CycloMatrix& m);
Cyclotomic det(const CycloMatrix& m);

/// Solves A x = b; returns one solution or nullopt when inconsistent.
std::optional<std::vector<Cyclotomic>> solve(const CycloMatrix& a,
                                             const std::vector<Cyclotomic>& b);

/// Basis of the right nullspace of A.
std::vector<std::vector<Cyclotomic>> nullspace(const CycloMatrix& a);

/// Row space basis (reduced row-echelon, pivot-normalized): a canonical
/// basis of the span of the given row vectors.
std::vector<std::vector<Cyclotomic>> row_space_basis(const std::vector<std::vector<Cyclotomic>>& rows);

/// Rank of the span of row vectors.
long span_rank(const std::vector<std::vector<Cyclotomic>>& rows);

} // namespace chiforge::exact
