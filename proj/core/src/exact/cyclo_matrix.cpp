#include "chiforge/exact/cyclo_matrix.hpp"

#include <algorithm>

namespace chiforge::exact {

CycloMatrix CycloMatrix::identity(long n) {
    CycloMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
    input_check(rows_ == o.rows_ && cols_ == o.cols_, "CycloMatrix: shape mismatch in sum");
    CycloMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
    input_check(rows_ == o.rows_ && cols_ == o.cols_, "CycloMatrix: shape mismatch in difference");
    CycloMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
    input_check(cols_ == o.rows_, "CycloMatrix: dimension mismatch in product");
    CycloMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Cyclotomic& x = at(i, k);
            if (x.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

CycloMatrix CycloMatrix::scaled(const Cyclotomic& c) const {
    CycloMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

CycloMatrix CycloMatrix::dagger() const {
    CycloMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

bool CycloMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool CycloMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? Cyclotomic(1) : Cyclotomic(0))) return false;
    return true;
}

Cyclotomic CycloMatrix::trace_unnormalized() const {
    input_check(rows_ == cols_, "trace: matrix must be square");
    Cyclotomic t;
    for (long i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

CycloMatrix CycloMatrix::kron(const CycloMatrix& a, const CycloMatrix& b) {
    CycloMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (long k = 0; k < b.rows(); ++k)
                for (long l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

CycloMatrix CycloMatrix::inverse() const {
    input_check(rows_ == cols_, "inverse: matrix must be square");
    long n = rows_;
    CycloMatrix aug(n, 2 * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Cyclotomic(1);
    }
    for (long col = 0; col < n; ++col) {
        long p = col;
        while (p < n && aug.at(p, col).is_zero()) ++p;
        input_check(p < n, "inverse: matrix is singular");
        if (p != col)
            for (long j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(col, j));
        Cyclotomic inv = aug.at(col, col).inverse();
        for (long j = col; j < 2 * n; ++j) aug.at(col, j) *= inv;
        for (long i = 0; i < n; ++i) {
            if (i == col || aug.at(i, col).is_zero()) continue;
            Cyclotomic f = aug.at(i, col);
            for (long j = col; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(col, j);
        }
    }
    CycloMatrix out(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<long> echelonize(std::vector<std::vector<Cyclotomic>>& m) {
    std::vector<long> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Cyclotomic inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Cyclotomic f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<long>(col));
        ++row;
    }
    m.resize(pivots.size());
    return pivots;
}

} // namespace

long rank(const CycloMatrix& m) {
    std::vector<std::vector<Cyclotomic>> rows(m.rows(), std::vector<Cyclotomic>(m.cols()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return static_cast<long>(echelonize(rows).size());
}

Cyclotomic det(const CycloMatrix& m) {
    input_check(m.rows() == m.cols(), "det: matrix must be square");
    long n = m.rows();
    CycloMatrix a = m;
    Cyclotomic d(1);
    for (long col = 0; col < n; ++col) {
        long p = col;
        while (p < n && a.at(p, col).is_zero()) ++p;
        if (p == n) return Cyclotomic(0);
        if (p != col) {
            for (long j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        Cyclotomic inv = a.at(col, col).inverse();
        for (long i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Cyclotomic f = a.at(i, col) * inv;
            for (long j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

std::optional<std::vector<Cyclotomic>> solve(const CycloMatrix& a,
                                             const std::vector<Cyclotomic>& b) {
    input_check(static_cast<long>(b.size()) == a.rows(), "solve: dimension mismatch");
    long rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Cyclotomic>> aug(rows, std::vector<Cyclotomic>(cols + 1));
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) aug[i][j] = a.at(i, j);
        aug[i][cols] = b[i];
    }
    auto pivots = echelonize(aug);
    std::vector<Cyclotomic> x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in rhs column
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

std::vector<std::vector<Cyclotomic>> nullspace(const CycloMatrix& a) {
    long rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Cyclotomic>> m(rows, std::vector<Cyclotomic>(cols));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
    auto pivots = echelonize(m);
    std::vector<bool> is_pivot(cols, false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (long free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Cyclotomic> v(cols);
        v[free] = Cyclotomic(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Cyclotomic>> row_space_basis(const std::vector<std::vector<Cyclotomic>>& rows) {
    auto m = rows;
    echelonize(m);
    return m;
}

long span_rank(const std::vector<std::vector<Cyclotomic>>& rows) {
    auto m = rows;
    return static_cast<long>(echelonize(m).size());
}

} // namespace chiforge::exact
