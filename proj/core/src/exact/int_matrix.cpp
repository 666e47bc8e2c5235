#include "chiforge/exact/int_matrix.hpp"

#include <algorithm>

namespace chiforge::exact {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    input_check(cols_ == o.rows_, "IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Integer& x = at(i, k);
            if (x == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::is_diagonal() const {
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

Integer det(const IntMatrix& m) {
    input_check(m.rows() == m.cols(), "det: matrix must be square");
    long n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
    Rational d(1);
    for (long col = 0; col < n; ++col) {
        long p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(a[p], a[col]);
            d = -d;
        }
        d *= a[col][col];
        Rational inv = 1 / a[col][col];
        for (long i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] * inv;
            for (long j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    internal_check(d.get_den() == 1, "det: non-integer determinant");
    return d.get_num();
}

SmithResult smith_normal_form(const IntMatrix& m) {
    long rows = m.rows(), cols = m.cols();
    SmithResult r{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& d = r.d;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;

    auto swap_rows = [&](long i, long j) {
        for (long k = 0; k < cols; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (long k = 0; k < rows; ++k) std::swap(u.at(i, k), u.at(j, k));
    };
    auto swap_cols = [&](long i, long j) {
        for (long k = 0; k < rows; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (long k = 0; k < cols; ++k) std::swap(v.at(k, i), v.at(k, j));
    };
    auto add_row = [&](long dst, long src, const Integer& f) {
        for (long k = 0; k < cols; ++k) d.at(dst, k) += f * d.at(src, k);
        for (long k = 0; k < rows; ++k) u.at(dst, k) += f * u.at(src, k);
    };
    auto add_col = [&](long dst, long src, const Integer& f) {
        for (long k = 0; k < rows; ++k) d.at(k, dst) += f * d.at(k, src);
        for (long k = 0; k < cols; ++k) v.at(k, dst) += f * v.at(k, src);
    };
    auto negate_row = [&](long i) {
        for (long k = 0; k < cols; ++k) d.at(i, k) = -d.at(i, k);
        for (long k = 0; k < rows; ++k) u.at(i, k) = -u.at(i, k);
    };

    long t = 0;
    long n = std::min(rows, cols);
    while (t < n) {
        // Find the entry of minimal nonzero absolute value in the trailing block.
        long pi = -1, pj = -1;
        Integer best(0);
        for (long i = t; i < rows; ++i)
            for (long j = t; j < cols; ++j) {
                if (d.at(i, j) == 0) continue;
                Integer a = abs(d.at(i, j));
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing block is zero
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);
        if (d.at(t, t) < 0) negate_row(t);

        bool clean = true;
        for (long i = t + 1; i < rows; ++i) {
            if (d.at(i, t) == 0) continue;
            Integer q = floor_div(d.at(i, t), d.at(t, t));
            add_row(i, t, -q);
            if (d.at(i, t) != 0) clean = false;
        }
        for (long j = t + 1; j < cols; ++j) {
            if (d.at(t, j) == 0) continue;
            Integer q = floor_div(d.at(t, j), d.at(t, t));
            add_col(j, t, -q);
            if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // smaller pivot now exists; repeat at same t

        // Ensure the pivot divides the rest of the trailing block.
        bool divides = true;
        for (long i = t + 1; i < rows && divides; ++i)
            for (long j = t + 1; j < cols && divides; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    add_row(t, i, Integer(1));
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    internal_check(r.d.is_diagonal(), "smith_normal_form: result not diagonal");
    return r;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    input_check(m.rows() == m.cols(), "inverse_unimodular: matrix must be square");
    long n = m.rows();
    Integer dm = det(m);
    input_check(dm == 1 || dm == -1, "inverse_unimodular: determinant is not a unit");
    // Rational Gauss-Jordan; the result is integral because det = +-1.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (long col = 0; col < n; ++col) {
        long p = col;
        while (a[p][col] == 0) ++p;
        std::swap(a[p], a[col]);
        Rational inv = 1 / a[col][col];
        for (long j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (long i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (long j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    IntMatrix out(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            internal_check(a[i][n + j].get_den() == 1, "inverse_unimodular: non-integer inverse");
            out.at(i, j) = a[i][n + j].get_num();
        }
    return out;
}

std::optional<std::vector<Integer>> solve_affine_mod(const IntMatrix& a,
                                                     const std::vector<Integer>& b,
                                                     const Integer& modulus) {
    input_check(modulus >= 2, "solve_affine_mod: modulus must be >= 2");
    input_check(static_cast<long>(b.size()) == a.rows(),
                "solve_affine_mod: dimension mismatch between matrix and rhs");
    SmithResult s = smith_normal_form(a);
    long rows = a.rows(), cols = a.cols();

    // a x = b (mod m)  <=>  d y = u b (mod m) with x = v y.
    std::vector<Integer> c(rows, Integer(0));
    for (long i = 0; i < rows; ++i) {
        for (long k = 0; k < rows; ++k) c[i] += s.u.at(i, k) * b[k];
        mpz_mod(c[i].get_mpz_t(), c[i].get_mpz_t(), modulus.get_mpz_t());
    }
    std::vector<Integer> y(cols, Integer(0));
    long n = std::min(rows, cols);
    for (long i = 0; i < n; ++i) {
        Integer di = s.d.at(i, i);
        mpz_mod(di.get_mpz_t(), di.get_mpz_t(), modulus.get_mpz_t());
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
            continue;
        }
        Integer g = gcd(di, modulus);
        if (c[i] % g != 0) return std::nullopt;
        Integer m1 = modulus / g;
        Integer inv;
        internal_check(mpz_invert(inv.get_mpz_t(), Integer(di / g).get_mpz_t(), m1.get_mpz_t()) != 0,
                       "solve_affine_mod: inverse must exist after gcd reduction");
        y[i] = (c[i] / g) * inv;
        mpz_mod(y[i].get_mpz_t(), y[i].get_mpz_t(), m1.get_mpz_t());
    }
    for (long i = n; i < rows; ++i)
        if (c[i] != 0) return std::nullopt;

    std::vector<Integer> x(cols, Integer(0));
    for (long i = 0; i < cols; ++i) {
        for (long k = 0; k < cols; ++k) x[i] += s.v.at(i, k) * y[k];
        mpz_mod(x[i].get_mpz_t(), x[i].get_mpz_t(), modulus.get_mpz_t());
    }
    return x;
}

} // namespace chiforge::exact
