#pragma once

#include "chiforge/errors.hpp"

#include <gmpxx.h>

#include <string>

namespace chiforge::exact {

// Exact integers and rationals.  GMP keeps rationals in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    input_check(den != 0, "rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    input_check(den != 0, "rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

inline std::string rational_str(const Rational& r) { return r.get_str(); }

/// Floor of num/den for exact integers.
inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// An element of Q/Z, stored as the representative in [0, 1).
/// Addition wraps mod 1.
class QmodZ {
public:
    QmodZ() : v_(0) {}
    explicit QmodZ(const Rational& r) : v_(reduce(r)) {}
    QmodZ(long num, long den) : v_(reduce(make_rational(num, den))) {}

    const Rational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    /// Additive order: smallest n >= 1 with n*x = 0; equals the denominator.
    long order() const { return static_cast<long>(v_.get_den().get_si()); }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(v_ + o.v_); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(v_ - o.v_); }
    QmodZ operator-() const { return QmodZ(-v_); }
    QmodZ times(const Integer& k) const { return QmodZ(Rational(k) * v_); }

    bool operator==(const QmodZ& o) const { return v_ == o.v_; }
    bool operator!=(const QmodZ& o) const { return v_ != o.v_; }
    bool operator<(const QmodZ& o) const { return v_ < o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    static Rational reduce(const Rational& r) {
        Rational f = r - Rational(floor_div(r.get_num(), r.get_den()));
        f.canonicalize();
        return f;
    }
    Rational v_;
};

} // namespace chiforge::exact
