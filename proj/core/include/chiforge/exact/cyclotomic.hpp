#pragma once

#include "chiforge/exact/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace chiforge::exact {

/// An element of the cyclotomic field Q(zeta_e), held in canonical form:
/// the order is the conductor (smallest e with the value in Q(zeta_e)) and
/// the coefficients are the unique representation in the power basis
/// 1, zeta_e, ..., zeta_e^{phi(e)-1}.  Two values are equal iff their
/// canonical (order, coefficients) agree, so operator== is structural.
///
/// All arithmetic re-canonicalizes, so every Cyclotomic you can observe
/// satisfies the invariant.  Values are immutable and safe to share across
/// threads.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeff_(1, Rational(0)) {}
    Cyclotomic(long n) : order_(1), coeff_(1, Rational(n)) {}
    Cyclotomic(const Rational& r) : order_(1), coeff_(1, r) {}
    Cyclotomic(const Integer& n) : order_(1), coeff_(1, Rational(n)) {}

    /// zeta_e^k.
    static Cyclotomic zeta(long e, long k = 1);
    /// e^{2 pi i q} for q in Q/Z.
    static Cyclotomic from_phase(const QmodZ& q);
    /// Sum of c_k zeta_e^k for arbitrary exponents (reduced mod e).
    static Cyclotomic from_terms(long e, const std::vector<std::pair<long, Rational>>& terms);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeff_; }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    /// Throws InputError when the value is irrational.
    Rational to_rational() const;
    bool is_integer() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws InputError on zero.
    Cyclotomic inverse() const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    /// Complex conjugation (zeta -> zeta^{-1}).
    Cyclotomic conj() const;
    /// Galois twist zeta_e -> zeta_e^k, gcd(k, order) = 1.
    Cyclotomic galois(long k) const;
    Cyclotomic pow(long n) const;

    bool operator==(const Cyclotomic& o) const {
        return order_ == o.order_ && coeff_ == o.coeff_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Deterministic total order: by conductor, then coefficients.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    /// If the value is a root of unity, returns its multiplicative order.
    std::optional<long> root_of_unity_order() const;

    /// Literal format "c(e)[k1]=a1/b1,[k2]=a2/b2"; order-1 values print as
    /// plain fractions.
    std::string str() const;
    static Cyclotomic parse(const std::string& text);

private:
    Cyclotomic(long order, std::vector<Rational> coeff)
        : order_(order), coeff_(std::move(coeff)) {}
    static Cyclotomic canonicalize(long e, std::vector<Rational> dense);

    long order_;
    std::vector<Rational> coeff_; // size phi(order_)
};

/// Canonical representative (identity on values already observable; exposed
/// as the module's canonicalization entry point and used by tests).
inline Cyclotomic cyclo_canonical(const Cyclotomic& x) { return x; }

/// Coefficients of the e-th cyclotomic polynomial, ascending degree.
const std::vector<Integer>& cyclotomic_polynomial(long e);

/// Numeric embedding sum_k c_k exp(2 pi i k / e).  Sanity checks only;
/// never feeds a decision.  digits <= 12.
std::complex<double> embed_numeric(const Cyclotomic& x, int digits);

/// Exact cyclotomic square root of a nonnegative integer.
Cyclotomic sqrt_integer(const Integer& n);

} // namespace chiforge::exact
