#include "chiforge/exact/cyclotomic.hpp"

#include "chiforge/exact/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace chiforge::exact {

namespace {

// Dense polynomial division q = a / b over Z, exact (used only where b | a).
std::vector<Integer> poly_div_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
    std::vector<Integer> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
    long db = static_cast<long>(b.size()) - 1;
    for (long da = static_cast<long>(a.size()) - 1; da >= db; --da) {
        if (a[da] == 0) continue;
        internal_check(a[da] % b[db] == 0, "cyclotomic polynomial division not exact");
        Integer c = a[da] / b[db];
        q[da - db] = c;
        for (long j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    }
    for (const auto& r : a) internal_check(r == 0, "cyclotomic polynomial division remainder");
    return q;
}

// Solves A y = c over Q with A given column-wise; returns nullopt when
// inconsistent.  Small dense Gaussian elimination.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   std::vector<Rational> rhs) {
    size_t n = rhs.size(), m = cols.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m, Rational(0)));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < n && i < cols[j].size(); ++i) a[i][j] = cols[j][i];
    std::vector<long> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        std::swap(rhs[p], rhs[row]);
        Rational inv = 1 / a[row][col];
        for (size_t j = col; j < m; ++j) a[row][j] *= inv;
        rhs[row] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < m; ++j) a[i][j] -= f * a[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col.push_back(static_cast<long>(col));
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rational> y(m, Rational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) y[pivot_col[r]] = rhs[r];
    return y;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long e) {
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    // x^e - 1 divided by all proper Phi_d, d | e.
    std::function<const std::vector<Integer>&(long)> phi = [&](long n) -> const std::vector<Integer>& {
        auto found = cache.find(n);
        if (found != cache.end()) return found->second;
        std::vector<Integer> num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        for (long d : divisors(n)) {
            if (d == n) continue;
            num = poly_div_exact(std::move(num), phi(d));
        }
        return cache.emplace(n, std::move(num)).first->second;
    };
    return phi(e);
}

Cyclotomic Cyclotomic::canonicalize(long e, std::vector<Rational> dense) {
    input_check(e >= 1, "cyclotomic: order must be positive");
    dense.resize(e, Rational(0));

    // Reduce mod Phi_e into degree < phi(e).
    const auto& phi_poly = cyclotomic_polynomial(e);
    long deg = static_cast<long>(phi_poly.size()) - 1; // = phi(e)
    for (long d = e - 1; d >= deg; --d) {
        if (dense[d] == 0) continue;
        Rational c = dense[d];
        for (long j = 0; j <= deg; ++j) dense[d - deg + j] -= c * Rational(phi_poly[j]);
    }
    dense.resize(deg);

    // Lower to the conductor: smallest divisor d of e whose power basis
    // spans the value.
    for (long d : divisors(e)) {
        if (d == e) break;
        long phid = euler_phi(d);
        std::vector<std::vector<Rational>> cols;
        cols.reserve(phid);
        long step = e / d;
        for (long j = 0; j < phid; ++j) {
            // zeta_e^{j*step} reduced mod Phi_e.
            std::vector<Rational> col(e, Rational(0));
            col[(j * step) % e] = Rational(1);
            for (long dd = e - 1; dd >= deg; --dd) {
                if (col[dd] == 0) continue;
                Rational c = col[dd];
                for (long jj = 0; jj <= deg; ++jj) col[dd - deg + jj] -= c * Rational(phi_poly[jj]);
            }
            col.resize(deg);
            cols.push_back(std::move(col));
        }
        if (auto y = solve_columns(cols, dense)) {
            return Cyclotomic(d, std::move(*y));
        }
    }
    return Cyclotomic(e, std::move(dense));
}

Cyclotomic Cyclotomic::zeta(long e, long k) {
    input_check(e >= 1, "zeta: order must be positive");
    k %= e;
    if (k < 0) k += e;
    std::vector<Rational> dense(e, Rational(0));
    dense[k] = Rational(1);
    return canonicalize(e, std::move(dense));
}

Cyclotomic Cyclotomic::from_phase(const QmodZ& q) {
    long den = q.order();
    long num = static_cast<long>(q.value().get_num().get_si());
    return zeta(den, num);
}

Cyclotomic Cyclotomic::from_terms(long e, const std::vector<std::pair<long, Rational>>& terms) {
    input_check(e >= 1, "from_terms: order must be positive");
    std::vector<Rational> dense(e, Rational(0));
    for (const auto& [k, c] : terms) {
        long kk = k % e;
        if (kk < 0) kk += e;
        dense[kk] += c;
    }
    return canonicalize(e, std::move(dense));
}

bool Cyclotomic::is_zero() const {
    return order_ == 1 && coeff_[0] == 0;
}

Rational Cyclotomic::to_rational() const {
    input_check(order_ == 1, "to_rational: value is irrational: " + str());
    return coeff_[0];
}

bool Cyclotomic::is_integer() const {
    return order_ == 1 && coeff_[0].get_den() == 1;
}

namespace {
// Lift coefficients from the power basis of zeta_d into the dense
// exponent vector of zeta_e (d | e), without reduction.
std::vector<Rational> lift_dense(const Cyclotomic& x, long e) {
    std::vector<Rational> dense(e, Rational(0));
    long step = e / x.order();
    const auto& c = x.coeffs();
    for (size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) dense[(static_cast<long>(j) * step) % e] += c[j];
    return dense;
}
} // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long e = lcm_long(order_, o.order_);
    auto a = lift_dense(*this, e);
    auto b = lift_dense(o, e);
    for (long i = 0; i < e; ++i) a[i] += b[i];
    return canonicalize(e, std::move(a));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coeff_;
    for (auto& x : c) x = -x;
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long e = lcm_long(order_, o.order_);
    auto a = lift_dense(*this, e);
    auto b = lift_dense(o, e);
    std::vector<Rational> prod(e, Rational(0));
    for (long i = 0; i < e; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < e; ++j) {
            if (b[j] == 0) continue;
            prod[(i + j) % e] += a[i] * b[j];
        }
    }
    return canonicalize(e, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
    input_check(!is_zero(), "inverse: division by zero");
    if (order_ == 1) return Cyclotomic(Rational(1) / coeff_[0]);
    // Solve (this) * y = 1 in the power basis of Q(zeta_order).
    long e = order_;
    long deg = euler_phi(e);
    const auto& phi_poly = cyclotomic_polynomial(e);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(deg);
    auto self = lift_dense(*this, e);
    for (long j = 0; j < deg; ++j) {
        // column = this * zeta^j reduced.
        std::vector<Rational> col(e, Rational(0));
        for (long i = 0; i < e; ++i)
            if (self[i] != 0) col[(i + j) % e] += self[i];
        for (long d = e - 1; d >= deg; --d) {
            if (col[d] == 0) continue;
            Rational c = col[d];
            for (long jj = 0; jj <= deg; ++jj) col[d - deg + jj] -= c * Rational(phi_poly[jj]);
        }
        col.resize(deg);
        cols.push_back(std::move(col));
    }
    std::vector<Rational> rhs(deg, Rational(0));
    rhs[0] = Rational(1);
    auto y = solve_columns(cols, std::move(rhs));
    internal_check(y.has_value(), "inverse: nonzero cyclotomic not invertible");
    return canonicalize(e, std::move(*y));
}

Cyclotomic Cyclotomic::galois(long k) const {
    long e = order_;
    k %= e;
    if (k < 0) k += e;
    input_check(gcd_long(k, e) == 1, "galois: exponent not coprime to order");
    std::vector<Rational> dense(e, Rational(0));
    for (size_t j = 0; j < coeff_.size(); ++j)
        if (coeff_[j] != 0) dense[(static_cast<long>(j) * k) % e] += coeff_[j];
    return canonicalize(e, std::move(dense));
}

Cyclotomic Cyclotomic::conj() const { return galois(order_ - 1 == 0 ? 1 : order_ - 1); }

Cyclotomic Cyclotomic::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Cyclotomic r(1);
    Cyclotomic base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        int c = cmp(a.coeff_[i], b.coeff_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::optional<long> Cyclotomic::root_of_unity_order() const {
    // A root of unity in Q(zeta_e) has order dividing lcm(2, e).
    long bound = lcm_long(2, order_);
    Cyclotomic p(1);
    for (long n = 1; n <= bound; ++n) {
        p = p * (*this);
        if (p == Cyclotomic(1)) return n;
    }
    return std::nullopt;
}

std::string Cyclotomic::str() const {
    if (order_ == 1) return coeff_[0].get_str();
    std::ostringstream os;
    os << "c(" << order_ << ")";
    bool first = true;
    for (size_t k = 0; k < coeff_.size(); ++k) {
        if (coeff_[k] == 0) continue;
        os << (first ? "" : ",") << "[" << k << "]=" << coeff_[k].get_str();
        first = false;
    }
    if (first) os << "[0]=0";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    input_check(!s.empty(), "cyclotomic literal: empty string");
    if (s[0] != 'c') return Cyclotomic(parse_rational(s));
    size_t open = s.find('('), close = s.find(')');
    input_check(open == 1 && close != std::string::npos && close > open + 1,
                "cyclotomic literal: expected c(e)[k]=a/b form: " + text);
    long e = 0;
    try {
        e = std::stol(s.substr(open + 1, close - open - 1));
    } catch (...) {
        throw InputError("cyclotomic literal: bad order: " + text);
    }
    input_check(e >= 1, "cyclotomic literal: order must be positive: " + text);
    std::vector<std::pair<long, Rational>> terms;
    size_t pos = close + 1;
    while (pos < s.size()) {
        input_check(s[pos] == '[', "cyclotomic literal: expected '[': " + text);
        size_t rb = s.find(']', pos);
        input_check(rb != std::string::npos && rb + 1 < s.size() && s[rb + 1] == '=',
                    "cyclotomic literal: expected ']=': " + text);
        long k = 0;
        try {
            k = std::stol(s.substr(pos + 1, rb - pos - 1));
        } catch (...) {
            throw InputError("cyclotomic literal: bad exponent: " + text);
        }
        size_t comma = s.find(",[", rb);
        size_t end = comma == std::string::npos ? s.size() : comma;
        terms.emplace_back(k, parse_rational(s.substr(rb + 2, end - rb - 2)));
        pos = end == s.size() ? end : end + 1;
    }
    return from_terms(e, terms);
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    input_check(!s.empty(), "rational literal: empty string");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{Integer(s)};
            r.canonicalize();
            return r;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw InputError("rational literal: cannot parse: " + text);
    }
}

std::complex<double> embed_numeric(const Cyclotomic& x, int digits) {
    input_check(digits >= 1, "embed_numeric: digits must be >= 1");
    input_check(digits <= 12, "embed_numeric: supported precision is <= 12 digits");
    long e = x.order();
    std::complex<long double> acc(0.0L, 0.0L);
    const long double two_pi = 6.283185307179586476925286766559L;
    const auto& c = x.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        long double t = two_pi * static_cast<long double>(k) / static_cast<long double>(e);
        long double v = static_cast<long double>(c[k].get_d());
        acc += std::complex<long double>(v * std::cos(t), v * std::sin(t));
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

Cyclotomic sqrt_integer(const Integer& n) {
    input_check(n >= 0, "sqrt_integer: argument must be nonnegative");
    if (n == 0) return Cyclotomic(0);
    Integer square_part(1);
    long squarefree = 1;
    Integer m = n;
    for (long p = 2; Integer(p) * p <= m; ++p) {
        int cnt = 0;
        while (m % p == 0) {
            m /= p;
            ++cnt;
        }
        for (int i = 0; i < cnt / 2; ++i) square_part *= p;
        if (cnt % 2) squarefree *= p;
    }
    if (m > 1) {
        input_check(m.fits_slong_p(), "sqrt_integer: squarefree part too large");
        squarefree *= m.get_si();
    }
    Cyclotomic out{square_part};
    for (const auto& [p, e] : factorize(squarefree)) {
        (void)e;
        if (p == 2) {
            out *= Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
            continue;
        }
        // Quadratic Gauss sum: sum_t (t/p) zeta_p^t equals sqrt(p) for
        // p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
        std::vector<std::pair<long, Rational>> terms;
        for (long t = 1; t < p; ++t)
            terms.emplace_back(t, Rational(legendre_symbol(t, p)));
        Cyclotomic g = Cyclotomic::from_terms(p, terms);
        if (p % 4 == 3) g = g * Cyclotomic::zeta(4, 3);
        out *= g;
    }
    internal_check(out * out == Cyclotomic(n), "sqrt_integer: verification failed");
    return out;
}

} // namespace chiforge::exact
