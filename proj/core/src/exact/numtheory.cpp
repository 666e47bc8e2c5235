#include "chiforge/exact/numtheory.hpp"

#include "chiforge/errors.hpp"

#include <algorithm>

namespace chiforge::exact {

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::map<long, int> factorize(long n) {
    input_check(n >= 1, "factorize: argument must be positive");
    std::map<long, int> out;
    for (long d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> out{1};
    for (const auto& [p, e] : factorize(n)) {
        std::vector<long> next;
        long pk = 1;
        for (int k = 0; k <= e; ++k) {
            for (long d : out) next.push_back(d * pk);
            pk *= p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long euler_phi(long n) {
    long phi = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

long next_prime_in_class(long lower_bound, long modulus, long residue) {
    long p = residue % modulus;
    if (p <= 0) p += modulus;
    while (p <= lower_bound || !is_prime(p)) {
        p += modulus;
        input_check(p < (1L << 40), "next_prime_in_class: search bound exceeded");
    }
    return p;
}

long pow_mod(long base, long exp, long p) {
    long r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

long inv_mod(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    input_check(a != 0, "inv_mod: zero is not invertible");
    return pow_mod(a, p - 2, p);
}

long primitive_root(long p) {
    if (p == 2) return 1;
    std::vector<long> prime_factors;
    for (const auto& [q, e] : factorize(p - 1)) {
        (void)e;
        prime_factors.push_back(q);
    }
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw InternalError("primitive_root: no generator found");
}

int legendre_symbol(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long s = pow_mod(a, (p - 1) / 2, p);
    return s == 1 ? 1 : -1;
}

} // namespace chiforge::exact
