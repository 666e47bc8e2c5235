#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace chiforge::exact {

long gcd_long(long a, long b);
long lcm_long(long a, long b);

bool is_prime(long n);

/// Prime factorization by trial division; keys ascending.
std::map<long, int> factorize(long n);

/// All positive divisors of n, ascending.
std::vector<long> divisors(long n);

long euler_phi(long n);

/// Smallest prime p with p > lower_bound and p % modulus == residue.
long next_prime_in_class(long lower_bound, long modulus, long residue);

/// (base^exp) mod p, p prime, 0 <= base < p.
long pow_mod(long base, long exp, long p);

/// Multiplicative inverse mod p (p prime).
long inv_mod(long a, long p);

/// Some generator of the cyclic group (Z/p)^*, p prime.
long primitive_root(long p);

/// Legendre symbol (a/p) for odd prime p: +1, -1, or 0.
int legendre_symbol(long a, long p);

} // namespace chiforge::exact
