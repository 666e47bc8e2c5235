#pragma once

#include "chiforge/groups/finite_group.hpp"

#include <optional>
#include <vector>

namespace chiforge::groups {

/// U(1)-valued 2-cochain with values in the m-th roots of unity, stored as
/// exponents: the value at (g, h) is e^{2 pi i c(g,h) / m}.
/// Normalized: c(e, h) = c(g, e) = 0.
struct TwoCochain {
    long modulus = 1;
    long n = 0;               ///< group order
    std::vector<long> table;  ///< table[g*n + h] in [0, modulus)

    static TwoCochain zero(long group_order, long modulus);
    long at(long g, long h) const { return table[static_cast<size_t>(g * n + h)]; }
    void set(long g, long h, long value);
    bool is_normalized() const;
    /// Same class in a finer coefficient group: exponents scaled by
    /// new_modulus / modulus (which must be integral).
    TwoCochain rescaled(long new_modulus) const;
};

/// Cocycle identity c(g,h) + c(gh,k) = c(h,k) + c(g,hk) (mod m), all triples.
bool two_cocycle_verify(const FiniteGroup& g, const TwoCochain& c);

/// Finds rho with c(g,h) = rho(g) + rho(h) - rho(gh) (mod m), or nullopt.
/// Precondition: c is a verified cocycle (checked; throws InputError).
std::optional<std::vector<long>> two_coboundary_test(const FiniteGroup& g, const TwoCochain& c);

/// Decides triviality of [c] in H^2(G, U(1)) rather than H^2(G, Z/m): the
/// test runs over the scaled modulus m * |G|, which suffices for U(1)
/// coefficients because any U(1) trivialization of a mu_m-valued cocycle
/// can be chosen inside mu_{m |G|}.
std::optional<std::vector<long>> two_coboundary_test_u1(const FiniteGroup& g, const TwoCochain& c);

} // namespace chiforge::groups
