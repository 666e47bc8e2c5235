#include "chiforge/groups/cochain.hpp"

#include "chiforge/exact/int_matrix.hpp"

namespace chiforge::groups {

using exact::Integer;
using exact::IntMatrix;

TwoCochain TwoCochain::zero(long group_order, long modulus) {
    input_check(modulus >= 1, "TwoCochain: modulus must be positive");
    TwoCochain c;
    c.modulus = modulus;
    c.n = group_order;
    c.table.assign(static_cast<size_t>(group_order) * group_order, 0);
    return c;
}

void TwoCochain::set(long g, long h, long value) {
    value %= modulus;
    if (value < 0) value += modulus;
    table[static_cast<size_t>(g * n + h)] = value;
}

bool TwoCochain::is_normalized() const {
    for (long g = 0; g < n; ++g)
        if (at(0, g) != 0 || at(g, 0) != 0) return false;
    return true;
}

TwoCochain TwoCochain::rescaled(long new_modulus) const {
    input_check(new_modulus % modulus == 0, "TwoCochain: rescale target must be a multiple");
    TwoCochain c = *this;
    long f = new_modulus / modulus;
    c.modulus = new_modulus;
    for (auto& v : c.table) v *= f;
    return c;
}

bool two_cocycle_verify(const FiniteGroup& grp, const TwoCochain& c) {
    input_check(c.n == grp.size(), "two_cocycle_verify: table size mismatch");
    long m = c.modulus;
    for (long g = 0; g < c.n; ++g)
        for (long h = 0; h < c.n; ++h)
            for (long k = 0; k < c.n; ++k) {
                long lhs = c.at(g, h) + c.at(grp.mul(g, h), k);
                long rhs = c.at(h, k) + c.at(g, grp.mul(h, k));
                if ((lhs - rhs) % m != 0) return false;
            }
    return true;
}

std::optional<std::vector<long>> two_coboundary_test(const FiniteGroup& grp, const TwoCochain& c) {
    input_check(two_cocycle_verify(grp, c), "two_coboundary_test: input is not a 2-cocycle");
    long n = c.n;
    if (c.modulus == 1) return std::vector<long>(n, 0);
    // Unknowns rho(g); equations rho(g) + rho(h) - rho(gh) = c(g,h) (mod m).
    IntMatrix a(n * n, n);
    std::vector<Integer> b(static_cast<size_t>(n) * n);
    for (long g = 0; g < n; ++g)
        for (long h = 0; h < n; ++h) {
            long row = g * n + h;
            a.at(row, g) += 1;
            a.at(row, h) += 1;
            a.at(row, grp.mul(g, h)) -= 1;
            b[static_cast<size_t>(row)] = c.at(g, h);
        }
    auto x = exact::solve_affine_mod(a, b, Integer(c.modulus));
    if (!x) return std::nullopt;
    std::vector<long> rho(n);
    for (long i = 0; i < n; ++i) rho[i] = (*x)[static_cast<size_t>(i)].get_si();
    return rho;
}

std::optional<std::vector<long>> two_coboundary_test_u1(const FiniteGroup& grp,
                                                        const TwoCochain& c) {
    return two_coboundary_test(grp, c.rescaled(c.modulus * grp.size()));
}

} // namespace chiforge::groups
