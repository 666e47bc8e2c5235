#pragma once

#include "chiforge/exact/rational.hpp"
#include "chiforge/groups/finite_group.hpp"

#include <functional>
#include <vector>

namespace chiforge::groups {

/// The character group Hom(G -> U(1)), presented through the invariant
/// factors of G^ab.  Characters are exponent tables: chi(g) = e^{2 pi i t(g)}
/// with t(g) in Q/Z.
struct DualGroup {
    std::vector<long> invariant_factors;            ///< nontrivial d_1 | d_2 | ...
    std::vector<std::vector<exact::QmodZ>> chars;   ///< chars[c][g], c < prod d_i
    /// Coordinates of each group element in the invariant-factor
    /// decomposition of G^ab (same indexing as invariant_factors).
    std::vector<std::vector<long>> coordinates;

    long size() const { return static_cast<long>(chars.size()); }
    /// Index of the pointwise product of two characters.
    long mul(long a, long b) const;
    long inverse(long a) const;
    long trivial() const { return 0; }
};

struct AbelianizationResult {
    std::vector<long> invariant_factors; ///< of G^ab, nontrivial ones
    DualGroup dual;
};

/// G^ab via the Smith form of the relation lattice of a generating set,
/// plus the character group pulled back to G.
AbelianizationResult abelianization_and_dual(const FiniteGroup& g);

/// Invariant factors (d_1 | d_2 | ..., all > 1) of an abstract finite
/// abelian group given by a multiplication oracle.  Elements are
/// 0..n-1 with identity 0.
std::vector<long> abelian_invariant_factors(long n, const std::function<long(long, long)>& mul);

/// Merge of invariant-factor lists: factors of the direct sum, via the
/// Smith form of the diagonal relation matrix.
std::vector<long> merge_invariant_factors(const std::vector<long>& a, const std::vector<long>& b);

} // namespace chiforge::groups
