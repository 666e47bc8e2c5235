#pragma once

#include "chiforge/repcat/character_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chiforge::repcat {

/// Based ring with nonnegative structure constants, unit, and duality.
struct FusionRing {
    long rank = 0;
    long unit = 0;
    std::vector<long> dual;   ///< involution i -> i*
    std::vector<long> dims;   ///< integer FP-dimensions (all rings here have them)
    std::vector<long> coeff;  ///< N[(i*rank+j)*rank+k]
    std::vector<std::string> labels;

    long n(long i, long j, long k) const {
        return coeff[static_cast<size_t>((i * rank + j) * rank + k)];
    }
    void set_n(long i, long j, long k, long v) {
        coeff[static_cast<size_t>((i * rank + j) * rank + k)] = v;
    }
    /// Exhaustive associativity check.
    bool associative() const;
    /// Group ring of a finite abelian group given by an addition oracle.
    static FusionRing group_ring(long order, const std::function<long(long, long)>& add,
                                 const std::function<long(long)>& neg);
};

/// N(i,j,k) = (1/|G|) sum_g chi_i chi_j conj(chi_k); verified integral and
/// nonnegative (a violation signals a corrupted table).
FusionRing fusion_coefficients(const CharacterTable& t);

/// Label bijection preserving unit, duals, dims and all structure
/// constants, or nullopt.  Rank/dim-multiset mismatches decide immediately;
/// the exhaustive search requires rank <= rank_cap.
std::optional<std::vector<long>> fusion_ring_isomorphic(const FusionRing& a, const FusionRing& b,
                                                        long rank_cap = 12);

} // namespace chiforge::repcat
