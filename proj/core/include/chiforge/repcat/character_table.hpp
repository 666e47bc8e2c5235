#pragma once

#include "chiforge/exact/cyclo_matrix.hpp"
#include "chiforge/groups/finite_group.hpp"

#include <memory>
#include <vector>

namespace chiforge::repcat {

/// Exact character table over Q(zeta_e), e = exp(G).
///
/// Rows are irreducible characters sorted by (dimension, lexicographic
/// canonical character values); columns are conjugacy classes ordered by
/// minimal element index (identity class first).  Row and column
/// orthogonality are verified before a table is ever returned.
struct CharacterTable {
    std::shared_ptr<const groups::FiniteGroup> group;
    std::vector<long> class_rep;    ///< representative (minimal element) per class
    std::vector<long> class_size;
    std::vector<long> inverse_class;
    std::vector<std::vector<exact::Cyclotomic>> chi; ///< chi[row][class]

    long rank() const { return static_cast<long>(chi.size()); }
    long classes() const { return static_cast<long>(class_rep.size()); }
    long dim(long row) const;
    exact::Cyclotomic value_at_element(long row, long g) const;
    /// Index of the trivial character.
    long trivial_row() const;
    /// Row of the conjugate character.
    long conjugate_row(long row) const;
};

/// Dixon-Schneider: class matrices split over F_p (smallest p = 1 mod e,
/// p > 2 sqrt(|G|)), Brauer lift back to Q(zeta_e) by discrete Fourier
/// inversion over eigenvalues of powers of class representatives.
CharacterTable character_table(std::shared_ptr<const groups::FiniteGroup> g);

struct RestrictionResult {
    std::vector<long> selected_rows;  ///< irreps of G factoring through G/N
    CharacterTable quotient_table;    ///< table of G/N
    /// selected_rows[i] pulls back to quotient row matching[i] (a bijection).
    std::vector<long> matching;
};

/// Irreps of G with N in their kernel, matched against the table of G/N.
RestrictionResult restrict_quotient(const CharacterTable& t, const groups::Subgroup& n);

/// Character table of G1 x G2 as the Kronecker product of tables, carried
/// by the direct product group and re-sorted canonically.
CharacterTable deligne_product(const CharacterTable& t1, const CharacterTable& t2);

/// Exhaustive orthogonality verification (throws InternalError on failure).
void verify_orthogonality(const CharacterTable& t);

} // namespace chiforge::repcat
