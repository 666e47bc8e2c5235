#pragma once

#include "chiforge/errors.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace chiforge::groups {

/// Permutation of {0..degree-1} as an image array.
using Permutation = std::vector<int>;

Permutation perm_identity(int degree);
Permutation perm_compose(const Permutation& a, const Permutation& b); // (a*b)(x) = a(b(x))
Permutation perm_inverse(const Permutation& a);
bool perm_is_valid(const Permutation& a);

/// A finite group enumerated from permutation generators.
///
/// Elements are indexed in BFS order over generator words (shortest word
/// first, ties broken by generator order), so indices are deterministic and
/// the identity sits at index 0.  Immutable after enumeration.
class FiniteGroup {
public:
    static constexpr size_t kDefaultCap = 10000;

    static FiniteGroup enumerate(int degree, std::vector<Permutation> generators,
                                 size_t cap = kDefaultCap);
    /// Direct product acting on the disjoint union of the two domains.
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int degree() const { return degree_; }
    long size() const { return static_cast<long>(elements_.size()); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const Permutation& element(long i) const { return elements_[static_cast<size_t>(i)]; }
    long index_of(const Permutation& p) const;
    std::optional<long> try_index_of(const Permutation& p) const;

    long mul(long i, long j) const;
    long inv(long i) const { return inverse_[static_cast<size_t>(i)]; }
    long conjugate(long g, long x) const { return mul(mul(g, x), inv(g)); } // g x g^-1
    long power(long g, long n) const;
    long order_of(long i) const;
    long exponent() const;
    bool is_abelian() const;

    /// Generator word for element i, in BFS discovery order.
    std::vector<int> word(long i) const;

    /// Conjugacy classes as element-index lists; classes ordered by their
    /// minimal element, members ascending.  Identity class comes first.
    const std::vector<std::vector<long>>& conjugacy_classes() const;
    long class_of(long i) const;

private:
    FiniteGroup() = default;
    void build_tables();

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<std::string, long> index_;
    std::vector<long> inverse_;
    std::vector<std::pair<long, int>> parent_; // BFS tree: (parent element, generator)
    mutable std::vector<std::vector<long>> classes_;
    mutable std::vector<long> class_of_;
    bool small_mul_table_ = false;
    std::vector<long> mul_table_;
};

/// Subgroup given by member indices; closed under product and inverse.
class Subgroup {
public:
    static Subgroup from_members(const FiniteGroup& g, std::vector<long> members);
    static Subgroup from_generators(const FiniteGroup& g, const std::vector<long>& gens);

    const FiniteGroup& parent() const { return *parent_; }
    const std::vector<long>& members() const { return members_; }
    long size() const { return static_cast<long>(members_.size()); }
    bool contains(long i) const { return member_mask_[static_cast<size_t>(i)]; }
    /// Exhaustive conjugation test.
    bool is_normal() const;
    /// The subgroup as a standalone FiniteGroup (same degree) plus the
    /// index map from its elements to parent indices.
    std::pair<FiniteGroup, std::vector<long>> as_group() const;

private:
    const FiniteGroup* parent_ = nullptr;
    std::vector<long> members_;
    std::vector<bool> member_mask_;
};

struct QuotientResult {
    FiniteGroup group;            ///< G/N via its regular action on cosets
    std::vector<long> projection; ///< element index in G -> element index in G/N
    std::vector<std::vector<long>> cosets; ///< cosets by minimal element
};

/// Quotient by a verified-normal subgroup.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

} // namespace chiforge::groups
