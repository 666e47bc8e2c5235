#include "chiforge/groups/finite_group.hpp"

#include "chiforge/exact/numtheory.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace chiforge::groups {

namespace {
std::string perm_key(const Permutation& p) {
    std::string s;
    s.reserve(p.size() * sizeof(int));
    for (int x : p) s.append(reinterpret_cast<const char*>(&x), sizeof(int));
    return s;
}
} // namespace

Permutation perm_identity(int degree) {
    Permutation p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    return p;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
    input_check(a.size() == b.size(), "permutation: degree mismatch");
    Permutation r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
}

Permutation perm_inverse(const Permutation& a) {
    Permutation r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return r;
}

bool perm_is_valid(const Permutation& a) {
    std::vector<bool> seen(a.size(), false);
    for (int x : a) {
        if (x < 0 || static_cast<size_t>(x) >= a.size() || seen[static_cast<size_t>(x)])
            return false;
        seen[static_cast<size_t>(x)] = true;
    }
    return true;
}

FiniteGroup FiniteGroup::enumerate(int degree, std::vector<Permutation> generators, size_t cap) {
    input_check(degree >= 1, "enumerate_group: degree must be positive");
    for (const auto& g : generators) {
        input_check(static_cast<int>(g.size()) == degree,
                    "enumerate_group: generator degree mismatch");
        input_check(perm_is_valid(g), "enumerate_group: generator is not a bijection");
    }
    FiniteGroup out;
    out.degree_ = degree;
    out.generators_ = std::move(generators);

    out.elements_.push_back(perm_identity(degree));
    out.index_.emplace(perm_key(out.elements_[0]), 0);
    out.parent_.emplace_back(-1, -1);
    for (size_t head = 0; head < out.elements_.size(); ++head) {
        for (size_t gi = 0; gi < out.generators_.size(); ++gi) {
            Permutation next = perm_compose(out.elements_[head], out.generators_[gi]);
            std::string key = perm_key(next);
            if (out.index_.count(key)) continue;
            input_check(out.elements_.size() < cap, "enumerate_group: closure cap exceeded");
            out.index_.emplace(std::move(key), static_cast<long>(out.elements_.size()));
            out.elements_.push_back(std::move(next));
            out.parent_.emplace_back(static_cast<long>(head), static_cast<int>(gi));
        }
    }
    out.build_tables();
    return out;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int degree = a.degree() + b.degree();
    std::vector<Permutation> gens;
    for (const auto& g : a.generators()) {
        Permutation p = perm_identity(degree);
        for (int i = 0; i < a.degree(); ++i) p[i] = g[i];
        gens.push_back(std::move(p));
    }
    for (const auto& g : b.generators()) {
        Permutation p = perm_identity(degree);
        for (int i = 0; i < b.degree(); ++i) p[a.degree() + i] = a.degree() + g[i];
        gens.push_back(std::move(p));
    }
    return enumerate(degree, std::move(gens),
                     static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()) + 1);
}

void FiniteGroup::build_tables() {
    long n = size();
    inverse_.resize(n);
    for (long i = 0; i < n; ++i) inverse_[i] = index_of(perm_inverse(elements_[i]));
    small_mul_table_ = n <= 1024;
    if (small_mul_table_) {
        mul_table_.assign(static_cast<size_t>(n) * n, 0);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                mul_table_[static_cast<size_t>(i) * n + j] =
                    index_of(perm_compose(elements_[i], elements_[j]));
    }
}

long FiniteGroup::index_of(const Permutation& p) const {
    auto it = index_.find(perm_key(p));
    input_check(it != index_.end(), "group: permutation is not a member");
    return it->second;
}

std::optional<long> FiniteGroup::try_index_of(const Permutation& p) const {
    auto it = index_.find(perm_key(p));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

long FiniteGroup::mul(long i, long j) const {
    if (small_mul_table_) return mul_table_[static_cast<size_t>(i) * size() + j];
    return index_of(perm_compose(elements_[i], elements_[j]));
}

long FiniteGroup::power(long g, long n) const {
    long r = 0;
    n %= size();               // order of g divides |G|
    if (n < 0) n += size();
    for (long k = 0; k < n; ++k) r = mul(r, g);
    return r;
}

long FiniteGroup::order_of(long i) const {
    long ord = 1;
    long x = i;
    while (x != 0) {
        x = mul(x, i);
        ++ord;
    }
    return ord;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (long i = 0; i < size(); ++i) e = exact::lcm_long(e, order_of(i));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (size_t i = 0; i < generators_.size(); ++i)
        for (size_t j = i + 1; j < generators_.size(); ++j)
            if (perm_compose(generators_[i], generators_[j]) !=
                perm_compose(generators_[j], generators_[i]))
                return false;
    return true;
}

std::vector<int> FiniteGroup::word(long i) const {
    std::vector<int> w;
    while (i != 0) {
        w.push_back(parent_[static_cast<size_t>(i)].second);
        i = parent_[static_cast<size_t>(i)].first;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

const std::vector<std::vector<long>>& FiniteGroup::conjugacy_classes() const {
    if (!classes_.empty()) return classes_;
    long n = size();
    class_of_.assign(n, -1);
    for (long i = 0; i < n; ++i) {
        if (class_of_[i] >= 0) continue;
        std::vector<long> cls;
        std::deque<long> queue{i};
        class_of_[i] = static_cast<long>(classes_.size());
        while (!queue.empty()) {
            long x = queue.front();
            queue.pop_front();
            cls.push_back(x);
            for (long g = 0; g < n; ++g) {
                long y = conjugate(g, x);
                if (class_of_[y] < 0) {
                    class_of_[y] = class_of_[i];
                    queue.push_back(y);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
    return classes_;
}

long FiniteGroup::class_of(long i) const {
    conjugacy_classes();
    return class_of_[static_cast<size_t>(i)];
}

Subgroup Subgroup::from_members(const FiniteGroup& g, std::vector<long> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup s;
    s.parent_ = &g;
    s.members_ = std::move(members);
    s.member_mask_.assign(g.size(), false);
    for (long m : s.members_) {
        input_check(m >= 0 && m < g.size(), "subgroup: member index out of range");
        s.member_mask_[static_cast<size_t>(m)] = true;
    }
    input_check(!s.members_.empty() && s.member_mask_[0], "subgroup: must contain the identity");
    for (long a : s.members_) {
        input_check(s.member_mask_[static_cast<size_t>(g.inv(a))],
                    "subgroup: not closed under inverse");
        for (long b : s.members_)
            input_check(s.member_mask_[static_cast<size_t>(g.mul(a, b))],
                        "subgroup: not closed under product");
    }
    return s;
}

Subgroup Subgroup::from_generators(const FiniteGroup& g, const std::vector<long>& gens) {
    std::vector<long> members{0};
    std::vector<bool> seen(g.size(), false);
    seen[0] = true;
    for (size_t head = 0; head < members.size(); ++head)
        for (long s : gens) {
            long next = g.mul(members[head], s);
            if (!seen[static_cast<size_t>(next)]) {
                seen[static_cast<size_t>(next)] = true;
                members.push_back(next);
            }
        }
    return from_members(g, std::move(members));
}

bool Subgroup::is_normal() const {
    const FiniteGroup& g = *parent_;
    for (long x = 0; x < g.size(); ++x)
        for (long m : members_)
            if (!contains(g.conjugate(x, m))) return false;
    return true;
}

std::pair<FiniteGroup, std::vector<long>> Subgroup::as_group() const {
    const FiniteGroup& g = *parent_;
    std::vector<Permutation> gens;
    gens.reserve(members_.size());
    for (long m : members_) gens.push_back(g.element(m));
    FiniteGroup sub = FiniteGroup::enumerate(g.degree(), std::move(gens),
                                             static_cast<size_t>(members_.size()) + 1);
    internal_check(sub.size() == size(), "subgroup: enumeration size mismatch");
    std::vector<long> to_parent(sub.size());
    for (long i = 0; i < sub.size(); ++i) to_parent[i] = g.index_of(sub.element(i));
    return {std::move(sub), std::move(to_parent)};
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
    input_check(&n.parent() == &g, "quotient: subgroup belongs to a different group");
    input_check(n.is_normal(), "quotient: subgroup is not normal");

    // Cosets xN, canonically ordered by minimal member.
    std::vector<long> coset_of(g.size(), -1);
    std::vector<std::vector<long>> cosets;
    for (long x = 0; x < g.size(); ++x) {
        if (coset_of[x] >= 0) continue;
        std::vector<long> coset;
        for (long m : n.members()) coset.push_back(g.mul(x, m));
        std::sort(coset.begin(), coset.end());
        long id = static_cast<long>(cosets.size());
        for (long y : coset) coset_of[y] = id;
        cosets.push_back(std::move(coset));
    }

    // Left-translation permutations of the coset set.
    long m = static_cast<long>(cosets.size());
    auto coset_perm = [&](long x) {
        Permutation p(static_cast<size_t>(m));
        for (long c = 0; c < m; ++c)
            p[static_cast<size_t>(c)] = static_cast<int>(coset_of[g.mul(x, cosets[c][0])]);
        return p;
    };
    std::vector<Permutation> gens;
    for (const auto& gen : g.generators()) gens.push_back(coset_perm(g.index_of(gen)));
    if (gens.empty()) gens.push_back(perm_identity(static_cast<int>(m)));
    FiniteGroup q = FiniteGroup::enumerate(static_cast<int>(m), std::move(gens),
                                           static_cast<size_t>(m) + 1);
    internal_check(q.size() == g.size() / n.size(), "quotient: wrong order");

    std::vector<long> projection(g.size());
    for (long x = 0; x < g.size(); ++x) projection[x] = q.index_of(coset_perm(x));
    return {std::move(q), std::move(projection), std::move(cosets)};
}

} // namespace chiforge::groups
