#include "chiforge/groups/dual_group.hpp"

#include "chiforge/exact/int_matrix.hpp"

#include <algorithm>
#include <functional>

namespace chiforge::groups {

using exact::Integer;
using exact::IntMatrix;
using exact::QmodZ;
using exact::Rational;

long DualGroup::mul(long a, long b) const {
    // Mixed-radix add of character coordinates.
    std::vector<long> radix = invariant_factors;
    auto decode = [&](long c) {
        std::vector<long> t(radix.size());
        for (size_t i = 0; i < radix.size(); ++i) {
            t[i] = c % radix[i];
            c /= radix[i];
        }
        return t;
    };
    auto ta = decode(a), tb = decode(b);
    long out = 0, mult = 1;
    for (size_t i = 0; i < radix.size(); ++i) {
        out += ((ta[i] + tb[i]) % radix[i]) * mult;
        mult *= radix[i];
    }
    return out;
}

long DualGroup::inverse(long a) const {
    std::vector<long> radix = invariant_factors;
    long out = 0, mult = 1;
    for (size_t i = 0; i < radix.size(); ++i) {
        long t = a % radix[i];
        a /= radix[i];
        out += ((radix[i] - t) % radix[i]) * mult;
        mult *= radix[i];
    }
    return out;
}

namespace {

struct LatticeData {
    std::vector<long> factors;                 ///< nontrivial invariant factors
    std::vector<std::vector<long>> coordinates; ///< per element, length = #factors
};

// Invariant factors + coordinates for a finite abelian quotient given by
// words: relation rows span the kernel of Z^k -> Q, and word(x) is any
// preimage of x.
LatticeData lattice_decomposition(const std::vector<std::vector<long>>& relations,
                                  const std::vector<std::vector<long>>& words, long k) {
    using namespace chiforge::exact;
    LatticeData out;
    if (k == 0) {
        out.coordinates.assign(words.size(), {});
        return out;
    }
    IntMatrix r(static_cast<long>(relations.size()), k);
    for (size_t i = 0; i < relations.size(); ++i)
        for (long j = 0; j < k; ++j) r.at(static_cast<long>(i), j) = relations[i][j];
    SmithResult s = smith_normal_form(r);
    IntMatrix vinv = inverse_unimodular(s.v);

    std::vector<long> diag(k, 0);
    for (long j = 0; j < std::min(r.rows(), k); ++j) {
        internal_check(s.d.at(j, j).fits_slong_p(), "lattice: invariant factor too large");
        diag[j] = s.d.at(j, j).get_si();
    }
    for (long j = 0; j < k; ++j)
        internal_check(diag[j] != 0, "lattice: group is infinite (relation matrix rank deficient)");

    std::vector<long> keep;
    for (long j = 0; j < k; ++j)
        if (diag[j] > 1) keep.push_back(j);
    for (long j : keep) out.factors.push_back(diag[j]);

    out.coordinates.reserve(words.size());
    for (const auto& w : words) {
        std::vector<long> coord;
        coord.reserve(keep.size());
        for (long j : keep) {
            Integer y(0);
            for (long t = 0; t < k; ++t) y += vinv.at(j, t) * Integer(w[t]);
            Integer m;
            mpz_mod(m.get_mpz_t(), y.get_mpz_t(), Integer(diag[j]).get_mpz_t());
            coord.push_back(m.get_si());
        }
        out.coordinates.push_back(std::move(coord));
    }
    return out;
}

// BFS word vectors for a group with a multiplication oracle and k generator
// indices; also emits the Schreier relation rows.
void schreier_words(long n, const std::function<long(long, long)>& mul,
                    const std::vector<long>& gens, std::vector<std::vector<long>>& words,
                    std::vector<std::vector<long>>& relations) {
    long k = static_cast<long>(gens.size());
    words.assign(n, {});
    std::vector<bool> seen(n, false);
    std::vector<long> order{0};
    seen[0] = true;
    words[0].assign(k, 0);
    for (size_t head = 0; head < order.size(); ++head) {
        long x = order[head];
        for (long gi = 0; gi < k; ++gi) {
            long y = mul(x, gens[gi]);
            std::vector<long> w = words[x];
            w[gi] += 1;
            if (!seen[y]) {
                seen[y] = true;
                words[y] = std::move(w);
                order.push_back(y);
            } else {
                // Schreier relation: word(x) + e_i - word(y) lies in the kernel.
                for (long t = 0; t < k; ++t) w[t] -= words[y][t];
                relations.push_back(std::move(w));
            }
        }
    }
    for (long i = 0; i < n; ++i)
        internal_check(seen[i], "schreier_words: generators do not generate");
}

} // namespace

std::vector<long> abelian_invariant_factors(long n, const std::function<long(long, long)>& mul) {
    if (n == 1) return {};
    std::vector<long> gens;
    for (long i = 1; i < n; ++i) gens.push_back(i);
    std::vector<std::vector<long>> words, relations;
    schreier_words(n, mul, gens, words, relations);
    return lattice_decomposition(relations, words, static_cast<long>(gens.size())).factors;
}

std::vector<long> merge_invariant_factors(const std::vector<long>& a, const std::vector<long>& b) {
    long k = static_cast<long>(a.size() + b.size());
    if (k == 0) return {};
    IntMatrix r(k, k);
    for (size_t i = 0; i < a.size(); ++i) r.at(static_cast<long>(i), static_cast<long>(i)) = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r.at(static_cast<long>(a.size() + i), static_cast<long>(a.size() + i)) = b[i];
    exact::SmithResult s = exact::smith_normal_form(r);
    std::vector<long> out;
    for (long j = 0; j < k; ++j)
        if (s.d.at(j, j) > 1) out.push_back(s.d.at(j, j).get_si());
    return out;
}

AbelianizationResult abelianization_and_dual(const FiniteGroup& g) {
    // Commutator subgroup: closure of all commutators.
    std::vector<long> comms;
    for (long x = 0; x < g.size(); ++x)
        for (long y = 0; y < g.size(); ++y)
            comms.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    Subgroup derived = Subgroup::from_generators(g, comms);
    QuotientResult q = quotient(g, derived);

    // Words in the quotient over the images of G's generators.
    std::vector<long> qgens;
    for (const auto& gen : g.generators()) qgens.push_back(q.projection[g.index_of(gen)]);
    if (qgens.empty()) qgens.push_back(0);
    std::vector<std::vector<long>> words, relations;
    schreier_words(q.group.size(), [&](long x, long y) { return q.group.mul(x, y); }, qgens,
                   words, relations);
    // Generator orders are relations too (kept explicit so the lattice has
    // full rank even when BFS finds few coincidences).
    for (size_t gi = 0; gi < qgens.size(); ++gi) {
        std::vector<long> row(qgens.size(), 0);
        row[gi] = q.group.order_of(qgens[gi]);
        relations.push_back(std::move(row));
    }
    LatticeData lat = lattice_decomposition(relations, words, static_cast<long>(qgens.size()));

    AbelianizationResult out;
    out.invariant_factors = lat.factors;
    out.dual.invariant_factors = lat.factors;

    // Element coordinates in G^ab, pulled back to G.
    out.dual.coordinates.resize(g.size());
    for (long x = 0; x < g.size(); ++x) out.dual.coordinates[x] = lat.coordinates[q.projection[x]];

    long count = 1;
    for (long d : lat.factors) count *= d;
    out.dual.chars.reserve(count);
    for (long c = 0; c < count; ++c) {
        std::vector<long> t(lat.factors.size());
        long cc = c;
        for (size_t i = 0; i < lat.factors.size(); ++i) {
            t[i] = cc % lat.factors[i];
            cc /= lat.factors[i];
        }
        std::vector<QmodZ> row(g.size());
        for (long x = 0; x < g.size(); ++x) {
            Rational acc(0);
            for (size_t i = 0; i < lat.factors.size(); ++i)
                acc += exact::make_rational(t[i] * out.dual.coordinates[x][i], lat.factors[i]);
            row[x] = QmodZ(acc);
        }
        out.dual.chars.push_back(std::move(row));
    }
    return out;
}

} // namespace chiforge::groups
