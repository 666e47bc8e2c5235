#include "chiforge/repcat/character_table.hpp"

#include "chiforge/exact/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace chiforge::repcat {

using exact::Cyclotomic;
using groups::FiniteGroup;

long CharacterTable::dim(long row) const {
    const Cyclotomic& d = chi[static_cast<size_t>(row)][0];
    internal_check(d.is_integer(), "character table: non-integer dimension");
    return d.to_rational().get_num().get_si();
}

Cyclotomic CharacterTable::value_at_element(long row, long g) const {
    return chi[static_cast<size_t>(row)][static_cast<size_t>(group->class_of(g))];
}

long CharacterTable::trivial_row() const {
    for (long r = 0; r < rank(); ++r) {
        bool all_one = true;
        for (long k = 0; k < classes() && all_one; ++k)
            all_one = chi[static_cast<size_t>(r)][static_cast<size_t>(k)] == Cyclotomic(1);
        if (all_one) return r;
    }
    throw InternalError("character table: trivial character missing");
}

long CharacterTable::conjugate_row(long row) const {
    std::vector<Cyclotomic> conj_row;
    conj_row.reserve(classes());
    for (long k = 0; k < classes(); ++k)
        conj_row.push_back(chi[static_cast<size_t>(row)][static_cast<size_t>(k)].conj());
    for (long r = 0; r < rank(); ++r)
        if (chi[static_cast<size_t>(r)] == conj_row) return r;
    throw InternalError("character table: conjugate character missing");
}

void verify_orthogonality(const CharacterTable& t) {
    long r = t.rank(), k = t.classes();
    internal_check(r == k, "character table: rank != class count");
    long order = t.group->size();
    // Row orthogonality: sum_g chi_i(g) conj(chi_j(g)) = delta_ij |G|.
    for (long i = 0; i < r; ++i)
        for (long j = i; j < r; ++j) {
            Cyclotomic acc;
            for (long c = 0; c < k; ++c)
                acc += t.chi[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                       t.chi[static_cast<size_t>(j)][static_cast<size_t>(c)].conj() *
                       Cyclotomic(t.class_size[static_cast<size_t>(c)]);
            internal_check(acc == (i == j ? Cyclotomic(order) : Cyclotomic(0)),
                           "character table: row orthogonality failed");
        }
    // Column orthogonality: sum_i chi_i(g) conj(chi_i(h)) = delta |C_G(g)|.
    for (long c = 0; c < k; ++c)
        for (long d = c; d < k; ++d) {
            Cyclotomic acc;
            for (long i = 0; i < r; ++i)
                acc += t.chi[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                       t.chi[static_cast<size_t>(i)][static_cast<size_t>(d)].conj();
            Cyclotomic expect =
                c == d ? Cyclotomic(order / t.class_size[static_cast<size_t>(c)]) : Cyclotomic(0);
            internal_check(acc == expect, "character table: column orthogonality failed");
        }
    long dim_sq = 0;
    for (long i = 0; i < r; ++i) dim_sq += t.dim(i) * t.dim(i);
    internal_check(dim_sq == order, "character table: sum of squared dims != |G|");
}

namespace {

struct ModMatrix {
    long rows = 0, cols = 0;
    std::vector<long> a; // row-major mod p
    long& at(long i, long j) { return a[static_cast<size_t>(i * cols + j)]; }
    long at(long i, long j) const { return a[static_cast<size_t>(i * cols + j)]; }
};

// Kernel basis of a rectangular matrix over F_p, as coordinate vectors.
std::vector<std::vector<long>> mod_kernel(ModMatrix m, long p) {
    std::vector<long> pivot_col;
    long row = 0;
    for (long col = 0; col < m.cols && row < m.rows; ++col) {
        long piv = -1;
        for (long i = row; i < m.rows; ++i)
            if (m.at(i, col) % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (long j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        long inv = exact::inv_mod(m.at(row, col), p);
        for (long j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv % p;
        for (long i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            long f = m.at(i, col) % p;
            if (f == 0) continue;
            for (long j = 0; j < m.cols; ++j)
                m.at(i, j) = ((m.at(i, j) - f * m.at(row, j)) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<long>> basis;
    for (long free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<long> v(static_cast<size_t>(m.cols), 0);
        v[static_cast<size_t>(free)] = 1;
        for (size_t rr = 0; rr < pivot_col.size(); ++rr)
            v[static_cast<size_t>(pivot_col[rr])] = (p - m.at(static_cast<long>(rr), free)) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

struct DixonData {
    long p = 0;
    long e = 0;
    std::vector<std::vector<long>> omega; // per character: omega_k mod p
    std::vector<long> dims;               // chi(1) as integers
};

// Splits the simultaneous eigenvectors of the class matrices over F_p.
// Returns nullopt when splitting fails for this prime.
std::optional<DixonData> dixon_mod_p(const FiniteGroup& g, long p, long e,
                                     const std::vector<std::vector<long>>& cls,
                                     const std::vector<long>& inv_class) {
    long r = static_cast<long>(cls.size());
    std::vector<long> class_of(g.size());
    for (long c = 0; c < r; ++c)
        for (long x : cls[static_cast<size_t>(c)]) class_of[static_cast<size_t>(x)] = c;

    // Structure constants: M_i[j][k] = #{(x,y) in C_i x C_j : xy = rep_k}.
    std::vector<ModMatrix> class_mat(static_cast<size_t>(r));
    for (auto& m : class_mat) {
        m.rows = m.cols = r;
        m.a.assign(static_cast<size_t>(r) * r, 0);
    }
    for (long k = 0; k < r; ++k) {
        long zk = cls[static_cast<size_t>(k)][0];
        for (long x = 0; x < g.size(); ++x) {
            long i = class_of[static_cast<size_t>(x)];
            long j = class_of[static_cast<size_t>(g.mul(g.inv(x), zk))];
            ++class_mat[static_cast<size_t>(i)].at(j, k);
        }
    }
    for (auto& m : class_mat)
        for (auto& v : m.a) v %= p;

    // Common eigenvector split.
    std::vector<std::vector<std::vector<long>>> spaces; // each: list of basis col vectors
    {
        std::vector<std::vector<long>> full;
        for (long i = 0; i < r; ++i) {
            std::vector<long> v(static_cast<size_t>(r), 0);
            v[static_cast<size_t>(i)] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (long i = 1; i < r; ++i) {
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const auto& s) { return s.size() == 1; });
        if (all_one) break;
        std::vector<std::vector<std::vector<long>>> next;
        for (auto& space : spaces) {
            if (space.size() == 1) {
                next.push_back(std::move(space));
                continue;
            }
            long d = static_cast<long>(space.size());
            size_t found = 0;
            for (long lambda = 0; lambda < p && found < static_cast<size_t>(d); ++lambda) {
                // Kernel of (M_i - lambda) restricted to the span: solve in
                // coordinates c with (M_i - lambda) * (B c) = 0.
                ModMatrix km;
                km.rows = r;
                km.cols = d;
                km.a.assign(static_cast<size_t>(r) * d, 0);
                for (long row = 0; row < r; ++row)
                    for (long col = 0; col < d; ++col) {
                        long acc = 0;
                        for (long t = 0; t < r; ++t)
                            acc = (acc + class_mat[static_cast<size_t>(i)].at(row, t) *
                                             space[static_cast<size_t>(col)][static_cast<size_t>(t)]) %
                                  p;
                        acc = (acc - lambda * space[static_cast<size_t>(col)][static_cast<size_t>(row)]) % p;
                        km.at(row, col) = (acc + p) % p;
                    }
                auto kern = mod_kernel(km, p);
                std::vector<std::vector<long>> sub;
                for (auto& cvec : kern) {
                    std::vector<long> v(static_cast<size_t>(r), 0);
                    for (long t = 0; t < r; ++t) {
                        long acc = 0;
                        for (long col = 0; col < d; ++col)
                            acc = (acc + space[static_cast<size_t>(col)][static_cast<size_t>(t)] *
                                             cvec[static_cast<size_t>(col)]) %
                                  p;
                        v[static_cast<size_t>(t)] = acc;
                    }
                    sub.push_back(std::move(v));
                }
                if (!sub.empty()) {
                    found += sub.size();
                    next.push_back(std::move(sub));
                }
            }
            if (found != static_cast<size_t>(d)) return std::nullopt; // not diagonalizable mod p
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.size() != 1) return std::nullopt;

    DixonData out;
    out.p = p;
    out.e = e;
    long order_mod = g.size() % p;
    for (auto& s : spaces) {
        std::vector<long> v = s[0];
        if (v[0] == 0) return std::nullopt; // identity component must be nonzero
        long scale = exact::inv_mod(v[0], p);
        for (auto& x : v) x = x * scale % p;
        // 1/chi(1)^2 = (1/|G|) sum_k omega_k omega_{k*} / |C_k|.
        long acc = 0;
        for (long k = 0; k < r; ++k) {
            long term = v[static_cast<size_t>(k)] * v[static_cast<size_t>(inv_class[static_cast<size_t>(k)])] % p;
            term = term * exact::inv_mod(static_cast<long>(cls[static_cast<size_t>(k)].size()) % p, p) % p;
            acc = (acc + term) % p;
        }
        long d2 = order_mod * exact::inv_mod(acc, p) % p;
        long dim = -1;
        for (long d = 1; 2 * d < p; ++d)
            if (d * d % p == d2) {
                dim = d;
                break;
            }
        if (dim < 0) return std::nullopt;
        out.dims.push_back(dim);
        out.omega.push_back(std::move(v));
    }
    return out;
}

} // namespace

CharacterTable character_table(std::shared_ptr<const groups::FiniteGroup> gp) {
    const FiniteGroup& g = *gp;
    input_check(g.size() <= 1000, "character_table: group order cap (1000) exceeded");
    long e = g.exponent();

    CharacterTable t;
    t.group = gp;
    const auto& cls = g.conjugacy_classes();
    long r = static_cast<long>(cls.size());
    for (const auto& c : cls) {
        t.class_rep.push_back(c[0]);
        t.class_size.push_back(static_cast<long>(c.size()));
    }
    for (long k = 0; k < r; ++k)
        t.inverse_class.push_back(g.class_of(g.inv(t.class_rep[static_cast<size_t>(k)])));

    // Power map: class of rep_k^s.
    std::vector<std::vector<long>> power_class(static_cast<size_t>(r),
                                               std::vector<long>(static_cast<size_t>(e)));
    for (long k = 0; k < r; ++k) {
        long x = 0;
        for (long s = 0; s < e; ++s) {
            power_class[static_cast<size_t>(k)][static_cast<size_t>(s)] = g.class_of(x);
            x = g.mul(x, t.class_rep[static_cast<size_t>(k)]);
        }
    }

    double sq = std::sqrt(static_cast<double>(g.size()));
    long p_lower = static_cast<long>(2.0 * sq) + 1;
    long p = exact::next_prime_in_class(p_lower, e, 1 % e);
    for (int attempt = 0; attempt < 8; ++attempt, p = exact::next_prime_in_class(p, e, 1 % e)) {
        auto data = dixon_mod_p(g, p, e, cls, t.inverse_class);
        if (!data) continue;

        // chi(rep_k) mod p, then Brauer lift through the power map.
        long z = exact::pow_mod(exact::primitive_root(p), (p - 1) / e, p);
        long inv_e = exact::inv_mod(e % p, p);
        std::vector<std::vector<long>> chi_mod(data->omega.size(),
                                               std::vector<long>(static_cast<size_t>(r)));
        for (size_t row = 0; row < data->omega.size(); ++row)
            for (long k = 0; k < r; ++k)
                chi_mod[row][static_cast<size_t>(k)] =
                    data->omega[row][static_cast<size_t>(k)] * (data->dims[row] % p) % p *
                    exact::inv_mod(t.class_size[static_cast<size_t>(k)] % p, p) % p;

        bool lift_ok = true;
        std::vector<std::vector<Cyclotomic>> rows;
        for (size_t row = 0; row < chi_mod.size() && lift_ok; ++row) {
            std::vector<Cyclotomic> valrow;
            for (long k = 0; k < r && lift_ok; ++k) {
                std::vector<std::pair<long, exact::Rational>> terms;
                long total = 0;
                for (long j = 0; j < e; ++j) {
                    long m = 0;
                    for (long s = 0; s < e; ++s) {
                        long cs = chi_mod[row][static_cast<size_t>(
                            power_class[static_cast<size_t>(k)][static_cast<size_t>(s)])];
                        m = (m + cs * exact::pow_mod(z, ((e - j % e) * s) % e, p)) % p;
                    }
                    m = m * inv_e % p;
                    if (m > data->dims[row]) {
                        lift_ok = false; // multiplicities must be <= chi(1)
                        break;
                    }
                    total += m;
                    if (m != 0) terms.emplace_back(j, exact::Rational(m));
                }
                if (!lift_ok || total != data->dims[row]) {
                    lift_ok = false;
                    break;
                }
                valrow.push_back(Cyclotomic::from_terms(e, terms));
            }
            if (lift_ok) rows.push_back(std::move(valrow));
        }
        if (!lift_ok) continue;

        // Canonical row order: by (dimension, lexicographic values).
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            int c = Cyclotomic::compare(a[0], b[0]);
            if (c != 0) return c < 0;
            for (size_t i = 1; i < a.size(); ++i) {
                c = Cyclotomic::compare(a[i], b[i]);
                if (c != 0) return c < 0;
            }
            return false;
        });
        t.chi = std::move(rows);
        verify_orthogonality(t);
        return t;
    }
    throw InternalError("character_table: Dixon splitting failed for all candidate primes");
}

RestrictionResult restrict_quotient(const CharacterTable& t, const groups::Subgroup& n) {
    const FiniteGroup& g = *t.group;
    input_check(&n.parent() == &g, "restrict_quotient: subgroup of a different group");
    input_check(n.is_normal(), "restrict_quotient: subgroup is not normal");

    RestrictionResult out;
    for (long row = 0; row < t.rank(); ++row) {
        bool factors = true;
        for (long m : n.members())
            if (t.value_at_element(row, m) != t.chi[static_cast<size_t>(row)][0]) {
                factors = false;
                break;
            }
        if (factors) out.selected_rows.push_back(row);
    }

    auto q = groups::quotient(g, n);
    auto qg = std::make_shared<groups::FiniteGroup>(std::move(q.group));
    out.quotient_table = character_table(qg);
    internal_check(static_cast<long>(out.selected_rows.size()) == out.quotient_table.rank(),
                   "restrict_quotient: selected rows do not match quotient rank");

    // Match each selected row with the quotient row that pulls back to it.
    for (long row : out.selected_rows) {
        long found = -1;
        for (long qrow = 0; qrow < out.quotient_table.rank() && found < 0; ++qrow) {
            bool same = true;
            for (long x = 0; x < g.size() && same; ++x)
                same = t.value_at_element(row, x) ==
                       out.quotient_table.value_at_element(qrow, q.projection[static_cast<size_t>(x)]);
            if (same) found = qrow;
        }
        internal_check(found >= 0, "restrict_quotient: no quotient character matches pullback");
        out.matching.push_back(found);
    }
    auto sorted = out.matching;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        internal_check(sorted[i] == static_cast<long>(i),
                       "restrict_quotient: matching is not a bijection");
    return out;
}

CharacterTable deligne_product(const CharacterTable& t1, const CharacterTable& t2) {
    const FiniteGroup& g1 = *t1.group;
    const FiniteGroup& g2 = *t2.group;
    auto prod = std::make_shared<FiniteGroup>(FiniteGroup::direct_product(g1, g2));

    CharacterTable t;
    t.group = prod;
    const auto& cls = prod->conjugacy_classes();
    std::vector<std::pair<long, long>> class_pair;
    for (const auto& c : cls) {
        t.class_rep.push_back(c[0]);
        t.class_size.push_back(static_cast<long>(c.size()));
        const groups::Permutation& rep = prod->element(c[0]);
        groups::Permutation a(rep.begin(), rep.begin() + g1.degree());
        groups::Permutation b(static_cast<size_t>(g2.degree()));
        for (int i = 0; i < g2.degree(); ++i) b[static_cast<size_t>(i)] = rep[static_cast<size_t>(g1.degree() + i)] - g1.degree();
        class_pair.emplace_back(g1.class_of(g1.index_of(a)), g2.class_of(g2.index_of(b)));
    }
    internal_check(static_cast<long>(cls.size()) == t1.classes() * t2.classes(),
                   "deligne_product: class count mismatch");
    for (size_t k = 0; k < cls.size(); ++k)
        t.inverse_class.push_back(prod->class_of(prod->inv(t.class_rep[k])));

    for (long i = 0; i < t1.rank(); ++i)
        for (long j = 0; j < t2.rank(); ++j) {
            std::vector<Cyclotomic> row;
            row.reserve(cls.size());
            for (const auto& [c1, c2] : class_pair)
                row.push_back(t1.chi[static_cast<size_t>(i)][static_cast<size_t>(c1)] *
                              t2.chi[static_cast<size_t>(j)][static_cast<size_t>(c2)]);
            t.chi.push_back(std::move(row));
        }
    std::sort(t.chi.begin(), t.chi.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            int c = Cyclotomic::compare(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    verify_orthogonality(t);
    return t;
}

} // namespace chiforge::repcat
