#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chiforge/groups/cochain.hpp"
#include "chiforge/groups/dual_group.hpp"
#include "chiforge/groups/finite_group.hpp"

#include <algorithm>
#include <random>

using namespace chiforge;
using namespace chiforge::groups;
using exact::QmodZ;

namespace {

FiniteGroup cyclic(int n) {
    Permutation c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    return FiniteGroup::enumerate(n, {c});
}

FiniteGroup symmetric3() {
    return FiniteGroup::enumerate(3, {{1, 0, 2}, {1, 2, 0}});
}

FiniteGroup alternating5() {
    return FiniteGroup::enumerate(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
}

FiniteGroup quaternion8() {
    // Left regular action of Q8 on {1,i,-1,-i,j,-j,k,-k}.
    return FiniteGroup::enumerate(8, {{1, 2, 3, 0, 6, 7, 5, 4}, {4, 7, 5, 6, 2, 0, 1, 3}});
}

std::vector<long> class_sizes(const FiniteGroup& g) {
    std::vector<long> sizes;
    for (const auto& c : g.conjugacy_classes()) sizes.push_back(static_cast<long>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

TEST_CASE("group enumeration") {
    CHECK(FiniteGroup::enumerate(2, {{1, 0}}).size() == 2);
    CHECK(symmetric3().size() == 6);
    CHECK(alternating5().size() == 60);
    CHECK(quaternion8().size() == 8);
    CHECK(cyclic(12).size() == 12);

    FiniteGroup s3 = symmetric3();
    CHECK(s3.element(0) == perm_identity(3));
    for (long i = 0; i < s3.size(); ++i) {
        CHECK(s3.mul(i, s3.inv(i)) == 0);
        // BFS words reproduce the element.
        Permutation p = perm_identity(3);
        for (int w : s3.word(i)) p = perm_compose(p, s3.generators()[static_cast<size_t>(w)]);
        CHECK(s3.index_of(p) == i);
    }
    CHECK_THROWS_AS(FiniteGroup::enumerate(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(FiniteGroup::enumerate(5, {{1, 2, 3, 4, 0}}, 3), InputError);
}

TEST_CASE("conjugacy classes") {
    CHECK(class_sizes(cyclic(6)) == std::vector<long>{1, 1, 1, 1, 1, 1});
    CHECK(class_sizes(symmetric3()) == std::vector<long>{1, 2, 3});
    CHECK(class_sizes(alternating5()) == std::vector<long>{1, 12, 12, 15, 20});
    // Identity class is the first and a singleton.
    CHECK(alternating5().conjugacy_classes()[0] == std::vector<long>{0});
}

TEST_CASE("quotients") {
    FiniteGroup s3 = symmetric3();
    SUBCASE("G/G is trivial") {
        std::vector<long> all(s3.size());
        for (long i = 0; i < s3.size(); ++i) all[static_cast<size_t>(i)] = i;
        auto q = quotient(s3, Subgroup::from_members(s3, all));
        CHECK(q.group.size() == 1);
    }
    SUBCASE("S3/A3 has order 2") {
        Subgroup a3 = Subgroup::from_generators(s3, {s3.index_of({1, 2, 0})});
        CHECK(a3.size() == 3);
        CHECK(a3.is_normal());
        auto q = quotient(s3, a3);
        CHECK(q.group.size() == 2);
        // Projection is a homomorphism with the right fibers.
        for (long x = 0; x < s3.size(); ++x)
            for (long y = 0; y < s3.size(); ++y)
                CHECK(q.projection[static_cast<size_t>(s3.mul(x, y))] ==
                      q.group.mul(q.projection[static_cast<size_t>(x)],
                                  q.projection[static_cast<size_t>(y)]));
    }
    SUBCASE("Q8/center is the Klein four-group") {
        FiniteGroup q8 = quaternion8();
        long minus_one = q8.mul(q8.index_of({1, 2, 3, 0, 6, 7, 5, 4}),
                                q8.index_of({1, 2, 3, 0, 6, 7, 5, 4}));
        Subgroup center = Subgroup::from_generators(q8, {minus_one});
        CHECK(center.size() == 2);
        CHECK(center.is_normal());
        auto q = quotient(q8, center);
        CHECK(q.group.size() == 4);
        CHECK(q.group.is_abelian());
        for (long i = 0; i < 4; ++i) CHECK(q.group.mul(i, i) == 0); // exponent 2
    }
    SUBCASE("non-normal subgroup is rejected") {
        Subgroup h = Subgroup::from_generators(s3, {s3.index_of({1, 0, 2})});
        CHECK(!h.is_normal());
        CHECK_THROWS_AS(quotient(s3, h), InputError);
    }
}

TEST_CASE("abelianization and dual group") {
    SUBCASE("dual of A5 is trivial") {
        auto r = abelianization_and_dual(alternating5());
        CHECK(r.invariant_factors.empty());
        CHECK(r.dual.size() == 1);
    }
    SUBCASE("dual of Z/n is Z/n") {
        for (int n : {2, 3, 4, 6, 12}) {
            auto r = abelianization_and_dual(cyclic(n));
            CHECK(r.invariant_factors == std::vector<long>{n});
            CHECK(r.dual.size() == n);
        }
    }
    SUBCASE("dual of S3 is Z/2") {
        auto r = abelianization_and_dual(symmetric3());
        CHECK(r.invariant_factors == std::vector<long>{2});
        CHECK(r.dual.size() == 2);
    }
    SUBCASE("dual of Q8 is Z/2 x Z/2") {
        auto r = abelianization_and_dual(quaternion8());
        CHECK(r.invariant_factors == std::vector<long>{2, 2});
    }
    SUBCASE("every character is a homomorphism, and there are exactly |G^ab| of them") {
        for (const FiniteGroup& g : {symmetric3(), cyclic(6), quaternion8()}) {
            auto r = abelianization_and_dual(g);
            long expected = 1;
            for (long d : r.invariant_factors) expected *= d;
            CHECK(r.dual.size() == expected);
            for (const auto& chi : r.dual.chars)
                for (long x = 0; x < g.size(); ++x)
                    for (long y = 0; y < g.size(); ++y)
                        CHECK(chi[static_cast<size_t>(g.mul(x, y))] ==
                              chi[static_cast<size_t>(x)] + chi[static_cast<size_t>(y)]);
            // Characters are pairwise distinct.
            for (long a = 0; a < r.dual.size(); ++a)
                for (long b = a + 1; b < r.dual.size(); ++b)
                    CHECK(r.dual.chars[static_cast<size_t>(a)] != r.dual.chars[static_cast<size_t>(b)]);
        }
    }
    SUBCASE("merge of invariant factors") {
        CHECK(merge_invariant_factors({2}, {2}) == std::vector<long>{2, 2});
        CHECK(merge_invariant_factors({2}, {3}) == std::vector<long>{6});
        CHECK(merge_invariant_factors({2, 4}, {3}) == std::vector<long>{2, 12});
        CHECK(merge_invariant_factors({}, {5}) == std::vector<long>{5});
    }
    SUBCASE("abstract abelian invariant factors") {
        FiniteGroup klein = FiniteGroup::enumerate(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
        auto factors = abelian_invariant_factors(
            klein.size(), [&](long a, long b) { return klein.mul(a, b); });
        CHECK(factors == std::vector<long>{2, 2});
        FiniteGroup c6 = cyclic(6);
        CHECK(abelian_invariant_factors(c6.size(), [&](long a, long b) { return c6.mul(a, b); }) ==
              std::vector<long>{6});
    }
}

namespace {

// The Pauli cochain on Z/2 x Z/2 from the section v_{(a,b)} = sigma_x^a sigma_z^b:
// v_g v_h = (-1)^{c(g,h)} v_{g+h} with c((a,b),(c,d)) = b*c mod 2.
TwoCochain pauli_cochain(const FiniteGroup& klein, const std::vector<std::pair<int, int>>& coords) {
    TwoCochain c = TwoCochain::zero(4, 2);
    for (long g = 0; g < 4; ++g)
        for (long h = 0; h < 4; ++h)
            c.set(g, h, coords[static_cast<size_t>(g)].second * coords[static_cast<size_t>(h)].first);
    (void)klein;
    return c;
}

// Exhaustive coboundary oracle: tries all rho: G -> Z/m.
bool coboundary_exhaustive(const FiniteGroup& g, const TwoCochain& c) {
    long n = g.size(), m = c.modulus;
    std::vector<long> rho(static_cast<size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (long x = 0; x < n && ok; ++x)
            for (long y = 0; y < n && ok; ++y)
                ok = (rho[static_cast<size_t>(x)] + rho[static_cast<size_t>(y)] -
                      rho[static_cast<size_t>(g.mul(x, y))] - c.at(x, y)) % m == 0;
        if (ok) return true;
        long k = 0;
        while (k < n && ++rho[static_cast<size_t>(k)] == m) rho[static_cast<size_t>(k++)] = 0;
        if (k == n) return false;
    }
}

} // namespace

TEST_CASE("two-cocycle verification and coboundary decision") {
    FiniteGroup klein = FiniteGroup::enumerate(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    // Element coordinates (a,b) with respect to the two generators.
    std::vector<std::pair<int, int>> coords(4);
    for (long i = 0; i < 4; ++i) {
        auto w = klein.word(i);
        int a = 0, b = 0;
        for (int s : w) (s == 0 ? a : b) ^= 1;
        coords[static_cast<size_t>(i)] = {a, b};
    }

    SUBCASE("zero cochain") {
        TwoCochain z = TwoCochain::zero(4, 2);
        CHECK(two_cocycle_verify(klein, z));
        auto rho = two_coboundary_test(klein, z);
        REQUIRE(rho.has_value());
        CHECK(std::all_of(rho->begin(), rho->end(), [](long v) { return v == 0; }));
    }
    SUBCASE("Pauli cochain is a cocycle but not a coboundary") {
        TwoCochain c = pauli_cochain(klein, coords);
        CHECK(two_cocycle_verify(klein, c));
        CHECK(!two_coboundary_test(klein, c).has_value());
        CHECK(!coboundary_exhaustive(klein, c));           // oracle agrees (2^4 candidates)
        CHECK(!two_coboundary_test_u1(klein, c).has_value()); // nontrivial even in U(1)
    }
    SUBCASE("perturbing one entry of a cocycle breaks the identity") {
        TwoCochain c = pauli_cochain(klein, coords);
        c.set(1, 2, c.at(1, 2) + 1);
        CHECK(!two_cocycle_verify(klein, c));
        CHECK_THROWS_AS(two_coboundary_test(klein, c), InputError);
    }
    SUBCASE("construct-then-solve: coboundaries are recognized with a witness") {
        std::mt19937 rng(17);
        for (const FiniteGroup& g : {klein, cyclic(4), symmetric3()}) {
            for (long m : {2L, 3L, 4L}) {
                std::vector<long> rho0(static_cast<size_t>(g.size()));
                for (auto& v : rho0) v = static_cast<long>(rng() % static_cast<unsigned long>(m));
                TwoCochain c = TwoCochain::zero(g.size(), m);
                for (long x = 0; x < g.size(); ++x)
                    for (long y = 0; y < g.size(); ++y)
                        c.set(x, y, rho0[static_cast<size_t>(x)] + rho0[static_cast<size_t>(y)] -
                                        rho0[static_cast<size_t>(g.mul(x, y))]);
                // Normalized because rho0 enters through its coboundary only
                // when rho0(e) = 0; enforce that.
                long shift = rho0[0];
                for (long x = 0; x < g.size(); ++x)
                    for (long y = 0; y < g.size(); ++y)
                        c.set(x, y, c.at(x, y) + 0 * shift);
                REQUIRE(two_cocycle_verify(g, c));
                auto rho = two_coboundary_test(g, c);
                REQUIRE(rho.has_value());
                for (long x = 0; x < g.size(); ++x)
                    for (long y = 0; y < g.size(); ++y)
                        CHECK(((*rho)[static_cast<size_t>(x)] + (*rho)[static_cast<size_t>(y)] -
                               (*rho)[static_cast<size_t>(g.mul(x, y))] - c.at(x, y)) %
                                  m ==
                              0);
            }
        }
    }
    SUBCASE("agrees with exhaustive enumeration on small groups") {
        std::mt19937 rng(31);
        for (const FiniteGroup& g : {FiniteGroup::enumerate(2, {{1, 0}}), cyclic(3), klein}) {
            for (long m : {2L, 3L}) {
                for (int trial = 0; trial < 6; ++trial) {
                    // Random normalized cochain, filtered to cocycles.
                    TwoCochain c = TwoCochain::zero(g.size(), m);
                    for (long x = 1; x < g.size(); ++x)
                        for (long y = 1; y < g.size(); ++y)
                            c.set(x, y, static_cast<long>(rng() % static_cast<unsigned long>(m)));
                    if (!two_cocycle_verify(g, c)) continue;
                    CHECK(two_coboundary_test(g, c).has_value() == coboundary_exhaustive(g, c));
                }
            }
        }
    }
    SUBCASE("antisymmetrization pairing is coboundary-invariant on abelian groups") {
        std::mt19937 rng(77);
        for (const FiniteGroup& g : {klein, cyclic(4), cyclic(8), FiniteGroup::direct_product(cyclic(2), cyclic(4))}) {
            REQUIRE(g.size() <= 8);
            long m = 4;
            TwoCochain c = pauli_cochain(klein, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}); // placeholder zero
            c = TwoCochain::zero(g.size(), m);
            // Build a bilinear-type cocycle to have something nontrivial:
            // c(x,y) = w(x)1 * w(y)2 using BFS word parities when two
            // generators exist, else zero.
            if (g.generators().size() >= 2) {
                for (long x = 0; x < g.size(); ++x)
                    for (long y = 0; y < g.size(); ++y) {
                        long a = 0, b = 0;
                        for (int s : g.word(x))
                            if (s == 0) ++a;
                        for (int s : g.word(y))
                            if (s == 1) ++b;
                        c.set(x, y, a * b);
                    }
                if (!two_cocycle_verify(g, c)) c = TwoCochain::zero(g.size(), m);
            }
            REQUIRE(two_cocycle_verify(g, c));
            // Add a random coboundary.
            std::vector<long> rho0(static_cast<size_t>(g.size()));
            for (auto& v : rho0) v = static_cast<long>(rng() % static_cast<unsigned long>(m));
            rho0[0] = 0;
            TwoCochain cb = c;
            for (long x = 0; x < g.size(); ++x)
                for (long y = 0; y < g.size(); ++y)
                    cb.set(x, y, c.at(x, y) + rho0[static_cast<size_t>(x)] +
                                     rho0[static_cast<size_t>(y)] -
                                     rho0[static_cast<size_t>(g.mul(x, y))]);
            REQUIRE(two_cocycle_verify(g, cb));
            for (long x = 0; x < g.size(); ++x)
                for (long y = 0; y < g.size(); ++y) {
                    long lhs = (c.at(x, y) - c.at(y, x)) % m;
                    long rhs = (cb.at(x, y) - cb.at(y, x)) % m;
                    CHECK((lhs - rhs) % m == 0);
                }
        }
    }
}

TEST_CASE("direct products") {
    FiniteGroup z2a5 = FiniteGroup::direct_product(cyclic(2), alternating5());
    CHECK(z2a5.size() == 120);
    CHECK(class_sizes(z2a5).size() == 10);
}
