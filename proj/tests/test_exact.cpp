#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chiforge/exact/cyclo_matrix.hpp"
#include "chiforge/exact/cyclotomic.hpp"
#include "chiforge/exact/int_matrix.hpp"
#include "chiforge/exact/numtheory.hpp"

#include <cmath>
#include <random>

using namespace chiforge;
using namespace chiforge::exact;

TEST_CASE("rational parsing and QmodZ wrap") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
    CHECK(QmodZ(make_rational(7, 4)) == QmodZ(3, 4));
    CHECK(QmodZ(make_rational(-1, 4)) == QmodZ(3, 4));
    CHECK((QmodZ(1, 2) + QmodZ(3, 4)) == QmodZ(1, 4));
    CHECK(QmodZ(1, 3).order() == 3);
    CHECK(QmodZ().is_zero());
}

TEST_CASE("cyclotomic canonical forms") {
    // zeta_4^2 = -1 lands in order 1.
    Cyclotomic i4 = Cyclotomic::zeta(4);
    CHECK((i4 * i4) == Cyclotomic(-1));
    CHECK((i4 * i4).order() == 1);

    // zeta_3 + zeta_3^2 = -1.
    CHECK((Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2)) == Cyclotomic(-1));

    // zeta_8 + zeta_8^7 is sqrt(2): its square is exactly 2, and the numeric
    // embedding agrees.
    Cyclotomic r2 = Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
    CHECK((r2 * r2) == Cyclotomic(2));
    auto z = embed_numeric(r2, 10);
    CHECK(std::abs(z.real() - std::sqrt(2.0)) < 1e-10);
    CHECK(std::abs(z.imag()) < 1e-10);

    // zeta_6 has conductor 3.
    CHECK(Cyclotomic::zeta(6).order() == 3);
    CHECK(Cyclotomic::zeta(6) == -Cyclotomic::zeta(3, 2));
}

TEST_CASE("cyclotomic field operations") {
    Cyclotomic x = Cyclotomic::zeta(5) + Cyclotomic(make_rational(2, 3));
    CHECK((x * x.inverse()) == Cyclotomic(1));
    CHECK(x.conj().conj() == x);
    CHECK((x + (-x)).is_zero());
    // conj is a ring map.
    Cyclotomic y = Cyclotomic::zeta(8, 3) - Cyclotomic(5);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
}

TEST_CASE("canonicalization respects ring structure on random values") {
    std::mt19937 rng(20240811);
    auto random_value = [&]() {
        long e = static_cast<long>(rng() % 24) + 1;
        std::vector<std::pair<long, Rational>> terms;
        int nterms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < nterms; ++t) {
            long k = static_cast<long>(rng() % static_cast<unsigned long>(e));
            long num = static_cast<long>(rng() % 11) - 5;
            long den = 1 + static_cast<long>(rng() % 4);
            terms.emplace_back(k, make_rational(num, den));
        }
        return Cyclotomic::from_terms(e, terms);
    };
    for (int trial = 0; trial < 60; ++trial) {
        Cyclotomic x = random_value(), y = random_value();
        CHECK(cyclo_canonical(x) == x); // idempotent
        CHECK((x + y) == (y + x));
        CHECK((x * y) == (y * x));
        CHECK(((x + y) * (x - y)) == (x * x - y * y));
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
}

TEST_CASE("root of unity detection") {
    CHECK(Cyclotomic::zeta(12, 5).root_of_unity_order() == 12);
    CHECK(Cyclotomic(-1).root_of_unity_order() == 2);
    CHECK(Cyclotomic(1).root_of_unity_order() == 1);
    CHECK(!Cyclotomic(2).root_of_unity_order().has_value());
    // 1 + zeta_3 = -zeta_3^2 is a root of unity of order 6.
    CHECK((Cyclotomic::zeta(3) + Cyclotomic(1)).root_of_unity_order() == 6);
    CHECK(!(Cyclotomic::zeta(3) + Cyclotomic(2)).root_of_unity_order().has_value());
}

TEST_CASE("cyclotomic literal round trip") {
    Cyclotomic x = Cyclotomic::from_terms(12, {{1, make_rational(1, 2)}, {7, make_rational(-2, 3)}});
    CHECK(Cyclotomic::parse(x.str()) == x);
    CHECK(Cyclotomic::parse("c(4)[1]=1") == Cyclotomic::zeta(4));
    CHECK(Cyclotomic::parse("-7/3") == Cyclotomic(make_rational(-7, 3)));
    CHECK(Cyclotomic::parse("c(8)[1]=1/1,[7]=1") == Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7));
    CHECK_THROWS_AS(Cyclotomic::parse("c(x)"), InputError);
}

TEST_CASE("embed_numeric basics") {
    CHECK(std::abs(embed_numeric(Cyclotomic(1), 10) - std::complex<double>(1, 0)) < 1e-10);
    CHECK(std::abs(embed_numeric(Cyclotomic::zeta(4), 10) - std::complex<double>(0, 1)) < 1e-10);
    auto z = embed_numeric(Cyclotomic(1) + Cyclotomic::zeta(4), 10);
    CHECK(std::abs(z - std::complex<double>(1, 1)) < 1e-10);
    CHECK(std::abs(std::abs(z) - std::sqrt(2.0)) < 1e-10);
    CHECK_THROWS_AS(embed_numeric(Cyclotomic(1), 0), InputError);
}

TEST_CASE("sqrt_integer") {
    for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 9L, 12L, 16L, 30L, 60L}) {
        Cyclotomic s = sqrt_integer(Integer(n));
        CHECK((s * s) == Cyclotomic(n));
        CHECK(std::abs(embed_numeric(s, 8).real() - std::sqrt(double(n))) < 1e-6);
        CHECK(std::abs(embed_numeric(s, 8).imag()) < 1e-6);
    }
}

TEST_CASE("smith normal form examples") {
    SUBCASE("identity") {
        auto s = smith_normal_form(IntMatrix::identity(2));
        CHECK(s.d == IntMatrix::identity(2));
    }
    SUBCASE("2x2 with divisibility") {
        IntMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(0, 1) = 4;
        m.at(1, 0) = 6;
        m.at(1, 1) = 8;
        auto s = smith_normal_form(m);
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8.
        CHECK(s.d.at(0, 0) == 2);
        CHECK(s.d.at(1, 1) == 4);
        CHECK(s.u * m * s.v == s.d);
    }
    SUBCASE("zero matrix") {
        IntMatrix z(3, 2);
        auto s = smith_normal_form(z);
        CHECK(s.d == z);
    }
}

TEST_CASE("smith normal form randomized properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        long rows = 1 + static_cast<long>(rng() % 8);
        long cols = 1 + static_cast<long>(rng() % 8);
        IntMatrix m(rows, cols);
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j)
                m.at(i, j) = static_cast<long>(rng() % 101) - 50;
        auto s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);
        CHECK(s.d.is_diagonal());
        long n = std::min(rows, cols);
        for (long i = 0; i + 1 < n; ++i) {
            CHECK(s.d.at(i, i) >= 0);
            if (s.d.at(i + 1, i + 1) != 0) {
                REQUIRE(s.d.at(i, i) != 0);
                CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
            }
        }
    }
}

namespace {
// Brute-force oracle for solve_affine_mod over small search spaces.
bool brute_force_solvable(const IntMatrix& a, const std::vector<Integer>& b, long m) {
    long n = a.cols();
    std::vector<long> x(n, 0);
    while (true) {
        bool ok = true;
        for (long i = 0; i < a.rows() && ok; ++i) {
            Integer acc(0);
            for (long j = 0; j < n; ++j) acc += a.at(i, j) * x[j];
            acc -= b[static_cast<size_t>(i)];
            Integer r;
            mpz_mod(r.get_mpz_t(), acc.get_mpz_t(), Integer(m).get_mpz_t());
            ok = r == 0;
        }
        if (ok) return true;
        long k = 0;
        while (k < n && ++x[k] == m) x[k++] = 0;
        if (k == n) return false;
    }
}
} // namespace

TEST_CASE("solve_affine_mod") {
    SUBCASE("identity system") {
        IntMatrix a = IntMatrix::identity(3);
        std::vector<Integer> b{Integer(5), Integer(1), Integer(3)};
        auto x = solve_affine_mod(a, b, Integer(7));
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 5);
        CHECK((*x)[1] == 1);
        CHECK((*x)[2] == 3);
    }
    SUBCASE("parity obstruction: 2x = 1 mod 4") {
        IntMatrix a(1, 1);
        a.at(0, 0) = 2;
        CHECK(!solve_affine_mod(a, {Integer(1)}, Integer(4)).has_value());
    }
    SUBCASE("construct-then-solve recovers a valid solution") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 30; ++trial) {
            long rows = 1 + static_cast<long>(rng() % 3);
            long cols = 1 + static_cast<long>(rng() % 3);
            long m = 2 + static_cast<long>(rng() % 5);
            IntMatrix a(rows, cols);
            for (long i = 0; i < rows; ++i)
                for (long j = 0; j < cols; ++j) a.at(i, j) = static_cast<long>(rng() % 13) - 6;
            std::vector<Integer> x0(cols);
            for (long j = 0; j < cols; ++j) x0[static_cast<size_t>(j)] = static_cast<long>(rng() % m);
            std::vector<Integer> b(rows, Integer(0));
            for (long i = 0; i < rows; ++i) {
                for (long j = 0; j < cols; ++j) b[static_cast<size_t>(i)] += a.at(i, j) * x0[static_cast<size_t>(j)];
                mpz_mod(b[static_cast<size_t>(i)].get_mpz_t(), b[static_cast<size_t>(i)].get_mpz_t(),
                        Integer(m).get_mpz_t());
            }
            auto x = solve_affine_mod(a, b, Integer(m));
            REQUIRE(x.has_value());
            for (long i = 0; i < rows; ++i) {
                Integer acc(0);
                for (long j = 0; j < cols; ++j) acc += a.at(i, j) * (*x)[static_cast<size_t>(j)];
                acc -= b[static_cast<size_t>(i)];
                Integer r;
                mpz_mod(r.get_mpz_t(), acc.get_mpz_t(), Integer(m).get_mpz_t());
                CHECK(r == 0);
            }
        }
    }
    SUBCASE("agrees with brute force on small systems") {
        std::mt19937 rng(123);
        for (int trial = 0; trial < 60; ++trial) {
            long rows = 1 + static_cast<long>(rng() % 3);
            long cols = 1 + static_cast<long>(rng() % 3);
            long m = 2 + static_cast<long>(rng() % 5); // m <= 6
            IntMatrix a(rows, cols);
            for (long i = 0; i < rows; ++i)
                for (long j = 0; j < cols; ++j) a.at(i, j) = static_cast<long>(rng() % 9) - 4;
            std::vector<Integer> b(rows);
            for (long i = 0; i < rows; ++i) b[static_cast<size_t>(i)] = static_cast<long>(rng() % m);
            CHECK(solve_affine_mod(a, b, Integer(m)).has_value() == brute_force_solvable(a, b, m));
        }
    }
    SUBCASE("dimension mismatch is an input error") {
        CHECK_THROWS_AS(solve_affine_mod(IntMatrix::identity(2), {Integer(1)}, Integer(4)),
                        InputError);
    }
}

TEST_CASE("cyclotomic linear algebra") {
    CycloMatrix m(2, 2);
    m.at(0, 0) = Cyclotomic(1);
    m.at(0, 1) = Cyclotomic::zeta(4);
    m.at(1, 0) = Cyclotomic::zeta(4);
    m.at(1, 1) = Cyclotomic(1);
    CHECK(rank(m) == 2);
    CHECK(det(m) == Cyclotomic(2));
    CHECK((m * m.inverse()).is_identity());
    CHECK(m.dagger().at(0, 1) == Cyclotomic::zeta(4, 3)); // conj(i) = -i

    CycloMatrix s(2, 2);
    s.at(0, 0) = Cyclotomic(1);
    s.at(0, 1) = Cyclotomic(1);
    s.at(1, 0) = Cyclotomic(1);
    s.at(1, 1) = Cyclotomic(1);
    CHECK(rank(s) == 1);
    auto ns = nullspace(s);
    REQUIRE(ns.size() == 1);
    CHECK((ns[0][0] + ns[0][1]).is_zero());

    auto x = solve(m, {Cyclotomic(1), Cyclotomic(0)});
    REQUIRE(x.has_value());
    CHECK((m * [&] {
              CycloMatrix v(2, 1);
              v.at(0, 0) = (*x)[0];
              v.at(1, 0) = (*x)[1];
              return v;
          }()).at(0, 0) == Cyclotomic(1));
}

TEST_CASE("number theory helpers") {
    CHECK(euler_phi(12) == 4);
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(next_prime_in_class(15, 30, 1) == 31);
    CHECK(next_prime_in_class(38, 60, 1) == 61);
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(3, 7) == -1);
    long g = primitive_root(13);
    CHECK(pow_mod(g, 12, 13) == 1);
    CHECK(pow_mod(g, 6, 13) != 1);
    CHECK(pow_mod(g, 4, 13) != 1);
}
