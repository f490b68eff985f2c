#include <catch2/catch.hpp>

#include <random>

#include "wgcalc/jucys.hpp"

using namespace wgcalc;

TEST_CASE("jucys-murphy element definitions", "[jucys]") {
    CHECK(jucys_murphy(1, 4).is_zero());

    const auto j2 = jucys_murphy(2, 4);
    CHECK(j2.terms().size() == 1);
    CHECK(j2.coefficient(Permutation::transposition(4, 0, 1)) == Rational(1));

    const auto j3 = jucys_murphy(3, 4);
    CHECK(j3.terms().size() == 2);
    CHECK(j3.coefficient(Permutation::transposition(4, 0, 2)) == Rational(1));
    CHECK(j3.coefficient(Permutation::transposition(4, 1, 2)) == Rational(1));

    CHECK_THROWS_AS(jucys_murphy(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(jucys_murphy(0, 4), std::invalid_argument);
}

TEST_CASE("group algebra basics", "[jucys]") {
    const Permutation s = Permutation::from_one_based({2, 3, 1});
    const Permutation t = Permutation::from_one_based({2, 1, 3});
    const auto product = algebra_multiply(GroupAlgebraElement::basis(s),
                                          GroupAlgebraElement::basis(t));
    CHECK(product.terms().size() == 1);
    CHECK(product.coefficient(s.compose(t)) == Rational(1));

    // (1 2)^2 = e in S_2.
    const auto j2 = jucys_murphy(2, 2);
    CHECK(algebra_multiply(j2, j2) ==
          GroupAlgebraElement::basis(Permutation::identity(2)));

    // Zero coefficients are pruned.
    GroupAlgebraElement x(2);
    x.add_term(Permutation::identity(2), Rational(1));
    x.add_term(Permutation::identity(2), Rational(-1));
    CHECK(x.is_zero());

    CHECK_THROWS_AS(algebra_multiply(GroupAlgebraElement(2), GroupAlgebraElement(3)),
                    std::invalid_argument);
}

TEST_CASE("jucys-murphy elements commute", "[jucys]") {
    for (int n = 2; n <= 5; ++n)
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const auto a = jucys_murphy(j, n);
                const auto b = jucys_murphy(k, n);
                CHECK(algebra_multiply(a, b) == algebra_multiply(b, a));
            }
}

TEST_CASE("J_k commutes with the subalgebra fixing k..n", "[jucys]") {
    std::mt19937 rng(47);
    for (int n = 3; n <= 5; ++n)
        for (int k = 2; k <= n; ++k) {
            const auto jk = jucys_murphy(k, n);
            for (int trial = 0; trial < 5; ++trial) {
                // random permutation of the first k-1 slots only
                std::vector<int> img(n);
                std::iota(img.begin(), img.end(), 0);
                std::shuffle(img.begin(), img.begin() + (k - 1), rng);
                const auto sigma = GroupAlgebraElement::basis(Permutation(img));
                CHECK(algebra_multiply(sigma, jk) == algebra_multiply(jk, sigma));
            }
        }
}

TEST_CASE("product of (d + J_k) expands to the cycle-count power", "[jucys]") {
    const auto p1 = product_d_plus_jm(1, 3);
    CHECK(p1.terms().size() == 1);
    CHECK(p1.coefficient(Permutation::identity(1)) == Rational(3));

    const auto p2 = product_d_plus_jm(2, 3);
    CHECK(p2.coefficient(Permutation::identity(2)) == Rational(9));
    CHECK(p2.coefficient(Permutation::transposition(2, 0, 1)) == Rational(3));

    // Coefficient of any 4-cycle at n = 4, d = 2 is d^1 = 2.
    const auto p4 = product_d_plus_jm(4, 2);
    for (const auto& sigma : enumerate_group(4))
        if (sigma.cycle_type() == Partition({4}))
            CHECK(p4.coefficient(sigma) == Rational(2));

    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 5; ++d) {
            const auto product = product_d_plus_jm(n, d);
            for (const auto& sigma : enumerate_group(n))
                CHECK(product.coefficient(sigma) ==
                      Rational(pow_integer(Integer(d), sigma.num_cycles())));
        }
}

TEST_CASE("elementary symmetric polynomials in the J_k", "[jucys]") {
    CHECK(elementary_symmetric_jm(0, 3) ==
          GroupAlgebraElement::basis(Permutation::identity(3)));

    const auto e1 = elementary_symmetric_jm(1, 3);
    CHECK(e1.terms().size() == 3);
    for (const auto& sigma : enumerate_group(3))
        if (sigma.cycle_type() == Partition({2, 1}))
            CHECK(e1.coefficient(sigma) == Rational(1));

    for (int n = 1; n <= 4; ++n) CHECK(elementary_symmetric_jm(n, n).is_zero());

    // Indicator of permutations with exactly n - r cycles.
    for (int n = 1; n <= 5; ++n)
        for (int r = 0; r <= n; ++r) {
            const auto er = elementary_symmetric_jm(r, n);
            for (const auto& sigma : enumerate_group(n)) {
                const Rational expected(sigma.num_cycles() == n - r ? 1 : 0);
                CHECK(er.coefficient(sigma) == expected);
            }
        }
}

TEST_CASE("novak identity report", "[jucys]") {
    const auto r35 = check_novak_identity(3, 5);
    CHECK(r35.product_matches_char_pi);
    CHECK(r35.inverse_checked);
    CHECK(r35.inverse_holds);
    CHECK(r35.pass());

    const auto r42 = check_novak_identity(4, 2);
    CHECK(r42.product_matches_char_pi);
    CHECK_FALSE(r42.inverse_checked);
    CHECK(!r42.skip_reason.empty());
    CHECK(r42.pass());

    const auto r11 = check_novak_identity(1, 1);
    CHECK(r11.pass());
}

TEST_CASE("jucys-murphy eigenvalue bounds", "[jucys]") {
    for (int n = 2; n <= 4; ++n) {
        const auto r1 = jm_eigenvalue_bound_check(1, n);
        CHECK(r1.pass);
        CHECK(r1.min_eigenvalue == Approx(0.0).margin(1e-9));
        CHECK(r1.max_eigenvalue == Approx(0.0).margin(1e-9));
    }

    const auto r23 = jm_eigenvalue_bound_check(2, 3);
    CHECK(r23.pass);
    CHECK(r23.bound == 1.0);

    const auto r44 = jm_eigenvalue_bound_check(4, 4);
    CHECK(r44.pass);
    CHECK(r44.bound == 3.0);
    // J_4 in S_4 actually attains the end of the interval.
    CHECK(r44.max_eigenvalue == Approx(3.0).margin(1e-9));

    CHECK_THROWS_AS(jm_eigenvalue_bound_check(2, 6), std::length_error);
}
