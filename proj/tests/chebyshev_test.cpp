#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcheb/chebyshev.hpp"
#include "fibcheb/sequences.hpp"

using namespace fibcheb;

namespace {

const Rational kPoints[] = {Rational(0), Rational(1), Rational(-2), Rational(3, 2),
                            Rational(-7, 5)};

QuadElem q5(Rational r) { return QuadElem::from_rational(Tower::sqrt5(), std::move(r)); }

}  // namespace

TEST_CASE("coefficient form") {
    CHECK(cheb_poly(ChebKind::T, 0) == Poly(Rational(1)));
    CHECK(cheb_poly(ChebKind::T, 3) == Poly({Rational(0), Rational(-3), Rational(0), Rational(4)}));
    CHECK(cheb_poly(ChebKind::U, 2) == Poly({Rational(-1), Rational(0), Rational(4)}));
    CHECK(cheb_poly(ChebKind::T, 3).str() == "4*x^3 + -3*x^1");
    CHECK_THROWS_AS(cheb_poly(ChebKind::T, -1), UsageError);
}

TEST_CASE("recurrence evaluation") {
    // T_4(3/2) = L_8/2 with L_8 from plain iteration: 2,1,3,4,7,11,18,29,47.
    long long l0 = 2, l1 = 1;
    for (int i = 2; i <= 8; ++i) {
        long long l2 = l0 + l1;
        l0 = l1;
        l1 = l2;
    }
    CHECK(l1 == 47);
    CHECK(cheb_eval(ChebKind::T, 4, Rational(3, 2)) == Rational(47, 2));
    for (long long n = 0; n <= 50; ++n) CHECK(cheb_eval(ChebKind::T, n, Rational(1)) == 1);
    // T_3(alpha) = 4 alpha^3 - 3 alpha = 5 alpha + 4 since alpha^2 = alpha + 1.
    auto [alpha, beta] = golden();
    CHECK(cheb_eval(ChebKind::T, 3, alpha) == q5(Rational(5)) * alpha + q5(Rational(4)));
    CHECK(cheb_eval(ChebKind::U, -1, Rational(7)) == 0);
    CHECK_THROWS_AS(cheb_eval(ChebKind::T, -1, Rational(0)), UsageError);
    (void)beta;
}

TEST_CASE("binomial representation equals the recurrence") {
    for (long long n = 0; n <= 50; ++n) {
        for (const Rational& x : kPoints) {
            CHECK(cheb_rep_eval(ChebKind::T, n, x) == cheb_eval(ChebKind::T, n, x));
            CHECK(cheb_rep_eval(ChebKind::U, n, x) == cheb_eval(ChebKind::U, n, x));
        }
    }
    CHECK(cheb_rep_eval(ChebKind::T, 0, Rational(9)) == 1);
}

TEST_CASE("even and odd part reductions") {
    for (long long n = 0; n <= 30; ++n) {
        CHECK(cheb_eval_even(EvenForm::T2n, n, Rational(1)) == 1);  // x = +-1
        for (const Rational& x : kPoints) {
            Rational s = x * x;
            CHECK(cheb_eval_even(EvenForm::T2n, n, s) == cheb_rep_eval(ChebKind::T, 2 * n, x));
            CHECK(cheb_eval_even(EvenForm::U2n, n, s) == cheb_eval(ChebKind::U, 2 * n, x));
            if (n >= 1)
                CHECK(cheb_eval_even(EvenForm::xU2nm1, n, s) ==
                      x * cheb_eval(ChebKind::U, 2 * n - 1, x));
        }
    }
    // x U_1(x) = 2 x^2 = 2 s.
    CHECK(cheb_eval_even(EvenForm::xU2nm1, 1, Rational(7, 3)) == Rational(14, 3));
    // T_2(sqrt(alpha^3)/2) = rt5/2: the reduction at s = alpha^3/4.
    auto [alpha, beta] = golden();
    QuadElem s = alpha.pow(3) * q5(Rational(1, 4));
    CHECK(cheb_eval_even(EvenForm::T2n, 1, s) == sqrt5_elem() * q5(Rational(1, 2)));
    CHECK_THROWS_AS(cheb_eval_even(EvenForm::xU2nm1, 0, Rational(1)), UsageError);
    (void)beta;
}

TEST_CASE("derivative relation d/dx T_n = n U_{n-1}") {
    CHECK(poly_derivative(cheb_poly(ChebKind::T, 3)) ==
          Rational(3) * cheb_poly(ChebKind::U, 2));
    CHECK(poly_derivative(cheb_poly(ChebKind::T, 1)) == Poly(Rational(1)));
    CHECK(poly_derivative(cheb_poly(ChebKind::T, 0)) == Poly());
    for (long long n = 1; n <= 40; ++n) {
        CHECK(poly_derivative(cheb_poly(ChebKind::T, n)) ==
              to_rational(n) * cheb_poly(ChebKind::U, n - 1));
    }
}

TEST_CASE("first and second kind connections, coefficientwise") {
    const Poly X = Poly::x();
    const Poly ONE(Rational(1));
    for (long long n = 1; n <= 30; ++n) {
        Poly tn1 = cheb_poly(ChebKind::T, n + 1);
        CHECK(tn1 == X * cheb_poly(ChebKind::T, n) -
                         (ONE - X * X) * cheb_poly(ChebKind::U, n - 1));
        CHECK(cheb_poly(ChebKind::U, n + 1) == X * cheb_poly(ChebKind::U, n) + tn1);
    }
}

TEST_CASE("composition laws") {
    const Rational pts[] = {Rational(1, 2), Rational(-3), Rational(2, 7)};
    for (long long n = 0; n <= 8; ++n) {
        for (long long m = 0; m <= 8; ++m) {
            for (const Rational& x : pts) {
                CHECK(cheb_compose_check(n, m, x));
                if (n >= 1 && m >= 1) {
                    // U_{m-1}(T_n(x)) U_{n-1}(x) = U_{mn-1}(x)
                    Rational lhs = cheb_eval(ChebKind::U, m - 1, cheb_eval(ChebKind::T, n, x)) *
                                   cheb_eval(ChebKind::U, n - 1, x);
                    CHECK(lhs == cheb_eval(ChebKind::U, n * m - 1, x));
                }
            }
        }
    }
}

TEST_CASE("Binet-like forms in the adjoined tower") {
    // x rational with x^2 - 1 not a square: work in Q(sqrt(x^2-1)).
    const Rational pts[] = {Rational(3, 2), Rational(-2), Rational(7, 4), Rational(9, 2),
                            Rational(-12, 5)};
    for (const Rational& x : pts) {
        Rational w = x * x - 1;
        REQUIRE(!is_rational_square(w));
        TowerPtr t = Tower::adjoin(Tower::rationals(), QuadElem(w));
        QuadElem root = QuadElem::root(t, 0);
        QuadElem xe = QuadElem::from_rational(t, x);
        QuadElem zp = xe + root, zm = xe - root;
        QuadElem half = QuadElem::from_rational(t, Rational(1, 2));
        for (long long n = 0; n <= 30; ++n) {
            QuadElem tn = (zp.pow(n) + zm.pow(n)) * half;
            CHECK(tn == QuadElem::from_rational(t, cheb_eval(ChebKind::T, n, x)));
            QuadElem un = (zp.pow(n + 1) - zm.pow(n + 1)) / (root + root);
            CHECK(un == QuadElem::from_rational(t, cheb_eval(ChebKind::U, n, x)));
        }
    }
}
