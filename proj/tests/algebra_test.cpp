#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcheb/algebra.hpp"
#include "fibcheb/sequences.hpp"

#include <cstdint>
#include <vector>

using namespace fibcheb;

namespace {

// Deterministic small-rational generator (plain LCG, fixed seed).
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational small_rational() {
        long long num = range(-9, 9);
        long long den = range(1, 7);
        return make_rational(to_integer(num), to_integer(den));
    }
    QuadElem random_elem(const TowerPtr& t) {
        QuadElem acc = QuadElem::from_rational(t, small_rational());
        for (int lvl = 0; lvl < t->depth(); ++lvl)
            acc = acc + QuadElem::root(t, lvl) * QuadElem::from_rational(t, small_rational());
        return acc;
    }
};

}  // namespace

TEST_CASE("rational construction is canonical") {
    CHECK(make_rational(Integer(2), Integer(4)) == Rational(1, 2));
    CHECK(make_rational(Integer(3), Integer(-6)) == Rational(-1, 2));
    CHECK(make_rational(Integer(0), Integer(5)) == 0);
    CHECK(rat_str(make_rational(Integer(0), Integer(5))) == "0");
    CHECK(rat_str(make_rational(Integer(3), Integer(-6))) == "-1/2");
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), ArithmeticError);
}

TEST_CASE("rational text round-trip") {
    for (const char* s : {"0", "1", "-1", "1/2", "-11/2", "123456789123456789/2"}) {
        CHECK(rat_str(parse_rational(s)) == s);
    }
    CHECK_THROWS_AS(parse_rational(""), UsageError);
    CHECK_THROWS_AS(parse_rational("1/"), UsageError);
    CHECK_THROWS_AS(parse_rational("x"), UsageError);
    CHECK_THROWS_AS(parse_rational("1.5"), UsageError);
}

TEST_CASE("golden conjugates") {
    auto [alpha, beta] = golden();
    CHECK(alpha.coeffs()[0] == Rational(1, 2));
    CHECK(alpha.coeffs()[1] == Rational(1, 2));
    CHECK(alpha - beta == sqrt5_elem());
    CHECK(alpha + beta == QuadElem::from_rational(Tower::sqrt5(), Rational(1)));
    CHECK(alpha * beta == QuadElem::from_rational(Tower::sqrt5(), Rational(-1)));
}

TEST_CASE("quadratic arithmetic basics") {
    QuadElem one = QuadElem::from_rational(Tower::sqrt5(), Rational(1));
    QuadElem fifth_rt5 = QuadElem::from_rational(Tower::sqrt5(), Rational(1, 5)) * sqrt5_elem();
    CHECK(one / sqrt5_elem() == fifth_rt5);
    CHECK_THROWS_AS(one / (one - one), ArithmeticError);
}

TEST_CASE("quad_pow against recurrence-built Fibonacci values") {
    // Independent oracle: iterate the defining recurrences up to index 5.
    long long f0 = 0, f1 = 1, l0 = 2, l1 = 1;
    for (int i = 2; i <= 5; ++i) {
        long long f2 = f1 + f0, l2 = l1 + l0;
        f0 = f1;
        f1 = f2;
        l0 = l1;
        l1 = l2;
    }
    CHECK(f1 == 5);
    CHECK(l1 == 11);
    auto [alpha, beta] = golden();
    // alpha^5 = (11 + 5 rt5)/2
    QuadElem expect = (QuadElem::from_rational(Tower::sqrt5(), to_rational(l1)) +
                       sqrt5_elem() * QuadElem::from_rational(Tower::sqrt5(), to_rational(f1))) *
                      QuadElem::from_rational(Tower::sqrt5(), Rational(1, 2));
    CHECK(alpha.pow(5) == expect);
    CHECK(alpha.pow(0) == QuadElem::from_rational(Tower::sqrt5(), Rational(1)));
    // alpha beta = -1, so alpha^{-1} = -beta.
    CHECK(alpha.pow(-1) == -beta);
    QuadElem zero = QuadElem::from_rational(Tower::sqrt5(), Rational(0));
    CHECK_THROWS_AS(zero.pow(-1), ArithmeticError);
}

TEST_CASE("Binet form cross-check for |n| <= 200") {
    auto [alpha, beta] = golden();
    const TowerPtr& t = Tower::sqrt5();
    QuadElem half = QuadElem::from_rational(t, Rational(1, 2));
    for (long long n = -200; n <= 200; ++n) {
        QuadElem rhs = (QuadElem::from_rational(t, Rational(lucas(n))) +
                        sqrt5_elem() * QuadElem::from_rational(t, Rational(fib(n)))) *
                       half;
        CHECK(alpha.pow(n) == rhs);
    }
    (void)beta;
}

TEST_CASE("field axioms hold exactly in nested towers") {
    Rng rng;
    const TowerPtr& q5 = Tower::sqrt5();
    // Second level: adjoin sqrt(2 + sqrt5) on top of Q(sqrt5).
    QuadElem inner = QuadElem::from_rational(q5, Rational(2)) + QuadElem::root(q5, 0);
    TowerPtr q5s = Tower::adjoin(q5, inner);
    for (const TowerPtr& t : {q5, q5s}) {
        QuadElem one = QuadElem::from_rational(t, Rational(1));
        for (int iter = 0; iter < 25; ++iter) {
            QuadElem x = rng.random_elem(t);
            QuadElem y = rng.random_elem(t);
            QuadElem z = rng.random_elem(t);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            if (!x.is_zero()) CHECK(x * (one / x) == one);
        }
    }
}

TEST_CASE("pow is additive in the exponent") {
    Rng rng;
    auto [alpha, beta] = golden();
    QuadElem x = alpha + alpha;  // 1 + rt5, invertible
    for (int iter = 0; iter < 40; ++iter) {
        long long m = rng.range(-50, 50);
        long long n = rng.range(-50, 50);
        CHECK(x.pow(m + n) == x.pow(m) * x.pow(n));
    }
    (void)beta;
}

TEST_CASE("element serialization round-trips structurally") {
    auto [alpha, beta] = golden();
    std::vector<QuadElem> values = {
        QuadElem(Rational(0)),
        QuadElem(Rational(-7, 3)),
        alpha,
        alpha.pow(9) / (beta + beta),
        gauss_i() * QuadElem::from_rational(Tower::gauss(), Rational(3, 2)),
    };
    // A depth-2 value over the radicand 2 + sqrt5.
    const TowerPtr& q5 = Tower::sqrt5();
    TowerPtr q5s =
        Tower::adjoin(q5, QuadElem::from_rational(q5, Rational(2)) + QuadElem::root(q5, 0));
    values.push_back(alpha.lift(q5s) + QuadElem::root(q5s, 1) * beta.lift(q5s));
    for (const QuadElem& v : values) {
        QuadElem back = parse_elem(v.str());
        CHECK(back == v);
        CHECK(back.str() == v.str());
    }
    CHECK(alpha.str() == "1/2 + 1/2*rt(5)");
    CHECK(QuadElem(Rational(-7, 3)).str() == "-7/3");
}

TEST_CASE("cross-tower operations are usage errors") {
    auto [alpha, beta] = golden();
    QuadElem plain(Rational(1, 2));
    CHECK_THROWS_AS(alpha + plain, UsageError);
    CHECK_THROWS_AS((void)(alpha == gauss_i()), UsageError);
    CHECK(alpha + plain.lift(Tower::sqrt5()) ==
          alpha + QuadElem::from_rational(Tower::sqrt5(), Rational(1, 2)));
    CHECK_THROWS_AS(alpha.lift(Tower::rationals()), UsageError);
    (void)beta;
}

TEST_CASE("tower construction rejects bad radicands") {
    CHECK_THROWS_AS(Tower::adjoin(Tower::rationals(), QuadElem(Rational(4))), UsageError);
    CHECK_THROWS_AS(Tower::adjoin(Tower::rationals(), QuadElem(Rational(9, 4))), UsageError);
    CHECK_THROWS_AS(Tower::adjoin(Tower::rationals(), QuadElem(Rational(0))), UsageError);
    CHECK_NOTHROW(Tower::adjoin(Tower::rationals(), QuadElem(Rational(-4))));
    CHECK_NOTHROW(Tower::adjoin(Tower::rationals(), QuadElem(Rational(8))));
}

TEST_CASE("integer helpers") {
    CHECK(int_pow(Integer(3), 0) == 1);
    CHECK(int_pow(Integer(-2), 5) == -32);
    CHECK(rat_pow(Rational(0), 0) == 1);
    CHECK(rat_pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(rat_pow(Rational(2), -3) == Rational(1, 8));
    CHECK_THROWS_AS(rat_pow(Rational(0), -1), ArithmeticError);
    CHECK(parity_sign(-3) == -1);
    CHECK(parity_sign(0) == 1);
    CHECK(is_perfect_square(Integer(49)));
    CHECK(!is_perfect_square(Integer(-4)));
    CHECK(is_rational_square(Rational(9, 4)));
    CHECK(!is_rational_square(Rational(5)));
}
