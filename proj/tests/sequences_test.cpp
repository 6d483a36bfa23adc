#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcheb/sequences.hpp"

#include <map>

using namespace fibcheb;

namespace {

// Independent oracle: plain forward/backward iteration of the recurrences,
// never touching the library's fast-doubling path.
struct NaiveSeq {
    std::map<long long, Integer> f, l;
    NaiveSeq(long long lo, long long hi) {
        f[0] = 0;
        f[1] = 1;
        l[0] = 2;
        l[1] = 1;
        for (long long i = 2; i <= hi; ++i) {
            f[i] = f[i - 1] + f[i - 2];
            l[i] = l[i - 1] + l[i - 2];
        }
        for (long long i = -1; i >= lo; --i) {
            f[i] = f[i + 2] - f[i + 1];
            l[i] = l[i + 2] - l[i + 1];
        }
    }
};

}  // namespace

TEST_CASE("stated values") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(-4) == -3);
    CHECK(lucas(0) == 2);
    CHECK(lucas(1) == 1);
    CHECK(lucas(5) == 11);
    CHECK(lucas(-3) == -4);
}

TEST_CASE("fast doubling agrees with naive iteration for |n| <= 1000") {
    NaiveSeq oracle(-1000, 1000);
    for (long long n = -1000; n <= 1000; ++n) {
        CHECK(fib(n) == oracle.f[n]);
        CHECK(lucas(n) == oracle.l[n]);
    }
}

TEST_CASE("fast doubling beyond the internal table") {
    NaiveSeq oracle(0, 2100);
    for (long long n : {1025LL, 1026LL, 1500LL, 2047LL, 2100LL}) {
        CHECK(fib(n) == oracle.f[n]);
        CHECK(lucas(n) == oracle.l[n]);
    }
}

TEST_CASE("addition law F_{m+n} = F_m F_{n+1} + F_{m-1} F_n") {
    for (long long m = -60; m <= 60; m += 3) {
        for (long long n = -60; n <= 60; n += 2) {
            CHECK(fib(m + n) == fib(m) * fib(n + 1) + fib(m - 1) * fib(n));
        }
    }
}

TEST_CASE("binomial coefficients with zero extension") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(7, 0) == 1);
    CHECK(binom(4, -1) == 0);
    CHECK_THROWS_AS(binom(-1, 0), UsageError);
}

TEST_CASE("weight c(n,k)") {
    // (3/4) C(4,2) computed by hand: (3/4) * 6 = 9/2.
    CHECK(coeff_c(3, 1) == Rational(9, 2));
    CHECK(coeff_c(0, 0) == 1);
    for (long long n = 1; n <= 24; ++n) CHECK(coeff_c(n, 0) == 1);
    CHECK_THROWS_AS(coeff_c(3, 4), UsageError);
    CHECK_THROWS_AS(coeff_c(3, -1), UsageError);
    // The three-binomial equivalence c(n,k) = C(n+k-1,k) C(n,k) / C(2k,k).
    for (long long n = 1; n <= 60; ++n) {
        for (long long k = 0; k <= n; ++k) {
            Rational lhs = coeff_c(n, k);
            Rational rhs = make_rational(binom(n + k - 1, k) * binom(n, k), binom(2 * k, k));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("weight d(n,k)") {
    CHECK(coeff_d(2, 1) == 1);  // (1/3) C(3,1)
    CHECK(coeff_d(2, 2) == Rational(1, 2));
    for (long long n = 1; n <= 24; ++n) CHECK(coeff_d(n, 0) == 0);
    CHECK_THROWS_AS(coeff_d(0, 0), UsageError);
    CHECK_THROWS_AS(coeff_d(2, 3), UsageError);
    // d(n,k) = c(n,k) k/n.
    for (long long n = 1; n <= 40; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(coeff_d(n, k) == coeff_c(n, k) * to_rational(k) / to_rational(n));
        }
    }
}

TEST_CASE("L_{2p} -+ 2 case table") {
    for (long long p = -30; p <= 30; ++p) {
        Integer minus = lucas(2 * p) - 2;
        Integer plus = lucas(2 * p) + 2;
        if (p % 2 == 0) {
            CHECK(minus == 5 * fib(p) * fib(p));
            CHECK(plus == lucas(p) * lucas(p));
        } else {
            CHECK(minus == lucas(p) * lucas(p));
            CHECK(plus == 5 * fib(p) * fib(p));
        }
    }
}
