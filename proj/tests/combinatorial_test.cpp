#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibcheb/combinatorial.hpp"
#include "fibcheb/sequences.hpp"

using namespace fibcheb;

namespace {

// Test-local oracle: the alternating ratio sum written independently.
Rational oracle_ratio_sum(long long n, long long m, int delta) {
    Rational acc(0);
    for (long long k = 0; k <= n; ++k) {
        Rational term = make_rational(binom(n + m, 2 * k + delta), binom(n, k));
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("alternating ratio sums") {
    CHECK(chu_guo_lhs(1, 0, 0) == 1);
    CHECK(chu_guo_lhs(2, 2, 0) == -1);
    CHECK(chu_guo_lhs(0, 0, 0) == 1);
    CHECK(chu_guo_lhs(3, 1, 1) == oracle_ratio_sum(3, 1, 1));
    CHECK_THROWS_AS(chu_guo_lhs(-1, 0, 0), UsageError);
    CHECK_THROWS_AS(chu_guo_lhs(1, 0, 2), UsageError);
}

TEST_CASE("closed forms match the direct sums on their validity ranges") {
    // The m=1 value at n=1 resolves to 0 on both routes (the closed form
    // evaluates to 2 - (1 + 1) and the direct sum to 1 - 1).
    CHECK(chu_guo_closed(1, 1) == 0);
    CHECK(chu_guo_lhs(1, 1, 0) == 0);
    CHECK(chu_guo_closed(1, 0) == 1);
    CHECK(chu_guo_closed(2, 2) == -1);
    for (long long m = 0; m <= 4; ++m) {
        long long lo = m <= 1 ? 0 : m - 1;
        for (long long n = lo; n <= 40; ++n)
            CHECK(chu_guo_closed(n, m) == oracle_ratio_sum(n, m, 0));
    }
    CHECK_THROWS_AS(chu_guo_closed(0, 2), UsageError);
    CHECK_THROWS_AS(chu_guo_closed(1, 3), UsageError);
    CHECK_THROWS_AS(chu_guo_closed(2, 4), UsageError);
    CHECK_THROWS_AS(chu_guo_closed(10, 5), UsageError);
}

TEST_CASE("relation A") {
    // Frozen from the direct-summation oracle:
    // n=1, m=0: both sides 1/3 - 1/12 = 1/4.
    auto [l10, r10] = comb_relation_A(1, 0);
    CHECK(l10 == Rational(1, 4));
    CHECK(r10 == Rational(1, 4));
    auto [l11, r11] = comb_relation_A(1, 1);
    CHECK(l11 == r11);
    auto [l20, r20] = comb_relation_A(2, 0);
    CHECK(l20 == r20);
    CHECK_THROWS_AS(comb_relation_A(0, 0), UsageError);
    CHECK_THROWS_AS(comb_relation_A(1, 3), UsageError);
}

TEST_CASE("relation A, four-binomial form") {
    auto [l10, r10] = comb_relation_A4(1, 0);
    CHECK(l10 == Rational(1, 4));
    CHECK(r10 == Rational(1, 4));
    auto [l21, r21] = comb_relation_A4(2, 1);
    CHECK(l21 == r21);
    auto [l30, r30] = comb_relation_A4(3, 0);
    CHECK(l30 == r30);
    // Scaling between the two forms: A4 = (n+m) A.
    for (long long n = 1; n <= 8; ++n) {
        for (long long m = 0; m <= n + 1; ++m) {
            if (n + m < 1) continue;
            auto [la, ra] = comb_relation_A(n, m);
            auto [l4, r4] = comb_relation_A4(n, m);
            CHECK(l4 == to_rational(n + m) * la);
            CHECK(r4 == to_rational(n + m) * ra);
        }
    }
}

TEST_CASE("relation B") {
    // Frozen from the direct double-summation oracle: (1,0) gives -1/4.
    auto [l10, r10] = comb_relation_B(1, 0);
    CHECK(l10 == Rational(-1, 4));
    CHECK(r10 == Rational(-1, 4));
    auto [l11, r11] = comb_relation_B(1, 1);
    CHECK(l11 == r11);
    auto [l22, r22] = comb_relation_B(2, 2);
    CHECK(l22 == r22);
    CHECK_THROWS_AS(comb_relation_B(1, 3), UsageError);
}

TEST_CASE("relation A at m = 0 scales to the particular display") {
    // The display preceding the closed-form catalogue, transcribed here
    // independently; relation A at m = 0 is (n+1) times it, on both sides.
    for (long long n = 1; n <= 40; ++n) {
        Rational dl(0), wk(1);
        for (long long k = 0; k <= n; ++k) {
            dl += wk * make_rational(binom(n, k),
                                     to_integer((n + k) * (n + k + 1) * (n + k + 2)) *
                                         binom(2 * k, k));
            wk *= -2;
        }
        Rational inv(0);
        for (long long k = 0; k <= n; ++k) inv += make_rational(Integer(1), binom(n, k));
        Rational dr = make_rational(Integer(1), to_integer(2 * n * (n + 1))) -
                      inv / to_rational(4 * (n + 1) * (n + 1));
        auto [la, ra] = comb_relation_A(n, 0);
        CHECK(la == to_rational(n + 1) * dl);
        CHECK(ra == to_rational(n + 1) * dr);
        CHECK(dl == dr);
    }
}

TEST_CASE("section 5 sweep") {
    Section5Summary s = verify_section5(20);
    CHECK(s.total_failures == 0);
    CHECK(s.families.size() == 9);
    bool saw_m4 = false;
    for (const auto& f : s.families) {
        CHECK(f.failures == 0);
        if (f.name == "example-m4") {
            saw_m4 = true;
            // valid only from n = 3, so n runs 3..16 at max_total 20
            CHECK(f.checked == 14);
        }
    }
    CHECK(saw_m4);
    CHECK_THROWS_AS(verify_section5(0), UsageError);
}
