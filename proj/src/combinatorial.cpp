#include "fibcheb/combinatorial.hpp"

#include "fibcheb/sequences.hpp"

namespace fibcheb {

namespace {

Rational inv_binom_sum(long long n) {
    Rational acc(0);
    for (long long k = 0; k <= n; ++k) acc += make_rational(Integer(1), binom(n, k));
    return acc;
}

// sum_k (-1)^k C(n+m, 2k)/C(n,k), the right-side kernel shared by all
// three relations.
Rational kernel_sum(long long n, long long m) {
    Rational acc(0);
    for (long long k = 0; k <= n; ++k)
        acc += rat_pow(Rational(-1), k) * make_rational(binom(n + m, 2 * k), binom(n, k));
    return acc;
}

}  // namespace

Rational chu_guo_lhs(long long n, long long m, int delta) {
    if (n < 0 || m < 0 || (delta != 0 && delta != 1))
        throw UsageError("chu_guo_lhs requires n, m >= 0 and delta in {0,1}");
    Rational acc(0);
    int sign = 1;
    for (long long k = 0; k <= n; ++k) {
        acc += to_rational(sign) * make_rational(binom(n + m, 2 * k + delta), binom(n, k));
        sign = -sign;
    }
    return acc;
}

Rational chu_guo_closed(long long n, long long m) {
    switch (m) {
        case 0:
            if (n < 0) break;
            return to_rational(n + 1) - to_rational(n) / 2 * inv_binom_sum(n);
        case 1:
            if (n < 0) break;
            return Rational(2) - inv_binom_sum(n);
        case 2:
            if (n < 1) break;
            return make_rational(Integer(-2), to_integer(n));
        case 3:
            if (n < 2) break;
            return make_rational(to_integer(-2 * (n - 3)), to_integer(n * (n - 1)));
        case 4:
            if (n < 3) break;
            return make_rational(to_integer(-2 * (n * n - 7 * n + 16)),
                                 to_integer((n - 2) * (n - 1) * n));
        default:
            throw UsageError("chu_guo_closed knows m in 0..4 only");
    }
    throw UsageError("chu_guo_closed: n below the validity threshold for this m");
}

std::pair<Rational, Rational> comb_relation_A(long long n, long long m) {
    if (n < 0 || m < 0 || n + m < 1 || n + m > 2 * n + 1)
        throw UsageError("comb_relation_A requires 0 < n+m <= 2n+1");
    Rational lhs(0);
    Rational wk(1);
    for (long long k = 0; k <= n + m; ++k) {
        lhs += wk * make_rational(binom(n + m + k, n + m - k),
                                  to_integer((n + m + k) * (n - m + k + 2)) *
                                      binom(n - m + k + 1, k));
        wk *= -2;
    }
    Rational rhs = kernel_sum(n, m) / to_rational(2 * (n + 1) * (n + m));
    return {lhs, rhs};
}

std::pair<Rational, Rational> comb_relation_A4(long long n, long long m) {
    if (n < 0 || m < 0 || n + m < 1 || n + m > 2 * n + 1)
        throw UsageError("comb_relation_A4 requires 0 < n+m <= 2n+1");
    Rational lhs(0);
    Rational wk(1);
    for (long long k = 0; k <= n + m; ++k) {
        Rational ratio1 = make_rational(binom(n + m + k - 1, k),
                                        to_integer(n - m + k + 2) * binom(n - m + k + 1, k));
        Rational ratio2 = make_rational(binom(n + m, k), binom(2 * k, k));
        lhs += wk * ratio1 * ratio2;
        wk *= -2;
    }
    Rational rhs = kernel_sum(n, m) / to_rational(2 * (n + 1));
    return {lhs, rhs};
}

std::pair<Rational, Rational> comb_relation_B(long long n, long long m) {
    if (n < 0 || m < 0 || m - 1 > n || n + m < 1)
        throw UsageError("comb_relation_B requires m-1 <= n and n+m >= 1");
    Rational lhs(0);
    for (long long j = 0; j <= n + m; ++j) {
        for (long long k = 0; k <= n + m - j; ++k) {
            Rational w = rat_pow(Rational(-2), k + j);
            lhs += w * make_rational(binom(n + m + k + j, n + m - k - j) * binom(k + j, j),
                                     to_integer((n + m + k + j) * (n - m + j + 2)));
        }
    }
    Rational rhs = to_rational(parity_sign(n + m)) * kernel_sum(n, m) /
                   to_rational(2 * (n + 1) * (n + m));
    return {lhs, rhs};
}

namespace {

// The m = 0 particular display preceding the closed-form catalogue.
bool check_m0_display(long long n) {
    Rational lhs(0), wk(1);
    for (long long k = 0; k <= n; ++k) {
        lhs += wk * make_rational(binom(n, k),
                                  to_integer((n + k) * (n + k + 1) * (n + k + 2)) *
                                      binom(2 * k, k));
        wk *= -2;
    }
    Rational rhs = make_rational(Integer(1), to_integer(2 * n * (n + 1))) -
                   inv_binom_sum(n) / to_rational(4 * (n + 1) * (n + 1));
    return lhs == rhs;
}

// The shifted example displays for m = 1..4, printed right sides.
bool check_example_display(long long n, long long m) {
    Rational lhs = comb_relation_A(n, m).first;
    Rational rhs;
    switch (m) {
        case 1:
            rhs = (Rational(2) - inv_binom_sum(n)) / to_rational(2 * (n + 1) * (n + 1));
            break;
        case 2:
            rhs = make_rational(Integer(-1), to_integer(n * (n + 1) * (n + 2)));
            break;
        case 3:
            rhs = make_rational(to_integer(3 - n), to_integer((n - 1) * n * (n + 1) * (n + 3)));
            break;
        case 4:
            rhs = make_rational(to_integer(-(n * n) + 7 * n - 16),
                                to_integer((n - 2) * (n - 1) * n * (n + 1) * (n + 4)));
            break;
        default:
            throw UsageError("no example display for this m");
    }
    return lhs == rhs;
}

}  // namespace

Section5Summary verify_section5(long long max_total) {
    if (max_total < 1) throw UsageError("verify_section5 requires max_total >= 1");
    Section5Summary out;
    out.families.reserve(16);

    auto& fa = out.families.emplace_back(Section5Summary::Family{"relation-A", 0, 0});
    auto& fa4 = out.families.emplace_back(Section5Summary::Family{"relation-A4", 0, 0});
    auto& fb = out.families.emplace_back(Section5Summary::Family{"relation-B", 0, 0});
    for (long long n = 0; n <= max_total; ++n) {
        for (long long m = 0; n + m <= max_total; ++m) {
            if (n + m >= 1 && n + m <= 2 * n + 1) {
                auto [la, ra] = comb_relation_A(n, m);
                ++fa.checked;
                if (la != ra) ++fa.failures;
                auto [l4, r4] = comb_relation_A4(n, m);
                ++fa4.checked;
                if (l4 != r4) ++fa4.failures;
            }
            if (n + m >= 1 && m - 1 <= n) {
                auto [lb, rb] = comb_relation_B(n, m);
                ++fb.checked;
                if (lb != rb) ++fb.failures;
            }
        }
    }

    auto& f0 = out.families.emplace_back(Section5Summary::Family{"m0-display", 0, 0});
    for (long long n = 1; n <= max_total; ++n) {
        ++f0.checked;
        if (!check_m0_display(n)) ++f0.failures;
    }

    for (long long m = 1; m <= 4; ++m) {
        auto& fm = out.families.emplace_back(
            Section5Summary::Family{"example-m" + std::to_string(m), 0, 0});
        for (long long n = m - 1; n + m <= max_total; ++n) {  // n >= m-1: denominators
            ++fm.checked;
            if (!check_example_display(n, m)) ++fm.failures;
        }
    }

    auto& fc = out.families.emplace_back(Section5Summary::Family{"closed-forms", 0, 0});
    for (long long m = 0; m <= 4; ++m) {
        long long lo = m <= 1 ? 0 : m - 1;
        for (long long n = lo; n <= max_total; ++n) {
            ++fc.checked;
            if (chu_guo_lhs(n, m, 0) != chu_guo_closed(n, m)) ++fc.failures;
        }
    }

    for (const auto& f : out.families) {
        out.total_checked += f.checked;
        out.total_failures += f.failures;
    }
    return out;
}

}  // namespace fibcheb
