#pragma once

// Alternating binomial-ratio sums and their closed forms, plus the two
// integral-derived relations tying them to the c(n,k)-weighted Chebyshev
// sums.  Everything is an exact rational computation.

#include "fibcheb/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fibcheb {

// sum_{k=0}^{n} (-1)^k C(n+m, 2k+delta) / C(n,k); n, m >= 0, delta in {0,1}.
Rational chu_guo_lhs(long long n, long long m, int delta);

// The printed closed forms, under the same (-1)^k convention as
// chu_guo_lhs (the m = 2..4 displays are printed with (-1)^{k+1}, so their
// values flip sign here):
//   m=0: n+1 - (n/2) sum 1/C(n,k)        (n >= 0)
//   m=1: 2 - sum 1/C(n,k)                (n >= 0)
//   m=2: -2/n                            (n >= 1)
//   m=3: -2(n-3)/(n(n-1))                (n >= 2)
//   m=4: -2(n^2-7n+16)/((n-2)(n-1)n)     (n >= 3)
Rational chu_guo_closed(long long n, long long m);

// For 0 < n+m <= 2n+1:
//   lhs = sum_k (-2)^k / ((n+m+k)(n-m+k+2)) * C(n+m+k, n+m-k)/C(n-m+k+1, k)
//   rhs = 1/(2(n+1)(n+m)) * sum_k (-1)^k C(n+m, 2k)/C(n,k)
std::pair<Rational, Rational> comb_relation_A(long long n, long long m);

// The same relation rewritten with four binomial coefficients:
//   lhs = sum_k (-2)^k/(n-m+k+2) * C(n+m+k-1,k)/C(n-m+k+1,k) * C(n+m,k)/C(2k,k)
//   rhs = 1/(2(n+1)) * sum_k (-1)^k C(n+m, 2k)/C(n,k)
std::pair<Rational, Rational> comb_relation_A4(long long n, long long m);

// For m-1 <= n, n+m >= 1, the double-sum companion:
//   lhs = sum_{j} sum_{k} (-2)^{k+j} / ((n+m+k+j)(n-m+j+2))
//         * C(n+m+k+j, n+m-k-j) * C(k+j, j)
//   rhs = (-1)^{n+m}/(2(n+1)(n+m)) * sum_k (-1)^k C(n+m, 2k)/C(n,k)
std::pair<Rational, Rational> comb_relation_B(long long n, long long m);

struct Section5Summary {
    struct Family {
        std::string name;
        long long checked = 0;
        long long failures = 0;
    };
    std::vector<Family> families;
    long long total_checked = 0;
    long long total_failures = 0;
};

// Sweeps relation A, its four-binomial form, relation B over every
// admissible (n, m) with n+m <= max_total, the m = 0 particular display,
// the shifted m = 1..4 example displays, and the closed forms against the
// direct sums.
Section5Summary verify_section5(long long max_total);

}  // namespace fibcheb
