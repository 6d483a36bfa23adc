#pragma once

// Fibonacci and Lucas numbers over all integer indices, plus the binomial
// weights c(n,k) = n/(n+k) * C(n+k, n-k) and d(n,k) = k/(n+k) * C(n+k, n-k)
// that drive every catalogued sum.

#include "fibcheb/algebra.hpp"

namespace fibcheb {

using SeqIndex = long long;

// F_n for any integer n: fast doubling for n >= 0 (small indices served from
// a shared immutable table), F_{-n} = (-1)^{n-1} F_n.
Integer fib(SeqIndex n);

// L_n for any integer n; L_{-n} = (-1)^n L_n.
Integer lucas(SeqIndex n);

// C(n, k) with the zero-extension convention:
// 0 when k < 0 or k > n.  Requires n >= 0.
Integer binom(long long n, long long k);

// c(n,k) = n/(n+k) * C(n+k, n-k), with c(0,0) = 1 (the raw formula is 0/0
// but the n = 0 instance of the T_n sums forces the single term to 1).
// Requires n >= 0 and 0 <= k <= n.
Rational coeff_c(long long n, long long k);

// d(n,k) = k/(n+k) * C(n+k, n-k); d(n,0) = 0.  Requires n >= 1, 0 <= k <= n.
Rational coeff_d(long long n, long long k);

}  // namespace fibcheb
