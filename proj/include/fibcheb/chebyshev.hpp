#pragma once

// Chebyshev polynomials of both kinds: exact coefficient form, recurrence
// and binomial-representation evaluation over any tower field, and the
// even/odd-part reductions that evaluate T_{2n}(x), U_{2n}(x) and
// x U_{2n-1}(x) as functions of s = x^2.  The reductions keep arguments
// like sqrt(alpha^3)/2 inside Q(sqrt5) where x itself would need a second
// radical.

#include "fibcheb/algebra.hpp"
#include "fibcheb/poly.hpp"

namespace fibcheb {

enum class ChebKind { T, U };

// Exact coefficient vector via the three-term recurrence; n >= 0.
Poly cheb_poly(ChebKind kind, long long n);

// Iterative recurrence evaluation.  U_{-1} := 0 is exposed (n = -1 with
// kind U); any other negative n is a usage error.
Rational cheb_eval(ChebKind kind, long long n, const Rational& x);
QuadElem cheb_eval(ChebKind kind, long long n, const QuadElem& x);

// The explicit binomial representations; must agree with cheb_eval.
Rational cheb_rep_eval(ChebKind kind, long long n, const Rational& x);
QuadElem cheb_rep_eval(ChebKind kind, long long n, const QuadElem& x);

// Radical-free evaluation in s = x^2:
//   T2n     -> T_{2n}(x) = T_n(2s - 1)            (n >= 0)
//   xU2nm1  -> x U_{2n-1}(x)                      (n >= 1)
//   U2n     -> U_{2n}(x)                          (n >= 0)
// The odd part and the even U part come from a paired recurrence
//   g_m = 2 s e_{m-1} - g_{m-1},  e_m = 2 g_m - e_{m-1}
// with g_m = x U_{2m-1}(x), e_m = U_{2m}(x).
enum class EvenForm { T2n, xU2nm1, U2n };
Rational cheb_eval_even(EvenForm form, long long n, const Rational& s);
QuadElem cheb_eval_even(EvenForm form, long long n, const QuadElem& s);

// True iff T_n(T_m(x)) = T_{nm}(x); n, m >= 0.
bool cheb_compose_check(long long n, long long m, const Rational& x);

}  // namespace fibcheb
