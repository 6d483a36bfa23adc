#pragma once

// Shorthands shared by the catalog translation units.  Every catalogued sum
// is written with these so the transcription stays close to the printed
// display: F/L for the sequences, C for binomials, cc/dd for the two
// binomial weights, sp(e) = (-1)^e computed via parity.

#include "fibcheb/chebyshev.hpp"
#include "fibcheb/identities.hpp"
#include "fibcheb/sequences.hpp"

namespace fibcheb::cat {

inline Rational rat(long long v) { return to_rational(v); }
inline Rational frac(long long a, long long b) {
    return make_rational(to_integer(a), to_integer(b));
}
inline Integer F(long long i) { return fib(i); }
inline Integer L(long long i) { return lucas(i); }
inline Integer C(long long a, long long b) { return binom(a, b); }
inline Rational cc(long long n, long long k) { return coeff_c(n, k); }
inline Rational dd(long long n, long long k) { return coeff_d(n, k); }
inline int sp(long long e) { return parity_sign(e); }

// base^e as a rational, integer base, any integer exponent.
inline Rational ripow(const Integer& base, long long e) {
    if (e >= 0) return Rational(int_pow(base, static_cast<unsigned long>(e)));
    if (base == 0) throw ArithmeticError("0 raised to a negative power");
    return make_rational(Integer(1), int_pow(base, static_cast<unsigned long>(-e)));
}

// --- Q(sqrt5) ---------------------------------------------------------
inline const TowerPtr& T5() { return Tower::sqrt5(); }
inline QuadElem q5(Rational r) { return QuadElem::from_rational(T5(), std::move(r)); }
inline QuadElem q5(long long v) { return q5(rat(v)); }
inline const QuadElem& S5() {
    static const QuadElem e = sqrt5_elem();
    return e;
}
inline const QuadElem& A() {
    static const QuadElem e = golden().first;
    return e;
}
inline const QuadElem& B() {
    static const QuadElem e = golden().second;
    return e;
}

// --- Q(i) --------------------------------------------------------------
inline const TowerPtr& TI() { return Tower::gauss(); }
inline QuadElem qi(Rational r) { return QuadElem::from_rational(TI(), std::move(r)); }
inline const QuadElem& I() {
    static const QuadElem e = gauss_i();
    return e;
}

// --- desk grid defaults --------------------------------------------------
inline ParamRange rn0() { return {"n", 0, 24}; }
inline ParamRange rn1() { return {"n", 1, 24}; }
inline ParamRange rp() { return {"p", -6, 6}; }
inline ParamRange rq() { return {"q", -6, 6}; }
inline ParamRange rt() { return {"t", -4, 4}; }
inline ParamRange rm(long long lo = 0, long long hi = 4) { return {"m", lo, hi}; }
inline ParamRange rs() { return {"s", -5, 5}; }
inline ParamRange rx() { return {"x", -5, 5}; }
inline ParamRange rsg() { return {"sg", 0, 1}; }

}  // namespace fibcheb::cat
