#include "fibcheb/chebyshev.hpp"

#include "fibcheb/sequences.hpp"

namespace fibcheb {

namespace {

Rational zero_like(const Rational&) { return Rational(0); }
Rational const_like(const Rational&, long v) { return Rational(v); }
QuadElem zero_like(const QuadElem& x) { return QuadElem::from_rational(x.tower(), Rational(0)); }
QuadElem const_like(const QuadElem& x, long v) {
    return QuadElem::from_rational(x.tower(), Rational(v));
}

template <class E>
E cheb_eval_impl(ChebKind kind, long long n, const E& x) {
    if (kind == ChebKind::U && n == -1) return zero_like(x);
    if (n < 0) throw UsageError("cheb_eval requires n >= 0 (U also accepts -1)");
    E prev = const_like(x, 1);
    if (n == 0) return prev;
    E xx = x + x;
    E cur = x;
    if (kind == ChebKind::U) cur = xx;
    for (long long i = 2; i <= n; ++i) {
        E next = xx * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Embeds an Integer weight as the element type.
Rational embed_weight(const Integer& v, const Rational&) { return Rational(v); }
QuadElem embed_weight(const Integer& v, const QuadElem& x) {
    return QuadElem::from_rational(x.tower(), Rational(v));
}

template <class E>
E cheb_rep_eval_impl(ChebKind kind, long long n, const E& x) {
    if (n < 0) throw UsageError("cheb_rep_eval requires n >= 0");
    E w = x * x - const_like(x, 1);
    long long half = n / 2;
    std::vector<E> wpow;
    wpow.reserve(static_cast<std::size_t>(half) + 1);
    wpow.push_back(const_like(x, 1));
    for (long long k = 1; k <= half; ++k) wpow.push_back(wpow.back() * w);
    E acc = zero_like(x);
    E xpow = (n % 2 == 0) ? const_like(x, 1) : x;  // x^{n-2k} at k = half
    for (long long k = half; k >= 0; --k) {
        Integer b = (kind == ChebKind::T) ? binom(n, 2 * k) : binom(n + 1, 2 * k + 1);
        acc = acc + embed_weight(b, x) * wpow[static_cast<std::size_t>(k)] * xpow;
        if (k > 0) xpow = xpow * x * x;
    }
    return acc;
}

template <class E>
E cheb_eval_even_impl(EvenForm form, long long n, const E& s) {
    if (form == EvenForm::T2n) {
        if (n < 0) throw UsageError("cheb_eval_even(T2n) requires n >= 0");
        E arg = s + s - const_like(s, 1);
        return cheb_eval_impl(ChebKind::T, n, arg);
    }
    long long steps;
    if (form == EvenForm::xU2nm1) {
        if (n < 1) throw UsageError("cheb_eval_even(xU2nm1) requires n >= 1");
        steps = n;
    } else {
        if (n < 0) throw UsageError("cheb_eval_even(U2n) requires n >= 0");
        steps = n;
    }
    E g = zero_like(s);
    E e = const_like(s, 1);
    E ss = s + s;
    for (long long m = 1; m <= steps; ++m) {
        E g_next = ss * e - g;
        e = g_next + g_next - e;
        g = g_next;
    }
    return (form == EvenForm::xU2nm1) ? g : e;
}

}  // namespace

Poly cheb_poly(ChebKind kind, long long n) {
    if (n < 0) throw UsageError("cheb_poly requires n >= 0");
    Poly prev(Rational(1));
    if (n == 0) return prev;
    Poly cur = (kind == ChebKind::T) ? Poly::x() : Poly::monomial(1, Rational(2));
    Poly twox = Poly::monomial(1, Rational(2));
    for (long long i = 2; i <= n; ++i) {
        Poly next = twox * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational cheb_eval(ChebKind kind, long long n, const Rational& x) {
    return cheb_eval_impl(kind, n, x);
}

QuadElem cheb_eval(ChebKind kind, long long n, const QuadElem& x) {
    return cheb_eval_impl(kind, n, x);
}

Rational cheb_rep_eval(ChebKind kind, long long n, const Rational& x) {
    return cheb_rep_eval_impl(kind, n, x);
}

QuadElem cheb_rep_eval(ChebKind kind, long long n, const QuadElem& x) {
    return cheb_rep_eval_impl(kind, n, x);
}

Rational cheb_eval_even(EvenForm form, long long n, const Rational& s) {
    return cheb_eval_even_impl(form, n, s);
}

QuadElem cheb_eval_even(EvenForm form, long long n, const QuadElem& s) {
    return cheb_eval_even_impl(form, n, s);
}

bool cheb_compose_check(long long n, long long m, const Rational& x) {
    if (n < 0 || m < 0) throw UsageError("cheb_compose_check requires n, m >= 0");
    return cheb_eval(ChebKind::T, n, cheb_eval(ChebKind::T, m, x)) ==
           cheb_eval(ChebKind::T, n * m, x);
}

}  // namespace fibcheb
