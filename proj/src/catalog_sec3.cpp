#include "catalog_util.hpp"

// Catalog, part 3: the derivative-weight sums (k/(n+k) in place of n/(n+k)),
// the U_n evaluation lemmas, and their Fibonacci/Lucas consequences.  Values
// whose printed arguments carry sqrt(alpha^5/8) or i sqrt5 F_p/2 are
// evaluated through the s = x^2 reductions so everything stays in Q or
// Q(sqrt5); only the Gaussian evaluation lemma itself runs in Q(i).

namespace fibcheb::cat {

namespace {

IdentityRecord& add(std::vector<IdentityRecord>& out) {
    out.emplace_back();
    return out.back();
}

// sum_{k=1}^{n} w^k d(n,k) base^{k-1}, all rational.
Rational d_sum_pow(long long n, const Rational& w, const Rational& base) {
    Rational acc(0), pw(1), wk = w;
    for (long long k = 1; k <= n; ++k) {
        acc += wk * dd(n, k) * pw;
        pw *= base;
        wk *= w;
    }
    return acc;
}

void build_u_masters(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "u.main5.upper";
        e.anchor = "sum_{k>=1} (-2)^k d(n,k) (1-x)^{k-1} = -U_{n-1}(x)";
        e.params = {rn1(), rx()};
        e.lhs = [](const Pt& pt) { return QuadElem(d_sum_pow(pt.n, rat(-2), rat(1 - pt.x))); };
        e.rhs = [](const Pt& pt) {
            return QuadElem(-cheb_eval(ChebKind::U, pt.n - 1, rat(pt.x)));
        };
        e.poly_checkable = true;
    }
    {
        auto& e = add(out);
        e.id = "u.main5.lower";
        e.anchor = "sum_{k>=1} (-2)^k d(n,k) (1+x)^{k-1} = U_{n-1}(x)";
        e.note = "printed lower sign fails for odd n (already at n = 3); differentiating the "
                 "(1+x)^k master sum forces (-1)^n U_{n-1}(x), which is also what the later "
                 "(-5)^{k-1} and composed-argument displays use";
        e.params = {rn1(), rx()};
        e.status = EntryStatus::TypoSuspect;
        e.lhs = [](const Pt& pt) { return QuadElem(d_sum_pow(pt.n, rat(-2), rat(1 + pt.x))); };
        e.rhs = [](const Pt& pt) {
            return QuadElem(cheb_eval(ChebKind::U, pt.n - 1, rat(pt.x)));
        };
        e.corrected_lhs = e.lhs;
        e.corrected_rhs = [](const Pt& pt) {
            return QuadElem(rat(sp(pt.n)) * cheb_eval(ChebKind::U, pt.n - 1, rat(pt.x)));
        };
        e.poly_checkable = true;
    }
    {
        auto& e = add(out);
        e.id = "u.main6";
        e.anchor = "sum_{k>=1} 4^k d(n,k) (x^2-1)^{k-1} = U_{2n-1}(x)/x";
        e.params = {rn1(), rx()};
        e.lhs = [](const Pt& pt) {
            return QuadElem(d_sum_pow(pt.n, rat(4), rat(pt.x * pt.x - 1)));
        };
        e.rhs = [](const Pt& pt) {
            // U_{2n-1} is odd, so the quotient by x is again a polynomial.
            Poly quot = cheb_poly(ChebKind::U, 2 * pt.n - 1).shift_down(1);
            return QuadElem(quot.eval(rat(pt.x)));
        };
        e.poly_checkable = true;
    }
    {
        auto& e = add(out);
        e.id = "u.main7";
        e.anchor = "sum_{k>=1} (-4)^k d(n,k) x^{2k} = (-1)^n x U_{2n-1}(x)";
        e.params = {rn1(), rx()};
        e.lhs = [](const Pt& pt) {
            Rational x2 = rat(pt.x * pt.x);
            return QuadElem(x2 * d_sum_pow(pt.n, rat(-4), x2));
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem(rat(sp(pt.n) * pt.x) * cheb_eval(ChebKind::U, 2 * pt.n - 1, rat(pt.x)));
        };
        e.poly_checkable = true;
    }
    {
        auto& e = add(out);
        e.id = "u.f2n.1";
        e.anchor = "sum_{k>=1} d(n,k) = F_{2n}/2";
        e.params = {rn1()};
        e.lhs = [](const Pt& pt) { return QuadElem(d_sum_pow(pt.n, rat(1), rat(1))); };
        e.rhs = [](const Pt& pt) { return QuadElem(Rational(F(2 * pt.n)) / 2); };
    }
    {
        auto& e = add(out);
        e.id = "u.f2n.2";
        e.anchor = "sum_{k>=1} (-5)^{k-1} d(n,k) = (-1)^{n-1} F_{2n}/2";
        e.params = {rn1()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 1; k <= pt.n; ++k) {
                acc += wk * dd(pt.n, k);
                wk *= -5;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem(rat(sp(pt.n - 1)) * Rational(F(2 * pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "u.l3k";
        e.anchor = "sum_{k>=1} (-1)^{k-1} d(n,k) L_{3(k-1)} = (1-(-1)^n) L_n/2";
        e.params = {rn1()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 1; k <= pt.n; ++k)
                acc += rat(sp(k - 1)) * dd(pt.n, k) * Rational(L(3 * (k - 1)));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem((Rational(1) - rat(sp(pt.n))) * Rational(L(pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "u.compose";
        e.anchor = "sum_{k>=1} (-2)^{k-1} d(n,k) (1 -+ T_m(x))^{k-1} = "
                   "(+-1)^{n-1} U_{nm-1}(x)/(2 U_{m-1}(x))";
        e.constraints = "m >= 1, U_{m-1}(x) != 0; sg 0 upper sign";
        e.params = {rn1(), rm(1, 4), rx(), rsg()};
        e.admissible = [](const Pt& pt) { return !(pt.x == 0 && pt.m % 2 == 0); };
        e.lhs = [](const Pt& pt) {
            Rational tm = cheb_eval(ChebKind::T, pt.m, rat(pt.x));
            Rational base = pt.sg == 0 ? Rational(Rational(1) - tm) : Rational(Rational(1) + tm);
            Rational acc(0), pw(1), wk(1);
            for (long long k = 1; k <= pt.n; ++k) {
                acc += wk * dd(pt.n, k) * pw;
                pw *= base;
                wk *= -2;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = cheb_eval(ChebKind::U, pt.n * pt.m - 1, rat(pt.x));
            Rational den = cheb_eval(ChebKind::U, pt.m - 1, rat(pt.x));
            Rational sign = pt.sg == 0 ? Rational(1) : rat(sp(pt.n - 1));
            return QuadElem(sign * num / (Rational(2) * den));
        };
    }
}

void build_lem5_thm13(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "lem5.1";
        e.anchor = "U_n(L_p/2) = F_{p(n+1)}/F_p, p even";
        e.constraints = "p even, p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0 && pt.p % 2 == 0; };
        e.lhs = [](const Pt& pt) {
            return QuadElem(cheb_eval(ChebKind::U, pt.n, Rational(L(pt.p)) / 2));
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem(make_rational(F(pt.p * (pt.n + 1)), F(pt.p)));
        };
    }
    {
        auto& e = add(out);
        e.id = "lem5.2";
        e.anchor = "U_n(i L_p/2) = i^n F_{p(n+1)}/F_p, p odd (checked in s = x^2 = -L_p^2/4)";
        e.constraints = "p odd";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p % 2 != 0; };
        e.lhs = [](const Pt& pt) {
            Rational s = Rational(-L(pt.p) * L(pt.p)) / 4;
            if (pt.n % 2 == 0) return QuadElem(cheb_eval_even(EvenForm::U2n, pt.n / 2, s));
            return QuadElem(cheb_eval_even(EvenForm::xU2nm1, (pt.n + 1) / 2, s));
        };
        e.rhs = [](const Pt& pt) {
            Rational ratio = make_rational(F(pt.p * (pt.n + 1)), F(pt.p));
            if (pt.n % 2 == 0) return QuadElem(rat(sp(pt.n / 2)) * ratio);
            // odd n: both sides multiplied by x; i^{n+1} = (-1)^{(n+1)/2}
            return QuadElem(rat(sp((pt.n + 1) / 2)) * Rational(L(pt.p)) * ratio / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "lem5.3";
        e.anchor = "U_n(rt5 F_p/2) = L_{p(n+1)}/L_p (p odd, n even), F_p F_{p(n+1)} F_p/L_p "
                   "(p odd, n odd)";
        e.note = "the odd-n case as printed is dimensionally off next to its siblings and fails "
                 "the grid; the Binet-like evaluation gives rt5 F_{p(n+1)}/L_p, which passes";
        e.constraints = "p odd";
        e.params = {rn1(), rp()};
        e.tower = TowerKind::Sqrt5;
        e.status = EntryStatus::TypoSuspect;
        e.admissible = [](const Pt& pt) { return pt.p % 2 != 0; };
        e.lhs = [](const Pt& pt) {
            QuadElem arg = S5() * q5(Rational(F(pt.p)) / 2);
            return cheb_eval(ChebKind::U, pt.n, arg);
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 == 0) return q5(make_rational(L(pt.p * (pt.n + 1)), L(pt.p)));
            Integer fp = F(pt.p);
            return q5(make_rational(fp * F(pt.p * (pt.n + 1)) * fp, L(pt.p)));
        };
        e.corrected_lhs = e.lhs;
        e.corrected_rhs = [](const Pt& pt) {
            if (pt.n % 2 == 0) return q5(make_rational(L(pt.p * (pt.n + 1)), L(pt.p)));
            return S5() * q5(make_rational(F(pt.p * (pt.n + 1)), L(pt.p)));
        };
    }
    {
        auto& e = add(out);
        e.id = "lem5.4";
        e.anchor = "U_n(i rt5 F_p/2) = i^n L_{p(n+1)}/L_p (p, n even), i^n rt5 F_{p(n+1)}/L_p "
                   "(p even, n odd); checked in s = x^2 = -5F_p^2/4";
        e.constraints = "p even";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p % 2 == 0; };
        e.lhs = [](const Pt& pt) {
            Rational s = Rational(-5 * F(pt.p) * F(pt.p)) / 4;
            if (pt.n % 2 == 0) return QuadElem(cheb_eval_even(EvenForm::U2n, pt.n / 2, s));
            return QuadElem(cheb_eval_even(EvenForm::xU2nm1, (pt.n + 1) / 2, s));
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 == 0)
                return QuadElem(rat(sp(pt.n / 2)) *
                                make_rational(L(pt.p * (pt.n + 1)), L(pt.p)));
            // odd n: multiplied through by x; x * i^n rt5 F/L = (-1)^{(n+1)/2} 5 F_p F/(2 L_p)
            return QuadElem(rat(sp((pt.n + 1) / 2)) *
                            make_rational(5 * F(pt.p) * F(pt.p * (pt.n + 1)), 2 * L(pt.p)));
        };
    }
    {
        auto& e = add(out);
        e.id = "thm13.lucas";
        e.anchor = "sum_{k>=1} (-1)^{(p-1)(n-k)} d(n,k) L_p^{2k-1} = F_{2np}/(2 F_p)";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Integer lp = L(pt.p), lp2 = lp * lp;
            Rational acc(0);
            Integer odd_pow = lp;  // L_p^{2k-1}
            for (long long k = 1; k <= pt.n; ++k) {
                acc += rat(sp((pt.p - 1) * (pt.n - k))) * dd(pt.n, k) * Rational(odd_pow);
                odd_pow *= lp2;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem(make_rational(F(2 * pt.n * pt.p), 2 * F(pt.p)));
        };
    }
    {
        auto& e = add(out);
        e.id = "thm13.fib";
        e.anchor = "sum_{k>=1} (-1)^{p(n-k)} d(n,k) 5^{k-1} F_p^{2k-1} = F_{2np}/(2 L_p)";
        e.params = {rn1(), rp()};
        e.lhs = [](const Pt& pt) {
            Integer fp = F(pt.p), step = 5 * fp * fp;
            Rational acc(0);
            Integer w = fp;  // 5^{k-1} F_p^{2k-1}
            for (long long k = 1; k <= pt.n; ++k) {
                acc += rat(sp(pt.p * (pt.n - k))) * dd(pt.n, k) * Rational(w);
                w *= step;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem(make_rational(F(2 * pt.n * pt.p), 2 * L(pt.p)));
        };
    }
}

void build_lem6_thm14_16(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "lem6.1";
        e.anchor = "rt(5/(2a)) U_{2n-1}(rt(a^5/8)) = 2^n a^n - (-1)^n b^n/2^n; evaluated via "
                   "x U_{2n-1}(x) in s = a^5/8 with prefactor rt(5/(2a)) rt(a^5/8) = rt5 a^2/4";
        e.params = {rn1()};
        e.tower = TowerKind::Sqrt5;
        e.lhs = [](const Pt& pt) {
            QuadElem s = A().pow(5) * q5(frac(1, 8));
            QuadElem pref = S5() * A() * A() * q5(frac(1, 4));
            return pref * cheb_eval_even(EvenForm::xU2nm1, pt.n, s) / s;
        };
        e.rhs = [](const Pt& pt) {
            return q5(ripow(2, pt.n)) * A().pow(pt.n) -
                   q5(rat(sp(pt.n)) * ripow(2, -pt.n)) * B().pow(pt.n);
        };
    }
    {
        auto& e = add(out);
        e.id = "lem6.2";
        e.anchor = "rt(5/(2b)) U_{2n-1}(rt(b^5/8)) = 2^n b^n - (-1)^n a^n/2^n; for the negative "
                   "conjugate the coherent root branch makes the prefactor product -rt5 b^2/4";
        e.params = {rn1()};
        e.tower = TowerKind::Sqrt5;
        e.lhs = [](const Pt& pt) {
            QuadElem s = B().pow(5) * q5(frac(1, 8));
            QuadElem pref = -(S5() * B() * B() * q5(frac(1, 4)));
            return pref * cheb_eval_even(EvenForm::xU2nm1, pt.n, s) / s;
        };
        e.rhs = [](const Pt& pt) {
            return q5(ripow(2, pt.n)) * B().pow(pt.n) -
                   q5(rat(sp(pt.n)) * ripow(2, -pt.n)) * A().pow(pt.n);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm14.l";
        e.anchor = "sum_{k>=1} (-2)^{n-k} d(n,k) L_{5k+t} = (4^n F_{t+n+3} - F_{t-n+3})/2";
        e.params = {rn1(), rt()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 1; k <= pt.n; ++k)
                acc += rat(sp(pt.n - k)) * ripow(2, pt.n - k) * dd(pt.n, k) *
                       Rational(L(5 * k + pt.t));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(4, pt.n) * Rational(F(pt.t + pt.n + 3)) -
                           Rational(F(pt.t - pt.n + 3));
            return QuadElem(num / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm14.f";
        e.anchor = "sum_{k>=1} (-2)^{n-k} d(n,k) F_{5k+t} = (4^n L_{t+n+3} - L_{n-t-3})/10";
        e.note = "the reflected index L_{n-t-3} fails whenever n+t is even; the conjugate-pair "
                 "derivation gives L_{t-n+3}, which passes";
        e.params = {rn1(), rt()};
        e.status = EntryStatus::TypoSuspect;
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 1; k <= pt.n; ++k)
                acc += rat(sp(pt.n - k)) * ripow(2, pt.n - k) * dd(pt.n, k) *
                       Rational(F(5 * k + pt.t));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(4, pt.n) * Rational(L(pt.t + pt.n + 3)) -
                           Rational(L(pt.n - pt.t - 3));
            return QuadElem(num / 10);
        };
        e.corrected_lhs = e.lhs;
        e.corrected_rhs = [](const Pt& pt) {
            Rational num = ripow(4, pt.n) * Rational(L(pt.t + pt.n + 3)) -
                           Rational(L(pt.t - pt.n + 3));
            return QuadElem(num / 10);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm15.l";
        e.anchor = "sum_{k>=1} (-1)^{k-1} d(n,k) L_{3k+t} = L_{t+3} L_n/2 (n odd), "
                   "-5 F_{t+3} F_n/2 (n even)";
        e.params = {rn0(), rt()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 1; k <= pt.n; ++k)
                acc += rat(sp(k - 1)) * dd(pt.n, k) * Rational(L(3 * k + pt.t));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 != 0) return QuadElem(Rational(L(pt.t + 3) * L(pt.n)) / 2);
            return QuadElem(Rational(-5 * F(pt.t + 3) * F(pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm15.f";
        e.anchor = "sum_{k>=1} (-1)^{k-1} d(n,k) F_{3k+t} = F_{t+3} L_n/2 (n odd), "
                   "-L_{t+3} F_n/2 (n even)";
        e.params = {rn0(), rt()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 1; k <= pt.n; ++k)
                acc += rat(sp(k - 1)) * dd(pt.n, k) * Rational(F(3 * k + pt.t));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 != 0) return QuadElem(Rational(F(pt.t + 3) * L(pt.n)) / 2);
            return QuadElem(Rational(-L(pt.t + 3) * F(pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm16.l";
        e.anchor = "sum_{k>=1} (-4)^{k-1} d(n,k) L_{k+t} = -L_{t+1} L_{3n}/2 (n odd), "
                   "5 F_{t+1} F_{3n}/2 (n even)";
        e.note = "as printed the weight is off by one factor of -4 (n = 1, t = 0 already fails); "
                 "with (-4)^k the stated right side passes, matching the x = rt(a) derivation";
        e.params = {rn0(), rt()};
        e.status = EntryStatus::TypoSuspect;
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 1; k <= pt.n; ++k) {
                acc += wk * dd(pt.n, k) * Rational(L(k + pt.t));
                wk *= -4;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 != 0) return QuadElem(Rational(-L(pt.t + 1) * L(3 * pt.n)) / 2);
            return QuadElem(Rational(5 * F(pt.t + 1) * F(3 * pt.n)) / 2);
        };
        e.corrected_lhs = [](const Pt& pt) {
            Rational acc(0), wk(-4);
            for (long long k = 1; k <= pt.n; ++k) {
                acc += wk * dd(pt.n, k) * Rational(L(k + pt.t));
                wk *= -4;
            }
            return QuadElem(acc);
        };
        e.corrected_rhs = e.rhs;
    }
    {
        auto& e = add(out);
        e.id = "thm16.f";
        e.anchor = "sum_{k>=1} (-4)^{k-1} d(n,k) F_{k+t} = -F_{t+1} L_{3n}/2 (n odd), "
                   "L_{t+1} F_{3n}/2 (n even)";
        e.note = "same missing factor of -4 as the Lucas companion; (-4)^k passes";
        e.params = {rn0(), rt()};
        e.status = EntryStatus::TypoSuspect;
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 1; k <= pt.n; ++k) {
                acc += wk * dd(pt.n, k) * Rational(F(k + pt.t));
                wk *= -4;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 != 0) return QuadElem(Rational(-F(pt.t + 1) * L(3 * pt.n)) / 2);
            return QuadElem(Rational(L(pt.t + 1) * F(3 * pt.n)) / 2);
        };
        e.corrected_lhs = [](const Pt& pt) {
            Rational acc(0), wk(-4);
            for (long long k = 1; k <= pt.n; ++k) {
                acc += wk * dd(pt.n, k) * Rational(F(k + pt.t));
                wk *= -4;
            }
            return QuadElem(acc);
        };
        e.corrected_rhs = e.rhs;
    }
}

void build_u_ratio_thms(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "u.thm17";
        e.anchor = "sum_{k>=1} (-1)^{n-k} d(n,k) (2L_{2p}/(rt5 F_{2p}))^{2k} = "
                   "(-1)^p L_{2p}(L_p^{4n} - 5^{2n} F_p^{4n})/(4 (rt5 F_{2p})^{2n})";
        e.constraints = "p != 0";
        e.params = {rn0(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Rational base = make_rational(4 * L(2 * pt.p) * L(2 * pt.p),
                                          5 * F(2 * pt.p) * F(2 * pt.p));
            Rational acc(0), pw = base;
            for (long long k = 1; k <= pt.n; ++k) {
                acc += rat(sp(pt.n - k)) * dd(pt.n, k) * pw;
                pw *= base;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational diff = ripow(L(pt.p), 4 * pt.n) - ripow(5, 2 * pt.n) * ripow(F(pt.p), 4 * pt.n);
            Rational den = Rational(4) * ripow(5, pt.n) * ripow(F(2 * pt.p), 2 * pt.n);
            return QuadElem(rat(sp(pt.p)) * Rational(L(2 * pt.p)) * diff / den);
        };
    }
    {
        auto& e = add(out);
        e.id = "lem.kc1e6ox";
        e.anchor = "U_{n-1}(L_{2p}/(rt5 F_{2p})) = (-1)^p (L_p^{2n} - 5^n F_p^{2n})/"
                   "(4 (rt5 F_{2p})^{n-1})";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.tower = TowerKind::Sqrt5;
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            QuadElem arg = q5(Rational(L(2 * pt.p))) / (S5() * q5(Rational(F(2 * pt.p))));
            return cheb_eval(ChebKind::U, pt.n - 1, arg);
        };
        e.rhs = [](const Pt& pt) {
            Rational diff = ripow(L(pt.p), 2 * pt.n) - ripow(5, pt.n) * ripow(F(pt.p), 2 * pt.n);
            QuadElem den = q5(4) * (S5() * q5(Rational(F(2 * pt.p)))).pow(pt.n - 1);
            return q5(rat(sp(pt.p)) * diff) / den;
        };
    }
    {
        auto& e = add(out);
        e.id = "u.thm18";
        e.anchor = "sum_{k>=1} (-1)^{(p-q)(n-k)} d(n,k) (F_{p+q}F_{p-q}/(F_p F_q))^{2k} = "
                   "(F_p^{4n} - F_q^{4n}) F_{p+q}F_{p-q} / (2 (F_p^2 + (-1)^{p-q} F_q^2) "
                   "F_q^{2n} F_p^{2n})";
        e.constraints = "p != 0, q != 0, F_p^2 + (-1)^{p-q} F_q^2 != 0";
        e.params = {rn0(), rp(), rq()};
        e.admissible = [](const Pt& pt) {
            if (pt.p == 0 || pt.q == 0) return false;
            Integer den = F(pt.p) * F(pt.p) + sp(pt.p - pt.q) * F(pt.q) * F(pt.q);
            return den != 0;
        };
        e.lhs = [](const Pt& pt) {
            Rational base = rat_pow(
                make_rational(F(pt.p + pt.q) * F(pt.p - pt.q), F(pt.p) * F(pt.q)), 2);
            Rational acc(0), pw = base;
            for (long long k = 1; k <= pt.n; ++k) {
                acc += rat(sp((pt.p - pt.q) * (pt.n - k))) * dd(pt.n, k) * pw;
                pw *= base;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Integer dd2 = F(pt.p) * F(pt.p) + sp(pt.p - pt.q) * F(pt.q) * F(pt.q);
            Rational num = (ripow(F(pt.p), 4 * pt.n) - ripow(F(pt.q), 4 * pt.n)) *
                           Rational(F(pt.p + pt.q) * F(pt.p - pt.q));
            Rational den = Rational(2 * dd2) * ripow(F(pt.q), 2 * pt.n) *
                           ripow(F(pt.p), 2 * pt.n);
            return QuadElem(num / den);
        };
    }
    {
        auto& e = add(out);
        e.id = "lem.ormac9f";
        e.anchor = "U_{n-1}(i^{p-q+1} F_{p+q}F_{p-q}/(2 F_q F_p)) = "
                   "(F_p^{2n} + (-1)^{p-q} F_q^{2n})/(F_q^{n-1} F_p^{n-1} "
                   "(F_p^2 + (-1)^{p-q} F_q^2))";
        e.note = "as printed the Gaussian prefactor is dropped: the matching T_n evaluation in "
                 "the same family carries i^{n(p-q+1)}, and the U analogue needs "
                 "i^{(p-q+1)(n-1)} together with the numerator sign (-1)^{n(p-q+1)+1} on "
                 "F_q^{2n}; with those restored it passes (and coincides with the printed form "
                 "when p-q = 3 mod 4)";
        e.constraints = "p != 0, q != 0, F_p^2 + (-1)^{p-q} F_q^2 != 0";
        e.params = {rn1(), rp(), rq()};
        e.tower = TowerKind::Gauss;
        e.status = EntryStatus::TypoSuspect;
        e.admissible = [](const Pt& pt) {
            if (pt.p == 0 || pt.q == 0) return false;
            Integer den = F(pt.p) * F(pt.p) + sp(pt.p - pt.q) * F(pt.q) * F(pt.q);
            return den != 0;
        };
        e.lhs = [](const Pt& pt) {
            QuadElem arg = I().pow(pt.p - pt.q + 1) *
                           qi(make_rational(F(pt.p + pt.q) * F(pt.p - pt.q),
                                            2 * F(pt.q) * F(pt.p)));
            return cheb_eval(ChebKind::U, pt.n - 1, arg);
        };
        e.rhs = [](const Pt& pt) {
            Integer dd2 = F(pt.p) * F(pt.p) + sp(pt.p - pt.q) * F(pt.q) * F(pt.q);
            Rational num = ripow(F(pt.p), 2 * pt.n) +
                           rat(sp(pt.p - pt.q)) * ripow(F(pt.q), 2 * pt.n);
            Rational den = ripow(F(pt.q), pt.n - 1) * ripow(F(pt.p), pt.n - 1) * Rational(dd2);
            return qi(num / den);
        };
        e.corrected_lhs = e.lhs;
        e.corrected_rhs = [](const Pt& pt) {
            Integer dd2 = F(pt.p) * F(pt.p) + sp(pt.p - pt.q) * F(pt.q) * F(pt.q);
            Rational num = ripow(F(pt.p), 2 * pt.n) +
                           rat(sp(pt.n * (pt.p - pt.q + 1) + 1)) * ripow(F(pt.q), 2 * pt.n);
            Rational den = ripow(F(pt.q), pt.n - 1) * ripow(F(pt.p), pt.n - 1) * Rational(dd2);
            return I().pow((pt.p - pt.q + 1) * (pt.n - 1)) * qi(num / den);
        };
    }
}

void build_thm19(std::vector<IdentityRecord>& out) {
    struct Spec {
        const char* id;
        bool lucas_prod;  // L_p L_{p+q} product weights
        long long five;   // exponent offset for the 5 power: 0 none, 1 -> 5^k, -1 -> 5^{k-1}
        bool fib_sum;     // summand sequence
        bool fib_rhs;     // right-side inner sequence
    };
    static constexpr Spec specs[] = {
        {"thm19.1", false, 0, false, false},
        {"thm19.2", false, 0, true, true},
        {"thm19.3", true, 1, true, false},
        {"thm19.4", true, -1, false, true},
    };
    for (const Spec& s : specs) {
        auto& e = add(out);
        e.id = s.id;
        e.anchor = std::string("sum_{k>=1} (-1)^{q(n-k)} d(n,k) ") +
                   (s.lucas_prod ? "L_p^{n-k} L_{p+q}^{n-k}" : "F_p^{n-k} F_{p+q}^{n-k}") +
                   " F_q^{2k-1}" +
                   (s.five == 0 ? "" : (s.five == 1 ? " 5^k" : " 5^{k-1}")) + " " +
                   (s.fib_sum ? "F" : "L") + "_{(2p+q)k+t} = pair expression over 2(" +
                   (s.lucas_prod ? "L" : "F") + "-denominator)";
        e.constraints = s.lucas_prod ? "" : "not (p = 0 and q = 0)";
        e.params = {rn1(), rp(), rq(), rt()};
        const bool lucas_prod = s.lucas_prod;
        const long long five = s.five;
        const bool fib_sum = s.fib_sum;
        const bool fib_rhs = s.fib_rhs;
        if (!s.lucas_prod)
            e.admissible = [](const Pt& pt) { return !(pt.p == 0 && pt.q == 0); };
        e.lhs = [lucas_prod, five, fib_sum](const Pt& pt) {
            Integer prod = lucas_prod ? L(pt.p + pt.q) * L(pt.p) : F(pt.p + pt.q) * F(pt.p);
            std::vector<Integer> ppow(static_cast<std::size_t>(pt.n) + 1);
            ppow[0] = 1;
            for (long long i = 1; i <= pt.n; ++i)
                ppow[static_cast<std::size_t>(i)] = ppow[static_cast<std::size_t>(i - 1)] * prod;
            Integer fq = F(pt.q), fq2 = fq * fq;
            Rational acc(0);
            Integer fqpow = fq;  // F_q^{2k-1}
            Rational fivew = five == 0 ? Rational(1) : (five == 1 ? Rational(5) : Rational(1));
            for (long long k = 1; k <= pt.n; ++k) {
                Integer val = fib_sum ? F(k * (2 * pt.p + pt.q) + pt.t)
                                      : L(k * (2 * pt.p + pt.q) + pt.t);
                acc += rat(sp((pt.n - k) * pt.q)) * dd(pt.n, k) * fivew *
                       Rational(ppow[static_cast<std::size_t>(pt.n - k)] * fqpow * val);
                fqpow *= fq2;
                if (five != 0) fivew *= 5;
            }
            return QuadElem(acc);
        };
        e.rhs = [lucas_prod, fib_rhs](const Pt& pt) {
            Integer up = lucas_prod ? L(pt.p + pt.q) : F(pt.p + pt.q);
            Integer dn = lucas_prod ? L(pt.p) : F(pt.p);
            auto val = [&](long long idx) { return fib_rhs ? F(idx) : L(idx); };
            Integer D = up * up + dn * up * L(pt.q) + sp(pt.q) * dn * dn;
            Rational num =
                ripow(up, 2 * pt.n) * (Rational(up * val(pt.p + pt.t + pt.q * pt.n)) +
                                       Rational(dn * val(pt.q + pt.p + pt.t + pt.q * pt.n))) -
                ripow(dn, 2 * pt.n) * (Rational(up * val(pt.p + pt.t - pt.q * pt.n)) +
                                       Rational(dn * val(pt.p + pt.q + pt.t - pt.q * pt.n)));
            return QuadElem(num / Rational(2 * D));
        };
    }
}

}  // namespace

void build_sec3(std::vector<IdentityRecord>& out) {
    build_u_masters(out);
    build_lem5_thm13(out);
    build_lem6_thm14_16(out);
    build_u_ratio_thms(out);
    build_thm19(out);
}

}  // namespace fibcheb::cat
