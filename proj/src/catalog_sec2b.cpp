#include "catalog_util.hpp"

// Catalog, part 2: the exact algebraic equivalents of the hyperbolic
// evaluations (the cosh/arctanh right sides are computed as T_n at the
// corresponding algebraic argument), the alternating L_{pk+t}/F_{pk+t}
// families, the squared-ratio sums, the T_{2n} evaluation lemma with golden
// powers under the radical, and the four-parameter product-weight theorem.

namespace fibcheb::cat {

namespace {

IdentityRecord& add(std::vector<IdentityRecord>& out) {
    out.emplace_back();
    return out.back();
}

// sum_{k=0}^{n} w^k c(n,k) L_or_F(stride*k + off) / div^k, exact.
Rational alt_seq_sum(long long n, const Rational& w, bool fibw, long long stride,
                     long long off, const Integer& div) {
    Rational acc(0), wk(1);
    for (long long k = 0; k <= n; ++k) {
        acc += wk * cc(n, k) * Rational(fibw ? F(stride * k + off) : L(stride * k + off));
        wk *= w / Rational(div);
    }
    return acc;
}

void build_lem2_notes(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "lem2.alg";
        e.anchor = "T_n(rt5 F_p/L_p) = ((rt5 F_p - 2)^n + (rt5 F_p + 2)^n)/(2 L_p^n), p odd";
        e.constraints = "p odd";
        e.params = {rn0(), rp()};
        e.tower = TowerKind::Sqrt5;
        e.admissible = [](const Pt& pt) { return pt.p % 2 != 0; };
        e.lhs = [](const Pt& pt) {
            QuadElem arg = S5() * q5(make_rational(F(pt.p), L(pt.p)));
            return cheb_eval(ChebKind::T, pt.n, arg);
        };
        e.rhs = [](const Pt& pt) {
            QuadElem a = S5() * q5(Rational(F(pt.p)));
            QuadElem two = q5(2);
            QuadElem num = (a - two).pow(pt.n) + (a + two).pow(pt.n);
            return num / q5(Rational(2) * ripow(L(pt.p), pt.n));
        };
    }
    {
        auto& e = add(out);
        e.id = "lem2.wry";
        e.anchor = "T_n(L_{2p}/(rt5 F_{2p})) = ((5F_p^2)^n + (L_p^2)^n)/(2 (rt5 F_{2p})^n)";
        e.constraints = "p != 0";
        e.params = {rn0(), rp()};
        e.tower = TowerKind::Sqrt5;
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            QuadElem arg = q5(Rational(L(2 * pt.p))) / (S5() * q5(Rational(F(2 * pt.p))));
            return cheb_eval(ChebKind::T, pt.n, arg);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(5 * F(pt.p) * F(pt.p), pt.n) + ripow(L(pt.p) * L(pt.p), pt.n);
            QuadElem den = q5(2) * (S5() * q5(Rational(F(2 * pt.p)))).pow(pt.n);
            return q5(num) / den;
        };
    }
    {
        auto& e = add(out);
        e.id = "note.1";
        e.anchor = "sum (4/5)^k C(2n+k,2n-k) (4^k - (-1)^k L_{2p}^{2k}) / ((2n+k) F_{2p}^{2k}) = 0";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            const long long N = 2 * pt.n;
            Integer L2 = L(2 * pt.p) * L(2 * pt.p), F2 = F(2 * pt.p) * F(2 * pt.p);
            Rational acc(0), wk(1), four(1);
            Rational lpw(1), fpw(1);
            for (long long k = 0; k <= N; ++k) {
                Rational bracket = (four - rat(sp(k)) * lpw) / fpw;
                acc += wk * Rational(C(N + k, N - k)) * bracket / rat(N + k);
                wk *= frac(4, 5);
                four *= 4;
                lpw *= Rational(L2);
                fpw *= Rational(F2);
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt&) { return QuadElem(rat(0)); };
    }
    {
        auto& e = add(out);
        e.id = "note.2";
        e.anchor = "sum (4/5)^k C(2n+k,2n-k) (4^k + (-1)^k)/(2n+k) (L_{2p}/F_{2p})^{2k} = "
                   "(625^k F_p^{8n} + L_p^{8n})/(2n 25^n F_{2p}^{4n})";
        e.constraints = "p != 0";
        e.note = "printed right side has a free summation index k (read here as k = n), and the "
                 "printed left side scales both bracket terms by (L_{2p}/F_{2p})^{2k}; it fails "
                 "everywhere.  Reading the bracket as in the companion zero-sum display, "
                 "(4^k + (-1)^k L_{2p}^{2k})/F_{2p}^{2k}, and fixing the single token 625^k to "
                 "625^n gives (625^n F_p^{8n} + L_p^{8n})/(2n 25^n F_{2p}^{4n}), which passes";
        e.params = {rn1(), rp()};
        e.status = EntryStatus::TypoSuspect;
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            const long long N = 2 * pt.n;
            Rational ratio2 = rat_pow(make_rational(L(2 * pt.p), F(2 * pt.p)), 2);
            Rational acc(0), wk(1), four(1), rp2(1);
            for (long long k = 0; k <= N; ++k) {
                acc += wk * Rational(C(N + k, N - k)) * (four + rat(sp(k))) * rp2 / rat(N + k);
                wk *= frac(4, 5);
                four *= 4;
                rp2 *= ratio2;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(625, pt.n) * ripow(F(pt.p), 8 * pt.n) + ripow(L(pt.p), 8 * pt.n);
            Rational den = rat(2 * pt.n) * ripow(25, pt.n) * ripow(F(2 * pt.p), 4 * pt.n);
            return QuadElem(num / den);
        };
        e.corrected_lhs = [](const Pt& pt) {
            const long long N = 2 * pt.n;
            Integer L2 = L(2 * pt.p) * L(2 * pt.p), F2 = F(2 * pt.p) * F(2 * pt.p);
            Rational acc(0), wk(1), four(1), lpw(1), fpw(1);
            for (long long k = 0; k <= N; ++k) {
                Rational bracket = (four + rat(sp(k)) * lpw) / fpw;
                acc += wk * Rational(C(N + k, N - k)) * bracket / rat(N + k);
                wk *= frac(4, 5);
                four *= 4;
                lpw *= Rational(L2);
                fpw *= Rational(F2);
            }
            return QuadElem(acc);
        };
        e.corrected_rhs = [](const Pt& pt) {
            Rational num = ripow(625, pt.n) * ripow(F(pt.p), 8 * pt.n) + ripow(L(pt.p), 8 * pt.n);
            Rational den = rat(2 * pt.n) * ripow(25, pt.n) * ripow(F(2 * pt.p), 4 * pt.n);
            return QuadElem(num / den);
        };
    }
}

void build_thm5_rem1(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "thm5.1";
        e.anchor = "sum (16/5)^k c(n,k) F_{2p}^{2(n-k)} = (25^n F_p^{4n} + L_p^{4n})/(2 5^n)";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Integer F2 = F(2 * pt.p) * F(2 * pt.p);
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += wk * cc(pt.n, k) * ripow(F2, pt.n - k);
                wk *= frac(16, 5);
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(25, pt.n) * ripow(F(pt.p), 4 * pt.n) + ripow(L(pt.p), 4 * pt.n);
            return QuadElem(num / (Rational(2) * ripow(5, pt.n)));
        };
    }
    {
        auto& e = add(out);
        e.id = "thm5.2";
        e.anchor = "sum (-1)^{n-k} (4/5)^k c(n,k) (F_{2p}/L_{2p})^{2(n-k)} = "
                   "(25^n F_p^{4n} + L_p^{4n})/(2 5^n L_{2p}^{2n})";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Rational r2 = rat_pow(make_rational(F(2 * pt.p), L(2 * pt.p)), 2);
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp(pt.n - k)) * wk * cc(pt.n, k) * rat_pow(r2, pt.n - k);
                wk *= frac(4, 5);
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(25, pt.n) * ripow(F(pt.p), 4 * pt.n) + ripow(L(pt.p), 4 * pt.n);
            Rational den = Rational(2) * ripow(5, pt.n) * ripow(L(2 * pt.p), 2 * pt.n);
            return QuadElem(num / den);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm5.part1";
        e.anchor = "sum (16/5)^k c(n,k) = (25^n + 1)/(2 5^n)";
        e.params = {rn1()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += wk * cc(pt.n, k);
                wk *= frac(16, 5);
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem((ripow(25, pt.n) + 1) / (Rational(2) * ripow(5, pt.n)));
        };
    }
    {
        auto& e = add(out);
        e.id = "thm5.part2";
        e.anchor = "sum (-1)^{n-k} (36/5)^k c(n,k) = (25^n + 1)/(2 5^n)";
        e.params = {rn1()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp(pt.n - k)) * wk * cc(pt.n, k);
                wk *= frac(36, 5);
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem((ripow(25, pt.n) + 1) / (Rational(2) * ripow(5, pt.n)));
        };
    }
    {
        auto& e = add(out);
        e.id = "rem1.1";
        e.anchor = "sum (5/16)^{n-k} c(n,k) F_{2p}^{2(n-k)} = sum C(2n,2k) L_{2p}^{2(n-k)}/4^{2n-k}";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Integer F2 = F(2 * pt.p) * F(2 * pt.p);
            Rational acc(0);
            for (long long k = 0; k <= pt.n; ++k)
                acc += rat_pow(frac(5, 16), pt.n - k) * cc(pt.n, k) * ripow(F2, pt.n - k);
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Integer L2 = L(2 * pt.p) * L(2 * pt.p);
            Rational acc(0);
            for (long long k = 0; k <= pt.n; ++k)
                acc += Rational(C(2 * pt.n, 2 * k)) * ripow(L2, pt.n - k) /
                       ripow(4, 2 * pt.n - k);
            return QuadElem(acc);
        };
    }
    {
        auto& e = add(out);
        e.id = "rem1.2";
        e.anchor = "sum (-1)^{n-k} (5/4)^{n-k} c(n,k) (F_{2p}/L_{2p})^{2(n-k)} = "
                   "sum C(2n,2k) 4^{k-n}/L_{2p}^{2k}";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Rational r2 = rat_pow(make_rational(F(2 * pt.p), L(2 * pt.p)), 2);
            Rational acc(0);
            for (long long k = 0; k <= pt.n; ++k)
                acc += rat(sp(pt.n - k)) * rat_pow(frac(5, 4), pt.n - k) * cc(pt.n, k) *
                       rat_pow(r2, pt.n - k);
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Integer L2 = L(2 * pt.p) * L(2 * pt.p);
            Rational acc(0);
            for (long long k = 0; k <= pt.n; ++k)
                acc += Rational(C(2 * pt.n, 2 * k)) * ripow(4, k - pt.n) / ripow(L2, k);
            return QuadElem(acc);
        };
    }
}

void build_thm6_cors_thm7(std::vector<IdentityRecord>& out) {
    // cosh(n arctanh(2/(rt5 F_p))) is evaluated exactly as T_n(rt5 F_p/L_p).
    {
        auto& e = add(out);
        e.id = "thm6.lucas";
        e.anchor = "sum (-4)^k c(n,k) L_{pk+t}/L_p^k = T_n(rt5 F_p/L_p) * (L_t | -rt5 F_t)";
        e.constraints = "p odd";
        e.params = {rn1(), rp(), rt()};
        e.tower = TowerKind::Sqrt5;
        e.admissible = [](const Pt& pt) { return pt.p % 2 != 0; };
        e.lhs = [](const Pt& pt) {
            return q5(alt_seq_sum(pt.n, rat(-4), false, pt.p, pt.t, L(pt.p)));
        };
        e.rhs = [](const Pt& pt) {
            QuadElem cosh_n =
                cheb_eval(ChebKind::T, pt.n, S5() * q5(make_rational(F(pt.p), L(pt.p))));
            QuadElem fac = pt.n % 2 == 0 ? q5(Rational(L(pt.t)))
                                         : -(S5() * q5(Rational(F(pt.t))));
            return cosh_n * fac;
        };
    }
    {
        auto& e = add(out);
        e.id = "thm6.fib";
        e.anchor = "sum (-4)^k c(n,k) F_{pk+t}/L_p^k = T_n(rt5 F_p/L_p) * (F_t | -L_t/rt5)";
        e.constraints = "p odd";
        e.params = {rn1(), rp(), rt()};
        e.tower = TowerKind::Sqrt5;
        e.admissible = [](const Pt& pt) { return pt.p % 2 != 0; };
        e.lhs = [](const Pt& pt) {
            return q5(alt_seq_sum(pt.n, rat(-4), true, pt.p, pt.t, L(pt.p)));
        };
        e.rhs = [](const Pt& pt) {
            QuadElem cosh_n =
                cheb_eval(ChebKind::T, pt.n, S5() * q5(make_rational(F(pt.p), L(pt.p))));
            QuadElem fac = pt.n % 2 == 0 ? q5(Rational(F(pt.t)))
                                         : -(q5(Rational(L(pt.t))) / S5());
            return cosh_n * fac;
        };
    }
    {
        auto& e = add(out);
        e.id = "cor1.1";
        e.anchor = "sum (-4)^k c(n,k) L_{pk}/L_p^k = 0, p odd, n odd";
        e.constraints = "p odd, n odd";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p % 2 != 0 && pt.n % 2 != 0; };
        e.lhs = [](const Pt& pt) {
            return QuadElem(alt_seq_sum(pt.n, rat(-4), false, pt.p, 0, L(pt.p)));
        };
        e.rhs = [](const Pt&) { return QuadElem(rat(0)); };
    }
    {
        auto& e = add(out);
        e.id = "cor1.2";
        e.anchor = "sum (-4)^k c(n,k) F_{pk}/L_p^k = 0, p odd, n even";
        e.constraints = "p odd, n even";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p % 2 != 0 && pt.n % 2 == 0; };
        e.lhs = [](const Pt& pt) {
            return QuadElem(alt_seq_sum(pt.n, rat(-4), true, pt.p, 0, L(pt.p)));
        };
        e.rhs = [](const Pt&) { return QuadElem(rat(0)); };
    }
    {
        auto& e = add(out);
        e.id = "cor2.1";
        e.anchor = "sum (-4)^k c(n,k) L_{k+t} = L_t L_{3n}/2 (n even), -5 F_t F_{3n}/2 (n odd)";
        e.params = {rn1(), rt()};
        e.lhs = [](const Pt& pt) {
            return QuadElem(alt_seq_sum(pt.n, rat(-4), false, 1, pt.t, Integer(1)));
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 == 0) return QuadElem(Rational(L(pt.t) * L(3 * pt.n)) / 2);
            return QuadElem(Rational(-5 * F(pt.t) * F(3 * pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "cor2.2";
        e.anchor = "sum (-4)^k c(n,k) F_{k+t} = F_t L_{3n}/2 (n even), -L_t F_{3n}/2 (n odd)";
        e.params = {rn1(), rt()};
        e.lhs = [](const Pt& pt) {
            return QuadElem(alt_seq_sum(pt.n, rat(-4), true, 1, pt.t, Integer(1)));
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 == 0) return QuadElem(Rational(F(pt.t) * L(3 * pt.n)) / 2);
            return QuadElem(Rational(-L(pt.t) * F(3 * pt.n)) / 2);
        };
    }
    // Even p: cosh(n arctanh(2/L_p)) = T_n(L_p/(rt5 F_p)).
    {
        auto& e = add(out);
        e.id = "thm7.lucas";
        e.anchor = "split sum over C(n+2k,n-2k) L_{2pk+t} and C(n+2k+1,n-2k-1) F_{p(2k+1)+t} = "
                   "T_n(L_p/(rt5 F_p)) (L_t | -rt5 F_t)/n";
        e.constraints = "p even, p != 0";
        e.params = {rn1(), rp(), rt()};
        e.tower = TowerKind::Sqrt5;
        e.admissible = [](const Pt& pt) { return pt.p != 0 && pt.p % 2 == 0; };
        e.lhs = [](const Pt& pt) {
            Integer Fp = F(pt.p);
            Rational w = make_rational(Integer(16), 5 * Fp * Fp);
            Rational acc(0), wk(1);
            for (long long k = 0; 2 * k <= pt.n; ++k) {
                Rational first =
                    Rational(C(pt.n + 2 * k, pt.n - 2 * k) * L(2 * pt.p * k + pt.t)) /
                    rat(pt.n + 2 * k);
                Rational second = Rational(4) / Rational(Fp) *
                                  Rational(C(pt.n + 2 * k + 1, pt.n - 2 * k - 1) *
                                           F(pt.p * (2 * k + 1) + pt.t)) /
                                  rat(pt.n + 2 * k + 1);
                acc += wk * (first - second);
                wk *= w;
            }
            return q5(acc);
        };
        e.rhs = [](const Pt& pt) {
            QuadElem arg = q5(Rational(L(pt.p))) / (S5() * q5(Rational(F(pt.p))));
            QuadElem cosh_n = cheb_eval(ChebKind::T, pt.n, arg);
            QuadElem fac = pt.n % 2 == 0 ? q5(Rational(L(pt.t)))
                                         : -(S5() * q5(Rational(F(pt.t))));
            return cosh_n * fac / q5(rat(pt.n));
        };
    }
    {
        auto& e = add(out);
        e.id = "thm7.fib";
        e.anchor = "split sum over C(n+2k,n-2k) F_{2pk+t} and C(n+2k+1,n-2k-1) L_{p(2k+1)+t} = "
                   "T_n(L_p/(rt5 F_p)) (rt5 F_t | -L_t)/(rt5 n)";
        e.constraints = "p even, p != 0";
        e.params = {rn1(), rp(), rt()};
        e.tower = TowerKind::Sqrt5;
        e.admissible = [](const Pt& pt) { return pt.p != 0 && pt.p % 2 == 0; };
        e.lhs = [](const Pt& pt) {
            Integer Fp = F(pt.p);
            Rational w = make_rational(Integer(16), 5 * Fp * Fp);
            Rational acc(0), wk(1);
            for (long long k = 0; 2 * k <= pt.n; ++k) {
                Rational first =
                    Rational(C(pt.n + 2 * k, pt.n - 2 * k) * F(2 * pt.p * k + pt.t)) /
                    rat(pt.n + 2 * k);
                Rational second = Rational(4) / Rational(5 * Fp) *
                                  Rational(C(pt.n + 2 * k + 1, pt.n - 2 * k - 1) *
                                           L(pt.p * (2 * k + 1) + pt.t)) /
                                  rat(pt.n + 2 * k + 1);
                acc += wk * (first - second);
                wk *= w;
            }
            return q5(acc);
        };
        e.rhs = [](const Pt& pt) {
            QuadElem arg = q5(Rational(L(pt.p))) / (S5() * q5(Rational(F(pt.p))));
            QuadElem cosh_n = cheb_eval(ChebKind::T, pt.n, arg);
            QuadElem fac = pt.n % 2 == 0 ? S5() * q5(Rational(F(pt.t)))
                                         : -q5(Rational(L(pt.t)));
            return cosh_n * fac / (S5() * q5(rat(pt.n)));
        };
    }
}

void build_ex8910(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "ex8.gen";
        e.anchor = "sum (-2)^k c(n,k) ((1+x)^k -+ (1-x)^k) = ((-1)^n -+ 1) T_n(x)";
        e.constraints = "sg 0 takes the minus";
        e.params = {rn0(), rx(), rsg()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1), pp(1), pm(1);
            Rational bp = rat(1 + pt.x), bm = rat(1 - pt.x);
            for (long long k = 0; k <= pt.n; ++k) {
                Rational bracket = pt.sg == 0 ? Rational(pp - pm) : Rational(pp + pm);
                acc += wk * cc(pt.n, k) * bracket;
                pp *= bp;
                pm *= bm;
                wk *= -2;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational fac = rat(sp(pt.n)) + rat(pt.sg == 0 ? -1 : 1);
            return QuadElem(fac * cheb_eval(ChebKind::T, pt.n, rat(pt.x)));
        };
        e.poly_checkable = true;
    }
    {
        auto& e = add(out);
        e.id = "ex8.f3k";
        e.anchor = "sum_{k>=1} (-1)^{k-1} c(n,k) F_{3k} = (1-(-1)^n) F_n/2";
        e.params = {rn0()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 1; k <= pt.n; ++k)
                acc += rat(sp(k - 1)) * cc(pt.n, k) * Rational(F(3 * k));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem((Rational(1) - rat(sp(pt.n))) * Rational(F(pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "ex8.l3k";
        e.anchor = "sum (-1)^k c(n,k) L_{3k} = (1+(-1)^n) L_n/2";
        e.params = {rn0()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 0; k <= pt.n; ++k)
                acc += rat(sp(k)) * cc(pt.n, k) * Rational(L(3 * k));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem((Rational(1) + rat(sp(pt.n))) * Rational(L(pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "ex9.f";
        e.anchor = "sum_{k>=1} (-4)^k c(n,k) F_k = ((-1)^n - 1) F_{3n}/2";
        e.params = {rn0()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(-4);
            for (long long k = 1; k <= pt.n; ++k) {
                acc += wk * cc(pt.n, k) * Rational(F(k));
                wk *= -4;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem((rat(sp(pt.n)) - 1) * Rational(F(3 * pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "ex9.l";
        e.anchor = "sum (-4)^k c(n,k) L_k = (1+(-1)^n) L_{3n}/2";
        e.params = {rn0()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += wk * cc(pt.n, k) * Rational(L(k));
                wk *= -4;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem((Rational(1) + rat(sp(pt.n))) * Rational(L(3 * pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "ex10.1";
        e.anchor = "sum (-4)^k c(n,k) (L_{2k} +- (-1)^k L_k) = ((-1)^n +- 1)(T_n(a^3)+T_n(b^3))";
        e.constraints = "sg 0 upper sign";
        e.params = {rn0(), rsg()};
        e.tower = TowerKind::Sqrt5;
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                Rational inner = Rational(L(2 * k)) +
                                 rat(pt.sg == 0 ? sp(k) : -sp(k)) * Rational(L(k));
                acc += wk * cc(pt.n, k) * inner;
                wk *= -4;
            }
            return q5(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational fac = rat(sp(pt.n)) + rat(pt.sg == 0 ? 1 : -1);
            return q5(fac) * (cheb_eval(ChebKind::T, pt.n, A().pow(3)) +
                              cheb_eval(ChebKind::T, pt.n, B().pow(3)));
        };
    }
    {
        auto& e = add(out);
        e.id = "ex10.2";
        e.anchor = "sum (-4)^k c(n,k) (F_{2k} +- (-1)^k F_k) = ((-1)^n +- 1)(T_n(a^3)-T_n(b^3))/rt5";
        e.constraints = "sg 0 upper sign";
        e.params = {rn0(), rsg()};
        e.tower = TowerKind::Sqrt5;
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                Rational inner = Rational(F(2 * k)) +
                                 rat(pt.sg == 0 ? sp(k) : -sp(k)) * Rational(F(k));
                acc += wk * cc(pt.n, k) * inner;
                wk *= -4;
            }
            return q5(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational fac = rat(sp(pt.n)) + rat(pt.sg == 0 ? 1 : -1);
            return q5(fac) * (cheb_eval(ChebKind::T, pt.n, A().pow(3)) -
                              cheb_eval(ChebKind::T, pt.n, B().pow(3))) /
                   S5();
        };
    }
    {
        auto& e = add(out);
        e.id = "ex10.3";
        e.anchor = "sum (-4/3)^k c(n,k) L_{2k} = ((-1)^n + 1) T_n(rt5/3)";
        e.params = {rn0()};
        e.tower = TowerKind::Sqrt5;
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += wk * cc(pt.n, k) * Rational(L(2 * k));
                wk *= frac(-4, 3);
            }
            return q5(acc);
        };
        e.rhs = [](const Pt& pt) {
            QuadElem tn = cheb_eval(ChebKind::T, pt.n, S5() * q5(frac(1, 3)));
            return q5(rat(sp(pt.n)) + Rational(1)) * tn;
        };
    }
    {
        auto& e = add(out);
        e.id = "ex10.4";
        e.anchor = "sum (-4/3)^k c(n,k) F_{2k} = ((-1)^n - 1) T_n(rt5/3)/rt5";
        e.params = {rn0()};
        e.tower = TowerKind::Sqrt5;
        e.lhs = [](const Pt& pt) {
            Rational acc(0), wk(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += wk * cc(pt.n, k) * Rational(F(2 * k));
                wk *= frac(-4, 3);
            }
            return q5(acc);
        };
        e.rhs = [](const Pt& pt) {
            QuadElem tn = cheb_eval(ChebKind::T, pt.n, S5() * q5(frac(1, 3)));
            return q5(rat(sp(pt.n)) - Rational(1)) * tn / S5();
        };
    }
}

void build_thm8_to_11(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "thm8.lucas";
        e.anchor = "sum (-1)^{n-k} c(n,k) L_{3k+t} = 5 F_t F_n/2 (n odd), L_t L_n/2 (n even)";
        e.params = {rn1(), rt()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 0; k <= pt.n; ++k)
                acc += rat(sp(pt.n - k)) * cc(pt.n, k) * Rational(L(3 * k + pt.t));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 != 0) return QuadElem(Rational(5 * F(pt.t) * F(pt.n)) / 2);
            return QuadElem(Rational(L(pt.t) * L(pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm8.fib";
        e.anchor = "sum (-1)^{n-k} c(n,k) F_{3k+t} = L_t F_n/2 (n odd), F_t L_n/2 (n even)";
        e.params = {rn1(), rt()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0);
            for (long long k = 0; k <= pt.n; ++k)
                acc += rat(sp(pt.n - k)) * cc(pt.n, k) * Rational(F(3 * k + pt.t));
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 != 0) return QuadElem(Rational(L(pt.t) * F(pt.n)) / 2);
            return QuadElem(Rational(F(pt.t) * L(pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm9";
        e.anchor = "sum (-1)^{n-k} c(n,k) (2L_{2p}/(rt5 F_{2p}))^{2k} = "
                   "((rt5 F_p/L_p)^{2n} + (L_p/(rt5 F_p))^{2n})/2";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Rational base = make_rational(4 * L(2 * pt.p) * L(2 * pt.p),
                                          5 * F(2 * pt.p) * F(2 * pt.p));
            Rational acc(0), pw(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp(pt.n - k)) * cc(pt.n, k) * pw;
                pw *= base;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational r = make_rational(5 * F(pt.p) * F(pt.p), L(pt.p) * L(pt.p));
            return QuadElem((rat_pow(r, pt.n) + rat_pow(r, -pt.n)) / 2);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm10";
        e.anchor = "sum (-1)^{(p-q)(n-k)} c(n,k) (F_{p+q}F_{p-q}/(F_p F_q))^{2k} = "
                   "(F_p^{4n} + F_q^{4n})/(2 F_q^{2n} F_p^{2n})";
        e.constraints = "p != 0, q != 0";
        e.params = {rn0(), rp(), rq()};
        e.admissible = [](const Pt& pt) { return pt.p != 0 && pt.q != 0; };
        e.lhs = [](const Pt& pt) {
            Rational base = rat_pow(
                make_rational(F(pt.p + pt.q) * F(pt.p - pt.q), F(pt.p) * F(pt.q)), 2);
            Rational acc(0), pw(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp((pt.p - pt.q) * (pt.n - k))) * cc(pt.n, k) * pw;
                pw *= base;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(F(pt.p), 4 * pt.n) + ripow(F(pt.q), 4 * pt.n);
            Rational den = Rational(2) * ripow(F(pt.q), 2 * pt.n) * ripow(F(pt.p), 2 * pt.n);
            return QuadElem(num / den);
        };
    }
    {
        auto& e = add(out);
        e.id = "thm11.1";
        e.anchor = "sum (-1)^{p(n-k)} c(n,k) (F_{3p}/F_{2p})^{2k} = (L_p^{4n} + 1)/(2 L_p^{2n})";
        e.constraints = "p != 0";
        e.params = {rn0(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Rational base = rat_pow(make_rational(F(3 * pt.p), F(2 * pt.p)), 2);
            Rational acc(0), pw(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp(pt.p * (pt.n - k))) * cc(pt.n, k) * pw;
                pw *= base;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem((ripow(L(pt.p), 4 * pt.n) + 1) /
                            (Rational(2) * ripow(L(pt.p), 2 * pt.n)));
        };
    }
    {
        auto& e = add(out);
        e.id = "thm11.2";
        e.anchor = "sum (-1)^{(p+1)(n-k)} c(n,k) 5^{n-k} (L_{3p}/F_{2p})^{2k} = "
                   "(5^{2n} F_p^{4n} + 1)/(2 F_p^{2n})";
        e.constraints = "p != 0";
        e.params = {rn0(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Rational base = rat_pow(make_rational(L(3 * pt.p), F(2 * pt.p)), 2);
            Rational acc(0), pw(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp((pt.p + 1) * (pt.n - k))) * cc(pt.n, k) *
                       ripow(5, pt.n - k) * pw;
                pw *= base;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(5, 2 * pt.n) * ripow(F(pt.p), 4 * pt.n) + 1;
            return QuadElem(num / (Rational(2) * ripow(F(pt.p), 2 * pt.n)));
        };
    }
}

// T_{2n} at sqrt((-1)^{q+1} F_q^2 a^{2p+q} / (4 F_p F_{p+q})) and the Lucas
// analogue, evaluated radical-free through the even reduction in s = x^2.
void build_lem4(std::vector<IdentityRecord>& out) {
    struct Spec {
        const char* id;
        bool lucas;  // Lucas denominators (third/fourth display)
        bool beta;   // golden conjugate under the radical
    };
    static constexpr Spec specs[] = {
        {"lem4.1", false, false},
        {"lem4.2", false, true},
        {"lem4.3", true, false},
        {"lem4.4", true, true},
    };
    for (const Spec& s : specs) {
        auto& e = add(out);
        e.id = s.id;
        e.anchor = std::string("T_{2n}(rt(") + (s.lucas ? "5" : "") +
                   "(-1)^{q+1} F_q^2 " + (s.beta ? "b" : "a") + "^{2p+q}/(4 " +
                   (s.lucas ? "L_p L_{p+q}" : "F_p F_{p+q}") + "))) as a golden-power pair";
        e.constraints = s.lucas ? "" : "p != 0, p != -q";
        e.params = {rn0(), rp(), rq()};
        e.tower = TowerKind::Sqrt5;
        const bool lucas_w = s.lucas;
        const bool beta = s.beta;
        if (!s.lucas)
            e.admissible = [](const Pt& pt) { return pt.p != 0 && pt.p != -pt.q; };
        e.lhs = [lucas_w, beta](const Pt& pt) {
            Integer den = lucas_w ? 4 * L(pt.p) * L(pt.p + pt.q) : 4 * F(pt.p) * F(pt.p + pt.q);
            Integer num = (lucas_w ? Integer(5) : Integer(1)) * F(pt.q) * F(pt.q);
            Rational coef = rat(sp(pt.q + 1)) * make_rational(num, den);
            QuadElem base = beta ? B() : A();
            QuadElem sarg = q5(coef) * base.pow(2 * pt.p + pt.q);
            return cheb_eval_even(EvenForm::T2n, pt.n, sarg);
        };
        e.rhs = [lucas_w, beta](const Pt& pt) {
            Integer up = lucas_w ? L(pt.p + pt.q) : F(pt.p + pt.q);
            Integer dn = lucas_w ? L(pt.p) : F(pt.p);
            Rational grow = rat_pow(make_rational(up, dn), pt.n);
            Rational shrink = rat_pow(make_rational(dn, up), pt.n);
            QuadElem first = q5(rat(sp(pt.n * pt.q)) * grow) *
                             (beta ? B() : A()).pow(pt.q * pt.n);
            QuadElem second = q5(shrink) * (beta ? A() : B()).pow(pt.q * pt.n);
            return q5(frac(sp(pt.n), 2)) * (first + second);
        };
    }
}

void build_thm12_ex11(std::vector<IdentityRecord>& out) {
    struct Spec {
        const char* id;
        bool lucas_prod;  // L_p L_{p+q} products and the 5^k weight
        bool fib_val;     // summand carries F_{k(2p+q)+t} instead of L
    };
    static constexpr Spec specs[] = {
        {"thm12.1", false, false},
        {"thm12.2", false, true},
        {"thm12.3", true, false},
        {"thm12.4", true, true},
    };
    for (const Spec& s : specs) {
        auto& e = add(out);
        e.id = s.id;
        e.anchor = std::string("sum (-1)^{(n-k)q} c(n,k) ") +
                   (s.lucas_prod ? "5^k L_{p+q}^{n-k} L_p^{n-k}" : "F_{p+q}^{n-k} F_p^{n-k}") +
                   " F_q^{2k} " + (s.fib_val ? "F" : "L") + "_{k(2p+q)+t} = half-sum of " +
                   (s.lucas_prod ? "L^{2n}" : "F^{2n}") + " pair";
        e.params = {rn1(), rp(), rq(), rt()};
        const bool lucas_prod = s.lucas_prod;
        const bool fib_val = s.fib_val;
        e.lhs = [lucas_prod, fib_val](const Pt& pt) {
            Integer prod = lucas_prod ? L(pt.p + pt.q) * L(pt.p) : F(pt.p + pt.q) * F(pt.p);
            std::vector<Integer> ppow(static_cast<std::size_t>(pt.n) + 1);
            ppow[0] = 1;
            for (long long i = 1; i <= pt.n; ++i)
                ppow[static_cast<std::size_t>(i)] = ppow[static_cast<std::size_t>(i - 1)] * prod;
            Integer fq2 = F(pt.q) * F(pt.q);
            Rational acc(0);
            Integer fqpow(1), fivek(1);
            for (long long k = 0; k <= pt.n; ++k) {
                Integer val = fib_val ? F(k * (2 * pt.p + pt.q) + pt.t)
                                      : L(k * (2 * pt.p + pt.q) + pt.t);
                Integer w = ppow[static_cast<std::size_t>(pt.n - k)] * fqpow * val;
                if (lucas_prod) w *= fivek;
                acc += rat(sp((pt.n - k) * pt.q)) * cc(pt.n, k) * Rational(w);
                fqpow *= fq2;
                if (lucas_prod) fivek *= 5;
            }
            return QuadElem(acc);
        };
        e.rhs = [lucas_prod, fib_val](const Pt& pt) {
            Integer up = lucas_prod ? L(pt.p + pt.q) : F(pt.p + pt.q);
            Integer dn = lucas_prod ? L(pt.p) : F(pt.p);
            auto val = [&](long long idx) { return fib_val ? F(idx) : L(idx); };
            Rational num = ripow(up, 2 * pt.n) * Rational(val(pt.t + pt.q * pt.n)) +
                           ripow(dn, 2 * pt.n) * Rational(val(pt.t - pt.q * pt.n));
            return QuadElem(num / 2);
        };
    }

    struct ExSpec {
        const char* id;
        bool five;    // 5^k weight, stride 1
        bool fibval;  // F summand
    };
    static constexpr ExSpec exspecs[] = {
        {"ex11.1", false, false},
        {"ex11.2", false, true},
        {"ex11.3", true, false},
        {"ex11.4", true, true},
    };
    for (const ExSpec& s : exspecs) {
        auto& e = add(out);
        e.id = s.id;
        e.anchor = std::string("sum (-2)^{n-k} c(n,k) ") + (s.five ? "5^k " : "") +
                   (s.fibval ? "F" : "L") + (s.five ? "_{k+t}" : "_{5k+t}") +
                   " = (4^n and reflected term)/2";
        e.params = {rn1(), rt()};
        const bool five = s.five;
        const bool fibval = s.fibval;
        e.lhs = [five, fibval](const Pt& pt) {
            Rational acc(0);
            Rational pw2 = ripow(2, pt.n);  // (-2)^{n-k} via sign * 2^{n-k}
            Integer fivek(1);
            for (long long k = 0; k <= pt.n; ++k) {
                long long idx = five ? k + pt.t : 5 * k + pt.t;
                Integer val = fibval ? F(idx) : L(idx);
                acc += rat(sp(pt.n - k)) * pw2 * cc(pt.n, k) * Rational(val * fivek);
                pw2 /= 2;
                if (five) fivek *= 5;
            }
            return QuadElem(acc);
        };
        e.rhs = [five, fibval](const Pt& pt) {
            auto val = [&](long long idx) { return fibval ? F(idx) : L(idx); };
            Rational fourn = ripow(4, pt.n);
            Rational out = five
                ? Rational(fourn * Rational(val(pt.t - pt.n)) + Rational(val(pt.n + pt.t)))
                : Rational(Rational(val(pt.t - pt.n)) + fourn * Rational(val(pt.n + pt.t)));
            return QuadElem(out / 2);
        };
    }
}

}  // namespace

void build_sec2b(std::vector<IdentityRecord>& out) {
    build_lem2_notes(out);
    build_thm5_rem1(out);
    build_thm6_cors_thm7(out);
    build_ex8910(out);
    build_thm8_to_11(out);
    build_lem4(out);
    build_thm12_ex11(out);
}

}  // namespace fibcheb::cat
