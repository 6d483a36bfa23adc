#include "catalog_util.hpp"

// Catalog, part 4: plain C(n+k, n-k) weights.  These arise by adding each
// n/(n+k) identity to its k/(n+k) counterpart, so their right sides combine
// both closed forms over the common denominator.

namespace fibcheb::cat {

namespace {

IdentityRecord& add(std::vector<IdentityRecord>& out) {
    out.emplace_back();
    return out.back();
}

void build_s4_thm1(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "s4.thm1.1";
        e.anchor = "sum (-1)^{(p-1)(n-k)} C(n+k,n-k) L_p^{2k} = F_{(2n+1)p}/F_p";
        e.constraints = "p != 0";
        e.params = {rn1(), rp()};
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        e.lhs = [](const Pt& pt) {
            Integer lp2 = L(pt.p) * L(pt.p);
            Rational acc(0);
            Integer pw(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp((pt.p - 1) * (pt.n - k))) * Rational(C(pt.n + k, pt.n - k) * pw);
                pw *= lp2;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem(make_rational(F((2 * pt.n + 1) * pt.p), F(pt.p)));
        };
    }
    {
        auto& e = add(out);
        e.id = "s4.thm1.2";
        e.anchor = "sum (-1)^{p(n-k)} C(n+k,n-k) 5^k F_p^{2k} = L_{(2n+1)p}/L_p";
        e.params = {rn1(), rp()};
        e.lhs = [](const Pt& pt) {
            Integer step = 5 * F(pt.p) * F(pt.p);
            Rational acc(0);
            Integer pw(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp(pt.p * (pt.n - k))) * Rational(C(pt.n + k, pt.n - k) * pw);
                pw *= step;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem(make_rational(L((2 * pt.n + 1) * pt.p), L(pt.p)));
        };
    }
}

void build_s4_thm2(std::vector<IdentityRecord>& out) {
    struct Spec {
        const char* id;
        bool lucas_prod;  // L_p L_{p+q} products and a 5^k weight
        bool fib_sum;     // summand sequence
        bool suspect;
    };
    static constexpr Spec specs[] = {
        {"s4.thm2.1", false, false, false},
        {"s4.thm2.2", false, true, true},
        {"s4.thm2.3", true, true, false},
        {"s4.thm2.4", true, false, true},
    };
    for (const Spec& s : specs) {
        auto& e = add(out);
        e.id = s.id;
        e.anchor = std::string("sum (-1)^{q(n-k)} C(n+k,n-k) ") +
                   (s.lucas_prod ? "L_p^{n-k} L_{p+q}^{n-k} F_q^{2k} 5^k "
                                 : "F_p^{n-k} F_{p+q}^{n-k} F_q^{2k} ") +
                   (s.fib_sum ? "F" : "L") + "_{(2p+q)k+t} as the two-family addition";
        e.constraints = s.lucas_prod ? "" : "not (p = 0 and q = 0)";
        e.params = {rn0(), rp(), rq(), rt()};
        const bool lucas_prod = s.lucas_prod;
        const bool fib_sum = s.fib_sum;
        if (!s.lucas_prod)
            e.admissible = [](const Pt& pt) { return !(pt.p == 0 && pt.q == 0); };

        e.lhs = [lucas_prod, fib_sum](const Pt& pt) {
            Integer prod = lucas_prod ? L(pt.p + pt.q) * L(pt.p) : F(pt.p + pt.q) * F(pt.p);
            std::vector<Integer> ppow(static_cast<std::size_t>(pt.n) + 1);
            ppow[0] = 1;
            for (long long i = 1; i <= pt.n; ++i)
                ppow[static_cast<std::size_t>(i)] = ppow[static_cast<std::size_t>(i - 1)] * prod;
            Integer fq2 = F(pt.q) * F(pt.q);
            Rational acc(0);
            Integer fqpow(1), fivek(1);
            for (long long k = 0; k <= pt.n; ++k) {
                Integer val = fib_sum ? F(k * (2 * pt.p + pt.q) + pt.t)
                                      : L(k * (2 * pt.p + pt.q) + pt.t);
                Integer w = C(pt.n + k, pt.n - k) *
                            ppow[static_cast<std::size_t>(pt.n - k)] * fqpow * val;
                if (lucas_prod) w *= fivek;
                acc += rat(sp((pt.n - k) * pt.q)) * Rational(w);
                fqpow *= fq2;
                if (lucas_prod) fivek *= 5;
            }
            return QuadElem(acc);
        };

        // first_sign: sign of the second product in the n/(n+k) half-sum part;
        // five_scale: the k/(n+k) part enters with 5 F_q instead of F_q.
        auto make_rhs = [lucas_prod, fib_sum](int first_sign, long long up_extra,
                                              bool five_scale) {
            return [lucas_prod, fib_sum, first_sign, up_extra, five_scale](const Pt& pt) {
                Integer up = lucas_prod ? L(pt.p + pt.q) : F(pt.p + pt.q);
                Integer dn = lucas_prod ? L(pt.p) : F(pt.p);
                Integer fq = F(pt.q);
                auto sval = [&](long long idx) { return fib_sum ? F(idx) : L(idx); };
                // The k/(n+k) counterpart swaps the inner sequence family.
                auto pval = [&](long long idx) {
                    return lucas_prod == fib_sum ? L(idx) : F(idx);
                };
                Rational half =
                    (ripow(up, 2 * pt.n) * Rational(sval(pt.t + pt.q * pt.n)) +
                     Rational(first_sign) * ripow(dn, 2 * pt.n) *
                         Rational(sval(pt.t - pt.q * pt.n))) /
                    2;
                Integer D = up * up + dn * up * L(pt.q) + sp(pt.q) * dn * dn;
                Rational num =
                    ripow(up, 2 * pt.n + up_extra) *
                        (Rational(up * pval(pt.p + pt.t + pt.q * pt.n)) +
                         Rational(dn * pval(pt.q + pt.p + pt.t + pt.q * pt.n))) -
                    ripow(dn, 2 * pt.n) *
                        (Rational(up * pval(pt.p + pt.t - pt.q * pt.n)) +
                         Rational(dn * pval(pt.p + pt.q + pt.t - pt.q * pt.n)));
                Rational scale = five_scale ? Rational(5 * fq) : Rational(fq);
                return QuadElem(half + scale * num / Rational(2 * D));
            };
        };

        if (s.id == std::string("s4.thm2.1")) {
            e.rhs = make_rhs(+1, 0, false);
        } else if (s.id == std::string("s4.thm2.2")) {
            e.status = EntryStatus::TypoSuspect;
            e.note = "printed first part has F_{p+q}^{2n}F_{t+qn} - F_p^{2n}F_{t-qn} where the "
                     "addition of the two source families forces a plus; with + it passes";
            e.rhs = make_rhs(-1, 0, false);
            e.corrected_lhs = e.lhs;
            e.corrected_rhs = make_rhs(+1, 0, false);
        } else if (s.id == std::string("s4.thm2.3")) {
            e.rhs = make_rhs(+1, 0, false);
        } else {
            e.status = EntryStatus::TypoSuspect;
            e.note = "printed exponent L_{p+q}^{2n+1} where the sibling displays carry 2n; "
                     "with 2n it passes";
            e.rhs = make_rhs(+1, 1, true);
            e.corrected_lhs = e.lhs;
            e.corrected_rhs = make_rhs(+1, 0, true);
        }
    }
}

void build_s4_examples(std::vector<IdentityRecord>& out) {
    auto csum = [](long long n, long long stride, long long off, bool fibw, long long two_pow) {
        // sum (-w)^{n-k} C(n+k, n-k) seq(stride*k + off), w = 1 or 2
        Rational acc(0);
        for (long long k = 0; k <= n; ++k) {
            Rational w = two_pow ? rat(sp(n - k)) * ripow(2, n - k) : rat(sp(n - k));
            acc += w * Rational(C(n + k, n - k) * (fibw ? F(stride * k + off) : L(stride * k + off)));
        }
        return acc;
    };
    {
        auto& e = add(out);
        e.id = "s4.ex1.1";
        e.anchor = "sum (-1)^{n-k} C(n+k,n-k) L_{3k+t} = L_{t+n} + L_{t+1} L_n (n odd), "
                   "L_{t+n} + 5 F_{t+1} F_n (n even)";
        e.params = {rn0(), rt()};
        e.lhs = [csum](const Pt& pt) { return QuadElem(csum(pt.n, 3, pt.t, false, 0)); };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 != 0)
                return QuadElem(Rational(L(pt.t + pt.n) + L(pt.t + 1) * L(pt.n)));
            return QuadElem(Rational(L(pt.t + pt.n) + 5 * F(pt.t + 1) * F(pt.n)));
        };
    }
    {
        auto& e = add(out);
        e.id = "s4.ex1.2";
        e.anchor = "sum (-1)^{n-k} C(n+k,n-k) F_{3k+t} = F_{t+n} + F_{t+1} L_n (n odd), "
                   "F_{t+n} + L_{t+1} F_n (n even)";
        e.params = {rn0(), rt()};
        e.lhs = [csum](const Pt& pt) { return QuadElem(csum(pt.n, 3, pt.t, true, 0)); };
        e.rhs = [](const Pt& pt) {
            if (pt.n % 2 != 0)
                return QuadElem(Rational(F(pt.t + pt.n) + F(pt.t + 1) * L(pt.n)));
            return QuadElem(Rational(F(pt.t + pt.n) + L(pt.t + 1) * F(pt.n)));
        };
    }
    {
        auto& e = add(out);
        e.id = "s4.ex1.3";
        e.anchor = "sum (-1)^{n-k} C(n+k,n-k) L_{3k} = 2L_n (n odd), 2L_{n+1} (n even)";
        e.params = {rn0()};
        e.lhs = [csum](const Pt& pt) { return QuadElem(csum(pt.n, 3, 0, false, 0)); };
        e.rhs = [](const Pt& pt) {
            return QuadElem(Rational(pt.n % 2 != 0 ? 2 * L(pt.n) : 2 * L(pt.n + 1)));
        };
    }
    {
        auto& e = add(out);
        e.id = "s4.ex1.4";
        e.anchor = "sum (-1)^{n-k} C(n+k,n-k) F_{3k} = 2F_{n+1} (n odd), 2F_n (n even)";
        e.params = {rn0()};
        e.lhs = [csum](const Pt& pt) { return QuadElem(csum(pt.n, 3, 0, true, 0)); };
        e.rhs = [](const Pt& pt) {
            return QuadElem(Rational(pt.n % 2 != 0 ? 2 * F(pt.n + 1) : 2 * F(pt.n)));
        };
    }
    {
        auto& e = add(out);
        e.id = "s4.ex1.5";
        e.anchor = "sum (-1)^{n-k} C(n+k,n-k) L_{3k-1} = L_{n+2} (n odd), L_{n-1} (n even)";
        e.params = {rn0()};
        e.lhs = [csum](const Pt& pt) { return QuadElem(csum(pt.n, 3, -1, false, 0)); };
        e.rhs = [](const Pt& pt) {
            return QuadElem(Rational(pt.n % 2 != 0 ? L(pt.n + 2) : L(pt.n - 1)));
        };
    }
    {
        auto& e = add(out);
        e.id = "s4.ex1.6";
        e.anchor = "sum (-1)^{n-k} C(n+k,n-k) F_{3k-1} = F_{n-1} (n odd), F_{n+2} (n even)";
        e.params = {rn0()};
        e.lhs = [csum](const Pt& pt) { return QuadElem(csum(pt.n, 3, -1, true, 0)); };
        e.rhs = [](const Pt& pt) {
            return QuadElem(Rational(pt.n % 2 != 0 ? F(pt.n - 1) : F(pt.n + 2)));
        };
    }
    {
        auto& e = add(out);
        e.id = "s4.ex2.1";
        e.anchor = "sum (-2)^{n-k} C(n+k,n-k) L_{5k+t} = 2^{2n+1} F_{t+n+1} - F_{t-n}";
        e.params = {rn0(), rt()};
        e.lhs = [csum](const Pt& pt) { return QuadElem(csum(pt.n, 5, pt.t, false, 1)); };
        e.rhs = [](const Pt& pt) {
            Rational out = ripow(2, 2 * pt.n + 1) * Rational(F(pt.t + pt.n + 1)) -
                           Rational(F(pt.t - pt.n));
            return QuadElem(out);
        };
    }
    {
        auto& e = add(out);
        e.id = "s4.ex2.2";
        e.anchor = "sum (-2)^{n-k} C(n+k,n-k) F_{5k+t} = (2^{2n+1} L_{t+n+1} - L_{t-n})/5";
        e.params = {rn0(), rt()};
        e.lhs = [csum](const Pt& pt) { return QuadElem(csum(pt.n, 5, pt.t, true, 1)); };
        e.rhs = [](const Pt& pt) {
            Rational out = ripow(2, 2 * pt.n + 1) * Rational(L(pt.t + pt.n + 1)) -
                           Rational(L(pt.t - pt.n));
            return QuadElem(out / 5);
        };
    }
}

void build_lem8_final(std::vector<IdentityRecord>& out) {
    {
        auto& e = add(out);
        e.id = "lem8";
        e.anchor = "sum (-4)^k C(n+k,n-k) x^{2k} = (-1)^n U_{2n}(x)";
        e.params = {rn0(), rx()};
        e.lhs = [](const Pt& pt) {
            Rational acc(0), pw(1), wk(1);
            Rational x2 = rat(pt.x * pt.x);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += wk * Rational(C(pt.n + k, pt.n - k)) * pw;
                pw *= x2;
                wk *= -4;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            return QuadElem(rat(sp(pt.n)) * cheb_eval(ChebKind::U, 2 * pt.n, rat(pt.x)));
        };
        e.poly_checkable = true;
    }
    {
        auto& e = add(out);
        e.id = "s4.thm3";
        e.anchor = "sum (-1)^k C(n+k,n-k) (2L_{2p}/(rt5 F_p))^{2k} = "
                   "(-1)^{n-p} (L_p^{4n+2} - 5^{2n+1} F_p^{4n+2})/(4 5^n F_{2p}^{2n})";
        e.note = "statement radicand uses rt5 F_p while the derivation sets x = "
                 "L_{2p}/(rt5 F_{2p}); with F_{2p} in the base it passes (the two readings "
                 "coincide only at p = +-1)";
        e.constraints = "p != 0";
        e.params = {rn0(), rp()};
        e.status = EntryStatus::TypoSuspect;
        e.admissible = [](const Pt& pt) { return pt.p != 0; };
        auto lhs_with = [](const Pt& pt, const Integer& fdenom) {
            Rational base = make_rational(4 * L(2 * pt.p) * L(2 * pt.p), 5 * fdenom * fdenom);
            Rational acc(0), pw(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp(k)) * Rational(C(pt.n + k, pt.n - k)) * pw;
                pw *= base;
            }
            return QuadElem(acc);
        };
        e.lhs = [lhs_with](const Pt& pt) { return lhs_with(pt, F(pt.p)); };
        e.rhs = [](const Pt& pt) {
            Rational num = ripow(L(pt.p), 4 * pt.n + 2) -
                           ripow(5, 2 * pt.n + 1) * ripow(F(pt.p), 4 * pt.n + 2);
            Rational den = Rational(4) * ripow(5, pt.n) * ripow(F(2 * pt.p), 2 * pt.n);
            return QuadElem(rat(sp(pt.n - pt.p)) * num / den);
        };
        e.corrected_lhs = [lhs_with](const Pt& pt) { return lhs_with(pt, F(2 * pt.p)); };
        e.corrected_rhs = e.rhs;
    }
    {
        auto& e = add(out);
        e.id = "s4.thm4";
        e.anchor = "sum (-1)^{(p-q)(n-k)} C(n+k,n-k) (F_{p+q}F_{p-q}/(F_p F_q))^{2k} = "
                   "(F_p^{4n+2} + (-1)^{p-q} F_q^{4n+2})/(F_q^{2n} F_p^{2n} "
                   "(F_p^2 + (-1)^{p-q} F_q^2))";
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
            Rational acc(0), pw(1);
            for (long long k = 0; k <= pt.n; ++k) {
                acc += rat(sp((pt.p - pt.q) * (pt.n - k))) *
                       Rational(C(pt.n + k, pt.n - k)) * pw;
                pw *= base;
            }
            return QuadElem(acc);
        };
        e.rhs = [](const Pt& pt) {
            Integer D = F(pt.p) * F(pt.p) + sp(pt.p - pt.q) * F(pt.q) * F(pt.q);
            Rational num = ripow(F(pt.p), 4 * pt.n + 2) +
                           rat(sp(pt.p - pt.q)) * ripow(F(pt.q), 4 * pt.n + 2);
            Rational den = ripow(F(pt.q), 2 * pt.n) * ripow(F(pt.p), 2 * pt.n) * Rational(D);
            return QuadElem(num / den);
        };
    }
}

}  // namespace

void build_sec4(std::vector<IdentityRecord>& out) {
    build_s4_thm1(out);
    build_s4_thm2(out);
    build_s4_examples(out);
    build_lem8_final(out);
}

}  // namespace fibcheb::cat
