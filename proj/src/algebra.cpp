#include "fibcheb/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace fibcheb {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rational rat_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw ArithmeticError("0 raised to a negative power");
        b = Rational(base.get_den(), base.get_num());
        b.canonicalize();
        e = -e;
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_rational_square(const Rational& r) {
    if (r < 0) return false;
    return is_perfect_square(Integer(r.get_num())) && is_perfect_square(Integer(r.get_den()));
}

std::string rat_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t after_num = digits(i);
    if (after_num == i) throw UsageError("malformed rational: " + std::string(text));
    i = after_num;
    if (i < text.size() && text[i] == '/') {
        std::size_t after_den = digits(i + 1);
        if (after_den == i + 1) throw UsageError("malformed rational: " + std::string(text));
        i = after_den;
    }
    if (i != text.size()) throw UsageError("malformed rational: " + std::string(text));
    Rational r;
    if (r.set_str(std::string(text), 10) != 0)
        throw UsageError("malformed rational: " + std::string(text));
    if (r.get_den() == 0) throw ArithmeticError("rational with zero denominator");
    r.canonicalize();
    return r;
}

namespace {

using Vec = std::vector<Rational>;

bool vec_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r == 0; });
}

Vec vec_neg(const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec lo_half(const Vec& a) { return Vec(a.begin(), a.begin() + a.size() / 2); }
Vec hi_half(const Vec& a) { return Vec(a.begin() + a.size() / 2, a.end()); }

Vec vec_concat(Vec lo, Vec hi) {
    lo.insert(lo.end(), std::make_move_iterator(hi.begin()), std::make_move_iterator(hi.end()));
    return lo;
}

// (a_lo + a_hi r)(b_lo + b_hi r) with r^2 = s_d, recursing into level d-1.
Vec vec_mul(const Tower& t, int d, const Vec& a, const Vec& b) {
    if (d == 0) return {a[0] * b[0]};
    Vec alo = lo_half(a), ahi = hi_half(a);
    Vec blo = lo_half(b), bhi = hi_half(b);
    Vec lolo = vec_mul(t, d - 1, alo, blo);
    Vec hihi = vec_mul(t, d - 1, ahi, bhi);
    Vec cross = vec_add(vec_mul(t, d - 1, alo, bhi), vec_mul(t, d - 1, ahi, blo));
    Vec lo = vec_add(lolo, vec_mul(t, d - 1, hihi, t.radicand(d - 1)));
    return vec_concat(std::move(lo), std::move(cross));
}

// 1/(x + y r) = (x - y r)/(x^2 - s y^2); the norm lives one level down.
Vec vec_inv(const Tower& t, int d, const Vec& a) {
    if (d == 0) {
        if (a[0] == 0) throw ArithmeticError("division by zero");
        Rational inv(a[0].get_den(), a[0].get_num());
        inv.canonicalize();
        return {inv};
    }
    Vec x = lo_half(a), y = hi_half(a);
    Vec norm = vec_sub(vec_mul(t, d - 1, x, x),
                       vec_mul(t, d - 1, t.radicand(d - 1), vec_mul(t, d - 1, y, y)));
    if (vec_zero(norm)) throw ArithmeticError("division by zero");
    Vec norm_inv = vec_inv(t, d - 1, norm);
    Vec lo = vec_mul(t, d - 1, x, norm_inv);
    Vec hi = vec_neg(vec_mul(t, d - 1, y, norm_inv));
    return vec_concat(std::move(lo), std::move(hi));
}

std::string elem_str(const Tower& t, int d, const Vec& c) {
    if (d == 0) return rat_str(c[0]);
    std::string lo = elem_str(t, d - 1, lo_half(c));
    std::string hi = elem_str(t, d - 1, hi_half(c));
    const Vec& rad = t.radicand(d - 1);
    std::string rs = (d - 1 == 0) ? rat_str(rad[0]) : "(" + elem_str(t, d - 1, rad) + ")";
    if (d - 1 > 0) {
        lo = "(" + lo + ")";
        hi = "(" + hi + ")";
    }
    return lo + " + " + hi + "*rt(" + rs + ")";
}

}  // namespace

const TowerPtr& Tower::rationals() {
    static const TowerPtr t(new Tower());
    return t;
}

const TowerPtr& Tower::sqrt5() {
    static const TowerPtr t = adjoin(rationals(), QuadElem(Rational(5)));
    return t;
}

const TowerPtr& Tower::gauss() {
    static const TowerPtr t = adjoin(rationals(), QuadElem(Rational(-1)));
    return t;
}

TowerPtr Tower::adjoin(const TowerPtr& base, const QuadElem& radicand) {
    if (!base->same(*radicand.tower()))
        throw UsageError("radicand does not live in the base tower");
    if (radicand.is_zero()) throw UsageError("zero radicand");
    if (radicand.is_rational() && is_rational_square(radicand.rational_part()))
        throw UsageError("radicand is a perfect square in the base field");
    auto t = std::shared_ptr<Tower>(new Tower());
    t->rads_ = base->rads_;
    t->rads_.push_back(radicand.coeffs());
    return t;
}

const std::vector<Rational>& Tower::radicand(int level) const {
    if (level < 0 || level >= depth()) throw UsageError("tower level out of range");
    return rads_[static_cast<std::size_t>(level)];
}

bool Tower::same(const Tower& other) const { return rads_ == other.rads_; }

QuadElem::QuadElem() : tower_(Tower::rationals()), c_{Rational(0)} {}

QuadElem::QuadElem(Rational r) : tower_(Tower::rationals()), c_{std::move(r)} {}

QuadElem::QuadElem(TowerPtr t, std::vector<Rational> c) : tower_(std::move(t)), c_(std::move(c)) {}

QuadElem QuadElem::from_rational(TowerPtr tower, Rational r) {
    std::vector<Rational> c(tower->span(), Rational(0));
    c[0] = std::move(r);
    return QuadElem(std::move(tower), std::move(c));
}

QuadElem QuadElem::root(TowerPtr tower, int level) {
    if (level < 0 || level >= tower->depth()) throw UsageError("tower level out of range");
    std::vector<Rational> c(tower->span(), Rational(0));
    c[std::size_t(1) << level] = Rational(1);
    return QuadElem(std::move(tower), std::move(c));
}

bool QuadElem::is_zero() const { return vec_zero(c_); }

bool QuadElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational QuadElem::rational_value() const {
    if (!is_rational()) throw UsageError("value has a nonzero radical part");
    return c_[0];
}

QuadElem QuadElem::lift(const TowerPtr& target) const {
    const int d = tower_->depth();
    if (target->depth() < d) throw UsageError("lift target is shallower than the source tower");
    for (int i = 0; i < d; ++i)
        if (target->radicand(i) != tower_->radicand(i))
            throw UsageError("lift target does not extend the source tower");
    std::vector<Rational> c(target->span(), Rational(0));
    std::copy(c_.begin(), c_.end(), c.begin());
    return QuadElem(target, std::move(c));
}

void QuadElem::check_same_tower(const QuadElem& a, const QuadElem& b) {
    if (!a.tower_->same(*b.tower_))
        throw UsageError("operands live in different towers; lift explicitly first");
}

QuadElem QuadElem::operator-() const { return QuadElem(tower_, vec_neg(c_)); }

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    QuadElem::check_same_tower(a, b);
    return QuadElem(a.tower_, vec_add(a.c_, b.c_));
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    QuadElem::check_same_tower(a, b);
    return QuadElem(a.tower_, vec_sub(a.c_, b.c_));
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    QuadElem::check_same_tower(a, b);
    return QuadElem(a.tower_, vec_mul(*a.tower_, a.tower_->depth(), a.c_, b.c_));
}

QuadElem operator/(const QuadElem& a, const QuadElem& b) {
    QuadElem::check_same_tower(a, b);
    return QuadElem(a.tower_,
                    vec_mul(*a.tower_, a.tower_->depth(), a.c_,
                            vec_inv(*a.tower_, a.tower_->depth(), b.c_)));
}

QuadElem QuadElem::pow(long long e) const {
    QuadElem base = *this;
    if (e < 0) {
        if (is_zero()) throw ArithmeticError("0 raised to a negative power");
        base = QuadElem(tower_, vec_inv(*tower_, tower_->depth(), c_));
        e = -e;
    }
    QuadElem acc = from_rational(tower_, Rational(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool QuadElem::operator==(const QuadElem& other) const {
    check_same_tower(*this, other);
    return c_ == other.c_;
}

std::string QuadElem::str() const { return elem_str(*tower_, tower_->depth(), c_); }

namespace {

// Recursive-descent parser for the canonical grammar.
struct ElemParser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail() { throw UsageError("malformed element text: " + std::string(s)); }

    bool eat(std::string_view tok) {
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    Rational rat() {
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        std::size_t d0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d0) fail();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t d1 = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == d1) fail();
        }
        return parse_rational(s.substr(start, pos - start));
    }

    QuadElem component() {
        if (eat("(")) {
            QuadElem e = elem();
            if (!eat(")")) fail();
            return e;
        }
        return QuadElem(rat());
    }

    QuadElem elem() {
        QuadElem lo = component();
        if (!eat(" + ")) return lo;
        QuadElem hi = component();
        if (!eat("*rt(")) fail();
        QuadElem rad = component();
        if (!eat(")")) fail();
        if (!lo.tower()->same(*hi.tower()) || !lo.tower()->same(*rad.tower())) fail();
        TowerPtr t = Tower::adjoin(lo.tower(), rad);
        std::vector<Rational> c = lo.coeffs();
        c.insert(c.end(), hi.coeffs().begin(), hi.coeffs().end());
        return QuadElem::from_rational(t, Rational(0)) + QuadElem::root(t, t->depth() - 1) * hi.lift(t) + lo.lift(t);
    }
};

}  // namespace

QuadElem parse_elem(std::string_view text) {
    ElemParser p{text};
    QuadElem e = p.elem();
    if (p.pos != text.size()) p.fail();
    return e;
}

std::pair<QuadElem, QuadElem> golden() {
    const TowerPtr& t = Tower::sqrt5();
    QuadElem half = QuadElem::from_rational(t, Rational(1, 2));
    QuadElem half_rt = QuadElem::root(t, 0) * half;
    return {half + half_rt, half - half_rt};
}

QuadElem sqrt5_elem() { return QuadElem::root(Tower::sqrt5(), 0); }

QuadElem gauss_i() { return QuadElem::root(Tower::gauss(), 0); }

}  // namespace fibcheb
