#include "fibcheb/poly.hpp"

namespace fibcheb {

Poly::Poly(Rational constant) {
    c_.push_back(std::move(constant));
    normalize();
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(std::size_t degree, Rational coeff) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
    return Poly(std::move(c));
}

Poly Poly::shift_down(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
        if (c_[i] != 0) throw UsageError("shift_down would drop a nonzero coefficient");
    if (c_.size() <= k) return Poly();
    return Poly(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QuadElem Poly::eval(const QuadElem& x) const {
    QuadElem acc = QuadElem::from_rational(x.tower(), Rational(0));
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + QuadElem::from_rational(x.tower(), c_[i]);
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(c_[i]) + "*x^" + std::to_string(i);
    }
    return out;
}

Poly poly_derivative(const Poly& p) {
    if (p.degree() <= 0) return Poly();
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()), Rational(0));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(p.degree()); ++i)
        c[i - 1] = to_rational(static_cast<long long>(i)) * p.coeff(i);
    return Poly(std::move(c));
}

}  // namespace fibcheb
