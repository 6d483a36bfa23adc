#pragma once

// Dense univariate polynomials with exact rational coefficients.

#include "fibcheb/algebra.hpp"

namespace fibcheb {

class Poly {
  public:
    Poly() = default;                                 // zero polynomial
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> coeffs);      // index = degree
    static Poly monomial(std::size_t degree, Rational coeff);
    static Poly x() { return monomial(1, Rational(1)); }

    // -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of x^i (0 beyond the stored degree).
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    bool operator==(const Poly& other) const { return c_ == other.c_; }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Quotient by x^k; requires the low k coefficients to vanish.
    Poly shift_down(std::size_t k) const;

    Rational eval(const Rational& x) const;
    QuadElem eval(const QuadElem& x) const;

    // `c_k*x^k + ...` in descending degree, omitting zero terms; "0" when zero.
    std::string str() const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

// Formal derivative with exact coefficients.
Poly poly_derivative(const Poly& p);

}  // namespace fibcheb
