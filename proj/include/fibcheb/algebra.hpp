#pragma once

// Exact arithmetic foundation: arbitrary-precision integers, canonical
// rationals, and quadratic extension towers
//
//   Q = Q_0  subset  Q_1 = Q_0(sqrt(s_1))  subset  Q_2 = Q_1(sqrt(s_2)) ...
//
// with componentwise structural equality.  An element of a depth-d tower is
// stored as 2^d rational coefficients over the basis of radical products;
// arithmetic recurses on the (low, high) halves, reducing sqrt(s_d)^2 = s_d.

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibcheb {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised on misuse of an operation (wrong tower, bad index, unknown id).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised on impossible exact arithmetic (division by zero, 0^negative).
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

// Canonical reduced rational with positive denominator; throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// gmpxx has no long long overloads; every 64-bit index goes through here.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

// base^e for integer exponents. 0^0 = 1; negative e inverts (throws on 0).
Integer int_pow(const Integer& base, unsigned long e);
Rational rat_pow(const Rational& base, long long e);

// (-1)^e computed in the integers via parity.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

bool is_perfect_square(const Integer& n);
bool is_rational_square(const Rational& r);

// Canonical text form: '-'? digits ('/' digits)?
std::string rat_str(const Rational& r);
Rational parse_rational(std::string_view text);

class Tower;
class QuadElem;
using TowerPtr = std::shared_ptr<const Tower>;

// A tower of quadratic extensions over Q.  Level 0 is Q itself; level i
// adjoins the square root of a nonzero, provably-or-assumed nonsquare
// element of level i-1.  Immutable and shareable across threads.
class Tower {
  public:
    // The trivial tower Q.
    static const TowerPtr& rationals();
    // Q(sqrt(5)), home of the golden ratio conjugates.
    static const TowerPtr& sqrt5();
    // Q(sqrt(-1)), the Gaussian rationals.
    static const TowerPtr& gauss();

    // Extends `base` by sqrt(radicand); radicand must live in `base`.
    // Rejects zero radicands and purely rational perfect squares.
    static TowerPtr adjoin(const TowerPtr& base, const QuadElem& radicand);

    int depth() const { return static_cast<int>(rads_.size()); }
    std::size_t span() const { return std::size_t(1) << depth(); }

    // Coefficients of the radicand adjoined on top of level `level`
    // (a vector of 2^level rationals).
    const std::vector<Rational>& radicand(int level) const;

    bool same(const Tower& other) const;

  private:
    friend class QuadElem;
    Tower() = default;
    std::vector<std::vector<Rational>> rads_;
};

// One exact element of a quadratic extension tower.  Values are immutable;
// all operations are pure and safe to run concurrently.
class QuadElem {
  public:
    QuadElem();                          // 0 in Q
    QuadElem(Rational r);                // rational in Q
    QuadElem(long long v) : QuadElem(Rational(static_cast<long>(v))) {}

    static QuadElem from_rational(TowerPtr tower, Rational r);
    // sqrt(s_{level+1}) as an element of `tower`; level in [0, depth).
    static QuadElem root(TowerPtr tower, int level);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;            // all radical coefficients zero
    // The level-0 coefficient; equals the value when is_rational().
    const Rational& rational_part() const { return c_[0]; }
    Rational rational_value() const;     // throws unless is_rational()

    // Explicit embedding into a taller tower built on top of this one.
    QuadElem lift(const TowerPtr& target) const;

    QuadElem operator-() const;
    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator/(const QuadElem& a, const QuadElem& b);

    // Exact x^e via binary exponentiation; negative e inverts first.
    QuadElem pow(long long e) const;

    // Structural equality on normalized components; requires the same tower.
    bool operator==(const QuadElem& other) const;
    bool operator!=(const QuadElem& other) const { return !(*this == other); }

    // Canonical grammar:  elem := comp (' + ' comp '*rt(' radicand ')')?
    // Components of nested towers and non-rational radicands are printed
    // fully parenthesized.  Bit-exact and locale-independent.
    std::string str() const;

  private:
    QuadElem(TowerPtr t, std::vector<Rational> c);
    static void check_same_tower(const QuadElem& a, const QuadElem& b);

    TowerPtr tower_;
    std::vector<Rational> c_;            // size = tower_->span()
};

// Parses the canonical grammar; the result lives in the tower spelled out
// by the text itself, so parse(print(x)) == x structurally.
QuadElem parse_elem(std::string_view text);

// The golden ratio conjugates alpha = (1+sqrt5)/2, beta = (1-sqrt5)/2
// as elements of Tower::sqrt5().
std::pair<QuadElem, QuadElem> golden();
// sqrt(5) in Tower::sqrt5().
QuadElem sqrt5_elem();
// i in Tower::gauss().
QuadElem gauss_i();

}  // namespace fibcheb
