#pragma once

#include "wenum/rational.hpp"

#include <iosfwd>
#include <string>
#include <utility>

namespace wenum {

/// An exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Values are immutable in spirit: every operation returns a fresh value and
/// never touches floating point. Canonical form is inherited from Rational
/// (coprime numerator/denominator, positive denominator), so operator== is
/// exact structural equality.
class QuadRat {
  public:
    QuadRat() : a_(0), b_(0) {}
    QuadRat(long v) : a_(v), b_(0) {}
    QuadRat(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    const Rational& a() const { return a_; } // coefficient of 1
    const Rational& b() const { return b_; } // coefficient of sqrt(2)

    static QuadRat sqrt2() { return QuadRat(0, 1); }
    static QuadRat rho() { return QuadRat(-1, 1); }  // sqrt(2) - 1
    static QuadRat mu() { return QuadRat(-1, -1); }  // -sqrt(2) - 1

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Field automorphism sending sqrt(2) to -sqrt(2) (and rho to mu).
    QuadRat conj() const { return QuadRat(a_, -b_); }

    /// Exact sign of the real value a + b*sqrt(2): -1, 0, or +1.
    /// Mixed-sign components are resolved by comparing a^2 against 2*b^2.
    int sign() const;

    /// Coordinates (c, d) with value = c + d*rho, i.e. c = a + b, d = b.
    std::pair<Rational, Rational> to_rho_basis() const {
        return {a_ + b_, b_};
    }
    static QuadRat from_rho_basis(const Rational& c, const Rational& d) {
        return QuadRat(c - d, d);
    }

    QuadRat operator-() const { return QuadRat(-a_, -b_); }
    QuadRat& operator+=(const QuadRat& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadRat& operator-=(const QuadRat& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadRat& operator*=(const QuadRat& o);
    QuadRat& operator/=(const QuadRat& o);

    friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
    friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
    friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
    friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }
    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

    /// Display-only decimal approximation; never used in any computation.
    double approx() const;

  private:
    Rational a_, b_;
};

/// rho^k for any integer k; rho^-1 = -mu = 1 + sqrt(2).
QuadRat rho_pow(long k);

/// (sqrt 2)^m for m >= 0.
QuadRat sqrt2_pow(unsigned m);

/// Textual form "<d>*p + <c>" in the rho basis, e.g. "-1167936*p + 483776".
/// The sign of c is folded into the separator ("+"/"-"); d keeps its own sign.
std::string to_rho_string(const QuadRat& x);
QuadRat parse_rho_string(const std::string& text);

std::ostream& operator<<(std::ostream& os, const QuadRat& x);

} // namespace wenum
