#include "wenum/quadrat.hpp"

#include "wenum/error.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace wenum {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rational rational_from_string(const std::string& text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t\r\n");
    if (begin == std::string::npos)
        throw Error(ErrorKind::MalformedInput, "bad rational: '" + text + "'");
    try {
        return Rational(text.substr(begin, end - begin + 1));
    } catch (const std::exception&) {
        throw Error(ErrorKind::MalformedInput, "bad rational: '" + text + "'");
    }
}

QuadRat& QuadRat::operator*=(const QuadRat& o) {
    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + a2 b1) s, s = sqrt 2
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadRat& QuadRat::operator/=(const QuadRat& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in Q(sqrt 2)");
    // 1/(a + b s) = (a - b s) / (a^2 - 2 b^2); the norm is nonzero for any
    // nonzero element since sqrt 2 is irrational.
    Rational norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
    Rational a = (a_ * o.a_ - 2 * b_ * o.b_) / norm;
    Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

int QuadRat::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // Components disagree: compare |a| against |b| sqrt 2 via squares.
    Rational a2 = a_ * a_;
    Rational b2 = 2 * b_ * b_;
    if (a2 == b2) return 0; // only possible when a = b = 0, handled above
    bool rational_part_wins = a2 > b2;
    return rational_part_wins ? sa : sb;
}

double QuadRat::approx() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * 1.4142135623730951;
}

QuadRat rho_pow(long k) {
    QuadRat base = k >= 0 ? QuadRat::rho() : -QuadRat::mu(); // rho^-1 = -mu
    unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    QuadRat result(1);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

QuadRat sqrt2_pow(unsigned m) {
    QuadRat result(1);
    Rational two_pow = Int(1) << (m / 2);
    result *= QuadRat(two_pow, 0);
    if (m % 2) result *= QuadRat::sqrt2();
    return result;
}

std::string to_rho_string(const QuadRat& x) {
    auto [c, d] = x.to_rho_basis();
    std::ostringstream os;
    os << d << "*p ";
    if (c.sign() < 0) {
        os << "- " << -c;
    } else {
        os << "+ " << c;
    }
    return os.str();
}

QuadRat parse_rho_string(const std::string& text) {
    auto pos = text.find("*p");
    if (pos == std::string::npos)
        throw Error(ErrorKind::MalformedInput, "expected '<d>*p + <c>', got '" + text + "'");
    Rational d = rational_from_string(text.substr(0, pos));
    size_t i = pos + 2;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw Error(ErrorKind::MalformedInput, "missing +/- in '" + text + "'");
    bool neg = text[i] == '-';
    ++i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    Rational c = rational_from_string(text.substr(i));
    if (neg) c = -c;
    return QuadRat::from_rho_basis(c, d);
}

std::ostream& operator<<(std::ostream& os, const QuadRat& x) {
    return os << to_rho_string(x);
}

} // namespace wenum
