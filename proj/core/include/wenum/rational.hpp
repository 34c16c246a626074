#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wenum {

// All arithmetic in this library is exact. Int/Rational are arbitrary
// precision; entries of the bundled length-72 vectors are around 2.8e25 and
// do not fit in any fixed-width integer type.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Exact binomial coefficient; 0 for k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int c = 1;
    for (long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i; // exact: c is C(n-k+i, i) after this step
    }
    return c;
}

// "num" or "num/den"; this is also the form cpp_rational streams as.
std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

} // namespace wenum
