#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dha {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// n (n-1) ... (n-k+1); zero when k > n
inline Int falling_factorial(long n, long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline Int int_pow(const Int& base, long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

// "p/q" with the denominator omitted when it is 1
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
    return Rat(num, den);
}

} // namespace dha
