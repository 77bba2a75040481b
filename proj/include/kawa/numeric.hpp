#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kawa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// All floating-point work is done at a fixed 50 significant decimal digits
// (~166 bits), well above the default 128-bit working precision requested by
// EvalConfig.
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline constexpr int kRealDecimalDigits = 50;

// Exact binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// Renders a rational as "p/q" in lowest terms with the sign on the numerator.
// Integers render as "p/1" so the format round-trips uniformly.
inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << '/' << denominator(r);
    return os.str();
}

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

// Decimal rendering with enough digits to read back without loss at the
// working precision.
inline std::string real_str(const Real& x) {
    std::ostringstream os;
    os.precision(kRealDecimalDigits);
    os << x;
    return os.str();
}

inline std::string complex_str(const Complex& z) {
    if (z.imag() == 0) return real_str(z.real());
    return real_str(z.real()) + (z.imag() < 0 ? "-" : "+") +
           real_str(abs(z.imag())) + "i";
}

inline Real to_real(const Rational& r) {
    return Real(numerator(r)) / Real(denominator(r));
}

// Scalar helpers so evaluators can be written once for Real and Complex.
inline Real scalar_abs(const Real& x) { return abs(x); }
inline Real scalar_abs(const Complex& z) { return abs(z); }
inline Real scalar_real(const Real& x) { return x; }
inline Real scalar_real(const Complex& z) { return z.real(); }

}  // namespace kawa
