#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cheb {

// Exact arbitrary-precision rational, always in lowest terms with a
// positive denominator (mpq_class canonicalizes on construction and
// after every arithmetic operation).
using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a", "a/b" and plain decimal/scientific notation ("1e-12",
// "0.25"); always exact.
Rational parse_rational(const std::string& text);

// pow with a non-negative integer exponent
Rational rat_pow(const Rational& base, unsigned long e);

// Round-half-even decimal string with exactly `frac_digits` digits after
// the point.
std::string decimal_string(const Rational& r, int frac_digits);

// Round-half-even decimal string carrying `sig_digits` significant digits
// (the style used by the built-in tables: 4.409091, 29.71074, 562.3850). Values in (-1,1)
// fall back to `sig_digits` fractional digits.
std::string significant_string(const Rational& r, int sig_digits = 7);

std::string fraction_string(const Rational& r);  // "num/den"

}  // namespace cheb
