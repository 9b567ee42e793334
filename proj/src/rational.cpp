#include "cheb/rational.hpp"

#include <cctype>

namespace cheb {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num, den;
        if (num.set_str(text.substr(0, slash), 10) != 0 ||
            den.set_str(text.substr(slash + 1), 10) != 0)
            throw Error("bad rational literal: " + text);
        return rat(num, den);
    }
    // decimal / scientific notation, parsed exactly
    std::string s = text;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(s.substr(epos + 1));
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(s.size() - dot - 1);
        s.erase(dot, 1);
    }
    if (s.empty() || s == "-" || s == "+") throw Error("bad rational literal: " + text);
    Integer mant;
    if (mant.set_str(s, 10) != 0) throw Error("bad rational literal: " + text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 < 0 ? rat(mant, scale) : rat(mant * scale, Integer(1));
}

Rational rat_pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;  // powers of a canonical fraction stay canonical
}

namespace {

// Numerator digits of |r|*10^frac rounded half-to-even, returned as a
// decimal digit string (no sign, no point).
std::string scaled_digits(const Rational& r, int frac_digits) {
    Integer n = abs(r.get_num());
    Integer d = r.get_den();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
    n *= scale;
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Integer twice = 2 * rem;
    if (twice > d || (twice == d && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    return q.get_str();
}

std::string place_point(std::string digits, int frac_digits, bool negative) {
    if (static_cast<int>(digits.size()) <= frac_digits)
        digits.insert(0, frac_digits + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - frac_digits);
    if (frac_digits > 0) {
        out += '.';
        out += digits.substr(digits.size() - frac_digits);
    }
    if (negative && out.find_first_not_of("0.") != std::string::npos)
        out.insert(0, 1, '-');
    return out;
}

}  // namespace

std::string decimal_string(const Rational& r, int frac_digits) {
    if (frac_digits < 0) throw Error("negative digit count");
    return place_point(scaled_digits(r, frac_digits), frac_digits, sgn(r) < 0);
}

std::string significant_string(const Rational& r, int sig_digits) {
    if (sig_digits < 1) throw Error("need at least one significant digit");
    Integer ip = abs(r.get_num()) / r.get_den();
    int int_digits = (ip == 0) ? 0 : static_cast<int>(ip.get_str().size());
    int frac = sig_digits - int_digits;
    if (frac < 0) frac = 0;
    std::string digits = scaled_digits(r, frac);
    // rounding may push the value into the next decade (9.99995 -> 10.0000);
    // re-round so the digit budget is respected
    if (int_digits > 0 && static_cast<int>(digits.size()) > sig_digits && frac > 0) {
        frac -= 1;
        digits = scaled_digits(r, frac);
    }
    return place_point(digits, frac, sgn(r) < 0);
}

std::string fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace cheb
