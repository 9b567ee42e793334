#pragma once

#include <map>

#include "cheb/rational.hpp"

namespace cheb {

struct AbelianShape {
    std::map<long, int> prime_ranks;  // p -> r_p
    int delta = 0;                    // max r_p = minimal generating-set size

    static AbelianShape from_factors(const std::vector<long>& invariant_factors);
};

struct CertifiedValue {
    Rational lower, upper;
    Rational width() const { return upper - lower; }
};

// cyclic groups
Rational cheb_cyclic(long n);  // 1 for n = 1
Rational sec_cyclic(long n);

// elementary abelian F_p^k
Rational cheb_elementary(long p, long k);
Rational sec_elementary(long p, long k);
// p-binomial cross-checks; must equal the two formulas above exactly
Rational cheb_elementary_qbinomial(long p, long k);
Rational sec_elementary_qbinomial(long p, long k);

// general abelian groups via the rank series, with a certified tail
CertifiedValue cheb_abelian(const AbelianShape& shape, const Rational& tol);
CertifiedValue sec_abelian(const AbelianShape& shape, const Rational& tol);

// limsup of cheb_cyclic: 2 + sum_{k>=2} (1 - 1/zeta(k))
CertifiedValue niven_limit(const Rational& tol);

// one-dimensional affine group over F_q (order q(q-1)); q >= 2 a prime power
Rational cheb_affine(long q);
Rational sec_affine(long q);

}  // namespace cheb
