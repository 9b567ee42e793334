#include "cheb/closed_forms.hpp"

#include "cheb/numtheory.hpp"

namespace cheb {

namespace {

Integer ipow(long base, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

Rational inv_pow(long p, long e) {  // p^{-e}, e >= 0
    return rat(Integer(1), ipow(p, static_cast<unsigned long>(e)));
}

// the Mobius sum itself, which is 0 for n = 1 (the public sec_cyclic maps
// the trivial group to 1 instead)
Rational sec_cyclic_sum(long n) {
    Rational s = 0;
    for (long d : squarefree_divisors(n)) {
        if (d == 1) continue;
        // -mu(d) (1+1/d)/(1-1/d)^2 = -mu(d) d(d+1)/(d-1)^2
        Rational term = rat(Integer(d) * (d + 1), Integer(d - 1) * (d - 1));
        s += mobius(d) < 0 ? term : -term;
    }
    return s;
}

}  // namespace

AbelianShape AbelianShape::from_factors(const std::vector<long>& invariant_factors) {
    if (invariant_factors.empty()) throw Error("abelian shape needs at least one factor");
    AbelianShape s;
    for (long f : invariant_factors) {
        if (f < 1) throw Error("abelian factor must be >= 1");
        for (auto [p, e] : factorize(f)) s.prime_ranks[p] += 1;
    }
    for (auto [p, r] : s.prime_ranks) s.delta = std::max(s.delta, r);
    return s;
}

Rational cheb_cyclic(long n) {
    if (n < 1) throw Error("cheb_cyclic needs n >= 1");
    if (n == 1) return 1;
    Rational c = 0;
    for (long d : squarefree_divisors(n)) {
        if (d == 1) continue;
        Rational term = rat(d, d - 1);  // 1/(1 - 1/d)
        c += mobius(d) < 0 ? term : -term;
    }
    return c;
}

Rational sec_cyclic(long n) {
    if (n < 1) throw Error("sec_cyclic needs n >= 1");
    if (n == 1) return 1;
    return sec_cyclic_sum(n);
}

Rational cheb_elementary(long p, long k) {
    if (!is_prime(p)) throw Error("cheb_elementary needs prime p");
    if (k < 1) throw Error("cheb_elementary needs k >= 1");
    Rational c = k;
    for (long j = 1; j <= k; ++j) c += rat(Integer(1), ipow(p, j) - 1);
    return c;
}

Rational sec_elementary(long p, long k) {
    Rational c = cheb_elementary(p, k);
    Rational s = c * c;
    for (long j = 1; j <= k; ++j) {
        Integer pj = ipow(p, j);
        s += rat(pj, (pj - 1) * (pj - 1));
    }
    return s;
}

namespace {

Integer qbinom(long p, long k, long j) {
    Rational b = 1;
    for (long i = 0; i < j; ++i)
        b *= rat(ipow(p, k - i) - 1, ipow(p, i + 1) - 1);
    if (b.get_den() != 1) throw Error("p-binomial did not reduce to an integer");
    return b.get_num();
}

Rational qbinomial_sum(long p, long k, bool second) {
    if (!is_prime(p)) throw Error("q-binomial formulas need prime p");
    if (k < 1) throw Error("q-binomial formulas need k >= 1");
    Rational total = 0;
    for (long j = 1; j <= k; ++j) {
        Integer pj = ipow(p, j);
        Rational f = second ? rat((pj + 1) * pj, (pj - 1) * (pj - 1))  // (1+x)/(1-x)^2, x=p^-j
                            : rat(pj, pj - 1);                         // 1/(1-x)
        Rational term = f * qbinom(p, k, j) * ipow(p, j * (j - 1) / 2);
        total += (j % 2 == 1) ? term : -term;
    }
    return total;
}

}  // namespace

Rational cheb_elementary_qbinomial(long p, long k) { return qbinomial_sum(p, k, false); }
Rational sec_elementary_qbinomial(long p, long k) { return qbinomial_sum(p, k, true); }

namespace {

// 1 - prod_p prod_{i=1..r_p} (1 - p^{-(delta+j-i)})
Rational rank_term(const AbelianShape& s, long j) {
    Rational prod = 1;
    for (auto [p, r] : s.prime_ranks)
        for (int i = 1; i <= r; ++i) prod *= 1 - inv_pow(p, s.delta + j - i);
    return 1 - prod;
}

// per-(p,i) coefficients a = p^{-(delta-i)} of the geometric bound
// term_j <= sum a * p^{-j}
std::vector<std::pair<long, Rational>> tail_coeffs(const AbelianShape& s) {
    std::vector<std::pair<long, Rational>> out;
    for (auto [p, r] : s.prime_ranks)
        for (int i = 1; i <= r; ++i) out.emplace_back(p, inv_pow(p, s.delta - i));
    return out;
}

}  // namespace

CertifiedValue cheb_abelian(const AbelianShape& shape, const Rational& tol) {
    if (tol <= 0) throw Error("tolerance must be positive");
    if (shape.prime_ranks.empty()) return {1, 1};  // trivial group
    auto coeffs = tail_coeffs(shape);
    Rational S = 0;
    for (long j = 1;; ++j) {
        S += rank_term(shape, j);
        // sum_{j' > j} of the geometric bound
        Rational tail = 0;
        for (const auto& [p, a] : coeffs)
            tail += a * inv_pow(p, j + 1) * rat(p, p - 1);
        if (tail <= tol) {
            Rational base = shape.delta + S;
            return {base, base + tail};
        }
    }
}

CertifiedValue sec_abelian(const AbelianShape& shape, const Rational& tol) {
    if (tol <= 0) throw Error("tolerance must be positive");
    if (shape.prime_ranks.empty()) return {1, 1};  // trivial group
    auto coeffs = tail_coeffs(shape);
    long delta = shape.delta;
    Rational S = 0;
    for (long j = 1;; ++j) {
        S += (2 * j + 2 * delta - 1) * rank_term(shape, j);
        Rational tail = 0;
        for (const auto& [p, a] : coeffs) {
            Rational x = rat(1, p);
            Rational xj = inv_pow(p, j + 1);  // x^{j+1}
            Rational geo = xj / (1 - x);
            Rational jgeo = xj * ((j + 1) - Rational(j) * x) / ((1 - x) * (1 - x));
            tail += a * (2 * jgeo + (2 * delta - 1) * geo);
        }
        if (tail <= tol) {
            Rational base = Rational(delta) * delta + S;
            return {base, base + tail};
        }
    }
}

namespace {

// Euler-Maclaurin enclosure of zeta(k), k >= 2
CertifiedValue zeta_enclosure(long k, const Rational& tol) {
    long N = 2;
    // -> Rational matters: gmpxx expression templates must not outlive their operands
    auto em_error = [&](long n) -> Rational {
        return rat(Integer(k) * (k + 1) * (k + 2), 720) /
               Rational(ipow(n, static_cast<unsigned long>(k + 3)));
    };
    while (em_error(N) > tol) N *= 2;
    Rational S = 0;
    for (long n = 1; n <= N; ++n) S += rat(Integer(1), ipow(n, static_cast<unsigned long>(k)));
    Rational upper = S + rat(Integer(1), Integer(k - 1) * ipow(N, static_cast<unsigned long>(k - 1))) -
                     rat(Integer(1), 2 * ipow(N, static_cast<unsigned long>(k))) +
                     rat(Integer(k), 12 * ipow(N, static_cast<unsigned long>(k + 1)));
    return {upper - em_error(N), upper};
}

}  // namespace

CertifiedValue niven_limit(const Rational& tol) {
    if (tol <= 0) throw Error("tolerance must be positive");
    // truncation over k: sum_{k>=K} (1 - 1/zeta(k)) <= (1 + 2/(K-1)) 2^{1-K}
    auto k_tail = [](long K) -> Rational {
        return rat(2 * (K - 1) + 4, K - 1) * rat(Integer(1), ipow(2, static_cast<unsigned long>(K)));
    };
    long K = 2;
    while (k_tail(K) > tol / 2) ++K;
    Rational lo = 2, hi = 2;
    if (K > 2) {
        Rational per_k = (tol / 2) / (K - 2);
        for (long k = 2; k < K; ++k) {
            CertifiedValue z = zeta_enclosure(k, per_k);
            lo += 1 - 1 / z.lower;
            hi += 1 - 1 / z.upper;
        }
    }
    hi += k_tail(K);
    return {lo, hi};
}

Rational cheb_affine(long q) {
    if (q < 2) throw Error("affine formulas need q >= 2");
    if (prime_power_base(q).first == 0) throw Error("q must be a prime power");
    Rational c = q;
    for (long d : squarefree_divisors(q - 1)) {
        if (d == 1) continue;
        Rational term = rat(1, q) / ((1 - rat(1, d)) * (1 - rat(1, d) + rat(1, q)));
        c -= mobius(d) * term;
    }
    return c;
}

Rational sec_affine(long q) {
    if (q < 2) throw Error("affine formulas need q >= 2");
    if (prime_power_base(q).first == 0) throw Error("q must be a prime power");
    Rational s = Rational(q) * (2 * q - 1) + sec_cyclic_sum(q - 1);
    for (long d : squarefree_divisors(q - 1)) {
        if (d == 1) continue;
        Rational denom = 1 - rat(1, d) + rat(1, q);
        s += mobius(d) * (1 + rat(1, d) - rat(1, q)) / (denom * denom);
    }
    return s;
}

}  // namespace cheb
