#include "cheb/engine.hpp"

#include <functional>

namespace cheb {

namespace {

// Visit every nonempty subset of the listed rows with the sign
// (-1)^{|I|+1} and the integer weight W = |G| * nu(H_I^#) -- except for
// subsets whose contributions provably cancel.  Subsets are walked as a
// tree ordered by the lowest picked row, carrying the columns still in
// the running intersection.  If a not-yet-picked row contains every one
// of those columns, toggling it pairs each remaining subset with one of
// equal weight and opposite sign, so the whole subtree sums to zero and
// is skipped.  This collapses the nominal 2^rows walk to the lattice of
// distinct intersections; profiles whose maximal classes pairwise meet
// only in the identity finish in quadratic time.
void sweep(const GenerationProfile& p, const std::vector<size_t>& rows,
           const std::function<void(int sign, const Integer& W)>& visit) {
    for (size_t r : rows)
        if (r >= p.rows.size()) throw Error("row index out of range");
    if (rows.size() > kMaxProfileRows)
        throw Error("profile has more than " + std::to_string(kMaxProfileRows) +
                    " maximal classes");
    std::function<void(const std::vector<size_t>&, const std::vector<size_t>&,
                       const Integer&, size_t)>
        rec = [&](const std::vector<size_t>& rem, const std::vector<size_t>& live,
                  const Integer& W, size_t picked) {
            if (picked > 0) {
                for (size_t r : rem) {
                    const DynBitset& row = p.rows[rows[r]];
                    bool superset = true;
                    for (size_t c : live)
                        if (!row.test(c)) {
                            superset = false;
                            break;
                        }
                    if (superset) return;  // subtree telescopes to zero
                }
                visit(picked % 2 == 1 ? 1 : -1, W);
            }
            for (size_t t = 0; t < rem.size(); ++t) {
                const DynBitset& row = p.rows[rows[rem[t]]];
                std::vector<size_t> next_live;
                Integer next_W = 0;
                if (picked == 0) {
                    row.for_each([&](size_t c) {
                        next_live.push_back(c);
                        next_W += p.class_sizes[c];
                    });
                } else {
                    next_W = W;
                    for (size_t c : live) {
                        if (row.test(c))
                            next_live.push_back(c);
                        else
                            next_W -= p.class_sizes[c];
                    }
                }
                rec(std::vector<size_t>(rem.begin() + t + 1, rem.end()), next_live,
                    next_W, picked + 1);
            }
        };
    std::vector<size_t> rem(rows.size());
    for (size_t i = 0; i < rem.size(); ++i) rem[i] = i;
    rec(rem, {}, 0, 0);
}

std::vector<size_t> all_rows(const GenerationProfile& p) {
    std::vector<size_t> rows(p.rows.size());
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return rows;
}

Rational first_moment(const GenerationProfile& p, const std::vector<size_t>& rows) {
    const Integer& D = p.group_order;
    Rational c = 0;
    sweep(p, rows, [&](int sign, const Integer& W) {
        Rational term = rat(D, D - W);
        c += sign > 0 ? term : -term;
    });
    return c;
}

Rational second_moment_sum(const GenerationProfile& p, const std::vector<size_t>& rows) {
    const Integer& D = p.group_order;
    Rational s = 0;
    sweep(p, rows, [&](int sign, const Integer& W) {
        Integer gap = D - W;
        Rational term = rat((D + W) * D, gap * gap);
        s += sign > 0 ? term : -term;
    });
    return s;
}

}  // namespace

Rational nu_intersection(const GenerationProfile& p, const std::vector<size_t>& I) {
    if (I.empty()) throw Error("nu_intersection needs a nonempty row set");
    DynBitset conj = p.rows.at(I[0]);
    for (size_t i = 1; i < I.size(); ++i) conj.and_with(p.rows.at(I[i]));
    Integer W = 0;
    conj.for_each([&](size_t col) { W += p.class_sizes[col]; });
    return rat(W, p.group_order);
}

Rational chebotarev(const GenerationProfile& p) {
    p.validate();
    if (p.rows.empty()) return 1;  // trivial-group convention c(1) = 1
    return first_moment(p, all_rows(p));
}

Rational secondary(const GenerationProfile& p) {
    p.validate();
    if (p.rows.empty()) return 1;  // trivial-group convention c2(1) = 1
    return second_moment_sum(p, all_rows(p));
}

Rational non_generation_probability(const GenerationProfile& p, unsigned long n) {
    p.validate();
    Integer num = 0;
    sweep(p, all_rows(p), [&](int sign, const Integer& W) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), W.get_mpz_t(), n);
        if (sign > 0) num += t; else num -= t;
    });
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), p.group_order.get_mpz_t(), n);
    return rat(num, den);
}

std::vector<Rational> distribution(const GenerationProfile& p, unsigned long n_max) {
    if (n_max < 1) throw Error("distribution needs n_max >= 1");
    std::vector<Rational> out;
    Rational prev = non_generation_probability(p, 0);
    for (unsigned long n = 1; n <= n_max; ++n) {
        Rational cur = non_generation_probability(p, n);
        out.push_back(prev - cur);
        prev = cur;
    }
    return out;
}

Rational outside_avoidance_density(const GenerationProfile& p, const std::vector<size_t>& M) {
    std::vector<bool> in_M(p.rows.size(), false);
    for (size_t r : M) in_M.at(r) = true;
    DynBitset covered(p.columns());
    for (size_t r = 0; r < p.rows.size(); ++r)
        if (!in_M[r]) covered.or_with(p.rows[r]);
    Integer W = 0;
    covered.for_each([&](size_t col) { W += p.class_sizes[col]; });
    return 1 - rat(W, p.group_order);
}

PartialBounds partial_bounds(const GenerationProfile& p, const std::vector<size_t>& M,
                             const Rational& p_M) {
    p.validate();
    if (M.empty()) throw Error("partial_bounds needs a nonempty row set");
    if (p_M <= 0 || p_M > 1) throw Error("p_M must lie in (0,1]");
    PartialBounds b;
    b.e1 = first_moment(p, M);
    b.e2 = second_moment_sum(p, M);
    b.c_lo = b.e1;
    b.c_hi = b.e1 - 1 + 1 / p_M;
    b.c2_lo = b.e2;
    b.c2_hi = b.e2 + (2 - p_M) / (p_M * p_M) - 1;
    return b;
}

}  // namespace cheb
