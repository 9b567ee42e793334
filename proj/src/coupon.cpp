#include "cheb/coupon.hpp"

#include <json.hpp>

#include <functional>

namespace cheb {

void FiniteMeasure::validate() const {
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) throw Error("measure weights must be nonnegative");
        total += w;
    }
    if (total != 1) throw Error("measure weights must sum to 1");
}

Rational FiniteMeasure::measure(const DynBitset& set) const {
    Rational m = 0;
    set.for_each([&](size_t d) { m += weights[d]; });
    return m;
}

void SubsetSystem::validate(const FiniteMeasure& mu) const {
    if (sets.empty()) throw Error("subset system must be nonempty");
    for (const auto& E : sets) {
        if (E.n != mu.ground_size()) throw Error("subset width disagrees with ground set");
        if (E.none()) throw Error("subset system contains an empty set");
        if (mu.measure(E) == 0)
            throw Error("waiting time almost surely infinite (zero-measure set)");
    }
}

CouponInstance coupon_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw Error("invalid JSON in coupon instance");
    if (!j.is_object() || !j.contains("weights") || !j.contains("sets"))
        throw Error("coupon JSON needs \"weights\" and \"sets\"");
    CouponInstance inst;
    for (const auto& w : j["weights"]) {
        if (!w.is_array() || w.size() != 2)
            throw Error("each weight must be a [num,den] pair of strings");
        Integer num, den;
        if (num.set_str(w[0].get<std::string>(), 10) != 0 ||
            den.set_str(w[1].get<std::string>(), 10) != 0)
            throw Error("bad fraction in coupon weights");
        inst.mu.weights.push_back(rat(num, den));
    }
    for (const auto& s : j["sets"]) {
        DynBitset E(inst.mu.ground_size());
        for (const auto& d : s) {
            size_t i = d.get<size_t>();
            if (i >= inst.mu.ground_size()) throw Error("set member out of ground range");
            E.set(i);
        }
        inst.system.sets.push_back(std::move(E));
    }
    inst.mu.validate();
    inst.system.validate(inst.mu);
    return inst;
}

namespace {

// Visit every nonempty subcollection with its sign parity and union measure.
void union_sweep(const FiniteMeasure& mu, const SubsetSystem& sys,
                 const std::function<void(int sign, const Rational& m)>& visit) {
    mu.validate();
    sys.validate(mu);
    if (sys.sets.size() > kMaxCouponSets)
        throw Error("coupon system larger than " + std::to_string(kMaxCouponSets) + " sets");
    std::function<void(size_t, const DynBitset&, size_t)> rec =
        [&](size_t i, const DynBitset& uni, size_t picked) {
            if (i == sys.sets.size()) {
                if (picked == 0) return;
                Rational m = mu.measure(uni);
                if (m == 0) throw Error("waiting time almost surely infinite");
                visit(picked % 2 == 1 ? 1 : -1, m);
                return;
            }
            rec(i + 1, uni, picked);
            DynBitset next = uni;
            next.or_with(sys.sets[i]);
            rec(i + 1, next, picked + 1);
        };
    rec(0, DynBitset(mu.ground_size()), 0);
}

}  // namespace

Rational expected_time(const FiniteMeasure& mu, const SubsetSystem& sys) {
    Rational e = 0;
    union_sweep(mu, sys, [&](int sign, const Rational& m) {
        Rational term = 1 / m;
        e += sign > 0 ? term : -term;
    });
    return e;
}

Rational coupon_second_moment(const FiniteMeasure& mu, const SubsetSystem& sys) {
    Rational e = 0;
    union_sweep(mu, sys, [&](int sign, const Rational& m) {
        Rational term = (1 / m) * (1 - 2 / m);  // (-1)^{|I|} (1/m)(1 - 2/m)
        e += sign > 0 ? -term : term;
    });
    return e;
}

Rational pair_expectation(const FiniteMeasure& mu, const DynBitset& EI, const DynBitset& EJ) {
    mu.validate();
    Rational mi = mu.measure(EI), mj = mu.measure(EJ);
    if (mi == 0 || mj == 0) throw Error("zero-measure set in pair_expectation");
    DynBitset uni = EI;
    uni.or_with(EJ);
    return (1 / mu.measure(uni)) * (1 / mi + 1 / mj - 1);
}

Rational joint_pmf(const FiniteMeasure& mu, const DynBitset& EI, const DynBitset& EJ,
                   unsigned long n, unsigned long m) {
    if (n < 1 || m < 1) throw Error("joint_pmf needs n, m >= 1");
    mu.validate();
    DynBitset uni = EI, inter = EI, i_only = EI, j_only = EJ;
    uni.or_with(EJ);
    inter.and_with(EJ);
    i_only.andnot_with(EJ);
    j_only.andnot_with(EI);
    Rational p = mu.measure(EI), q = mu.measure(EJ), r = mu.measure(inter),
             s = mu.measure(uni), pp = mu.measure(i_only), qp = mu.measure(j_only);
    if (n == m) return rat_pow(1 - s, n - 1) * r;
    if (n > m) return rat_pow(1 - s, m - 1) * qp * rat_pow(1 - p, n - m - 1) * p;
    return rat_pow(1 - s, n - 1) * pp * rat_pow(1 - q, m - n - 1) * q;
}

namespace {

std::vector<uint32_t> hit_masks(const FiniteMeasure& mu, const SubsetSystem& sys) {
    mu.validate();
    sys.validate(mu);
    if (sys.sets.size() > kMaxCouponDpSets)
        throw Error("DP state space cap exceeded (max " + std::to_string(kMaxCouponDpSets) +
                    " sets)");
    std::vector<uint32_t> hit(mu.ground_size(), 0);
    for (size_t k = 0; k < sys.sets.size(); ++k)
        sys.sets[k].for_each([&](size_t d) { hit[d] |= 1u << k; });
    return hit;
}

}  // namespace

std::vector<Rational> exact_distribution_dp(const FiniteMeasure& mu, const SubsetSystem& sys,
                                            unsigned long n_max) {
    std::vector<uint32_t> hit = hit_masks(mu, sys);
    uint32_t full = (1u << sys.sets.size()) - 1;
    std::vector<Rational> prob(full + 1, Rational(0));
    prob[0] = 1;
    std::vector<Rational> out;
    for (unsigned long n = 1; n <= n_max; ++n) {
        std::vector<Rational> next(full + 1, Rational(0));
        for (uint32_t s = 0; s <= full; ++s) {
            if (prob[s] == 0) continue;
            if (s == full) { next[full] += prob[s]; continue; }
            for (size_t d = 0; d < mu.ground_size(); ++d) {
                if (mu.weights[d] == 0) continue;
                next[s | hit[d]] += prob[s] * mu.weights[d];
            }
        }
        Rational arrived = next[full] - prob[full];
        out.push_back(arrived);
        prob = std::move(next);
    }
    return out;
}

std::pair<Rational, Rational> dp_moments(const FiniteMeasure& mu, const SubsetSystem& sys) {
    std::vector<uint32_t> hit = hit_masks(mu, sys);
    uint32_t full = (1u << sys.sets.size()) - 1;
    std::vector<Rational> E1(full + 1, Rational(0)), E2(full + 1, Rational(0));
    // transitions only add bits, so states solve by back-substitution in
    // decreasing numeric order
    for (uint32_t s = full; s-- > 0;) {
        Rational stay = 0, A1 = 0, A2 = 0;
        for (size_t d = 0; d < mu.ground_size(); ++d) {
            if (mu.weights[d] == 0) continue;
            uint32_t t = s | hit[d];
            if (t == s) {
                stay += mu.weights[d];
            } else {
                A1 += mu.weights[d] * E1[t];
                A2 += mu.weights[d] * E2[t];
            }
        }
        Rational go = 1 - stay;
        if (go == 0) throw Error("absorbing chain stuck (zero-measure set)");
        E1[s] = (1 + A1) / go;
        E2[s] = (1 + 2 * stay * E1[s] + 2 * A1 + A2) / go;
    }
    return {E1[0], E2[0]};
}

}  // namespace cheb
