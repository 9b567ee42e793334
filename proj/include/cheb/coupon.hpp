#pragma once

#include <vector>

#include "cheb/bitset.hpp"
#include "cheb/rational.hpp"

namespace cheb {

constexpr size_t kMaxCouponSets = 30;
constexpr size_t kMaxCouponDpSets = 16;

struct FiniteMeasure {
    std::vector<Rational> weights;  // over the ground set D = {0..d-1}
    size_t ground_size() const { return weights.size(); }
    void validate() const;  // weights >= 0 and sum to 1
    Rational measure(const DynBitset& set) const;
};

struct SubsetSystem {
    std::vector<DynBitset> sets;  // nonempty subsets of D
    void validate(const FiniteMeasure& mu) const;
};

struct CouponInstance {
    FiniteMeasure mu;
    SubsetSystem system;
};

CouponInstance coupon_from_json(const std::string& json_text);

// E(tau): waiting time until every set in the system has been hit
Rational expected_time(const FiniteMeasure& mu, const SubsetSystem& sys);
Rational coupon_second_moment(const FiniteMeasure& mu, const SubsetSystem& sys);

// E(T_I * T_J) for the hitting times of two set-unions
Rational pair_expectation(const FiniteMeasure& mu, const DynBitset& EI, const DynBitset& EJ);

// P(T_I = n, T_J = m), three-case joint law
Rational joint_pmf(const FiniteMeasure& mu, const DynBitset& EI, const DynBitset& EJ,
                   unsigned long n, unsigned long m);

// Independent oracle: P(tau = n) for n = 1..n_max by dynamic programming
// over the set of already-witnessed members of the system.
std::vector<Rational> exact_distribution_dp(const FiniteMeasure& mu, const SubsetSystem& sys,
                                            unsigned long n_max);

// Exact moments of the same absorbing chain the DP walks (the transition
// graph only ever adds witnessed sets, so both solve by back-substitution).
// Used as the oracle against the inclusion-exclusion formulas.
std::pair<Rational, Rational> dp_moments(const FiniteMeasure& mu, const SubsetSystem& sys);

}  // namespace cheb
