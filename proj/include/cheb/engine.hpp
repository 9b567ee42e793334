#pragma once

#include <vector>

#include "cheb/profile.hpp"

namespace cheb {

// density of the classes meeting every maximal class in I (row conjunction)
Rational nu_intersection(const GenerationProfile& p, const std::vector<size_t>& I);

// c(G): sum over nonempty I of (-1)^{|I|+1} / (1 - nu_I); 1 for the trivial profile
Rational chebotarev(const GenerationProfile& p);
// c2(G): same sweep with summand (-1)^{|I|+1} (1+nu)/(1-nu)^2
Rational secondary(const GenerationProfile& p);

// P(tau > n) = sum over nonempty I of (-1)^{|I|+1} nu_I^n
Rational non_generation_probability(const GenerationProfile& p, unsigned long n);

// P(tau = n) for n = 1..n_max
std::vector<Rational> distribution(const GenerationProfile& p, unsigned long n_max);

struct PartialBounds {
    Rational e1, e2;        // E and E^2 of the waiting time restricted to M
    Rational c_lo, c_hi;    // bracketing of c(G)
    Rational c2_lo, c2_hi;  // bracketing of c2(G)
};

// pr-style bounds from a subset M of rows and the density p_M of classes
// avoiding every maximal class outside M
PartialBounds partial_bounds(const GenerationProfile& p, const std::vector<size_t>& M,
                             const Rational& p_M);

// 1 - nu(union of the rows outside M); usable as p_M when the profile is complete
Rational outside_avoidance_density(const GenerationProfile& p, const std::vector<size_t>& M);

}  // namespace cheb
