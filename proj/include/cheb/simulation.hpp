#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cheb/group.hpp"
#include "cheb/profile.hpp"

namespace cheb {

struct SimConfig {
    uint64_t trials = 1;
    uint64_t seed = 0;
    long L = 100;   // Poisson index truncation
    long B = 1024;  // subsum tracking cap
    void validate() const {
        if (trials < 1) throw Error("trials must be >= 1");
        if (L < 0) throw Error("L must be >= 0");
        if (B < 1) throw Error("B must be >= 1");
    }
};

// Counter-based generator: a fixed 64-bit avalanche of (seed, trial, draw),
// so parallel or re-ordered execution cannot change the stream.
uint64_t rng_u64(uint64_t seed, uint64_t trial, uint64_t draw);
// rejection-free uniform index in [0, n)
uint64_t rng_index(uint64_t r, uint64_t n);

struct Histogram {
    std::map<uint64_t, uint64_t> counts;  // waiting time -> trials
    uint64_t trials = 0;
    Rational mean;
    Rational second_moment;
};

// The sampling loop behind the empirical invariant: draw uniform elements,
// map to conjugacy classes, drop every maximal row whose column is false,
// stop when no row survives.
Histogram empirical_chebotarev(const PermGroup& G, const GenerationProfile& profile,
                               const SimConfig& cfg);

std::string empirical_distribution_csv(const Histogram& h);

struct PoissonEstimate {
    double mean = 0;
    double stderr_ = 0;
    uint64_t trials = 0;
};

// Monte Carlo estimate of the limiting alternating-group model: tau is the
// first k at which the drawn cycle-length multisets share no positive
// subsum <= B.
PoissonEstimate poisson_model_estimate(const SimConfig& cfg);

}  // namespace cheb
