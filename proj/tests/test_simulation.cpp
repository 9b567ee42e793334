#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cheb/engine.hpp"
#include "cheb/lattice.hpp"
#include "cheb/simulation.hpp"

using namespace cheb;

TEST_CASE("counter-based generator is a pure function of its inputs") {
    CHECK(rng_u64(1, 2, 3) == rng_u64(1, 2, 3));
    CHECK(rng_u64(1, 2, 3) != rng_u64(1, 2, 4));
    CHECK(rng_u64(1, 2, 3) != rng_u64(1, 3, 3));
    CHECK(rng_u64(1, 2, 3) != rng_u64(2, 2, 3));
    for (uint64_t r : {0ull, 1ull, ~0ull, 0x123456789abcdefull})
        CHECK(rng_index(r, 60) < 60);
    CHECK(rng_index(0, 7) == 0);
    CHECK(rng_index(~0ull, 7) == 6);
}

TEST_CASE("geometric waiting time for the two-element group") {
    PermGroup G = cyclic_group(2);
    GenerationProfile p = group_profile(G);
    REQUIRE(p.rows.size() == 1);
    SimConfig cfg;
    cfg.trials = 20000;
    cfg.seed = 7;
    Histogram h = empirical_chebotarev(G, p, cfg);
    // tau ~ Geometric(1/2): mean 2, variance 2
    double sigma = std::sqrt(2.0 / 20000);
    CHECK(std::abs(h.mean.get_d() - 2.0) < 3 * sigma);
    CHECK(h.counts.begin()->first >= 1);
}

TEST_CASE("runs are reproducible per seed and vary across seeds") {
    PermGroup G = alternating_group(4);
    GenerationProfile p = group_profile(G);
    SimConfig a;
    a.trials = 2000;
    a.seed = 42;
    Histogram h1 = empirical_chebotarev(G, p, a);
    Histogram h2 = empirical_chebotarev(G, p, a);
    CHECK(empirical_distribution_csv(h1) == empirical_distribution_csv(h2));
    a.seed = 43;
    Histogram h3 = empirical_chebotarev(G, p, a);
    CHECK(h1.counts != h3.counts);
}

TEST_CASE("empirical mean tracks the exact invariant") {
    PermGroup G = alternating_group(4);
    GenerationProfile p = group_profile(G);
    SimConfig cfg;
    cfg.trials = 50000;
    cfg.seed = 5;
    Histogram h = empirical_chebotarev(G, p, cfg);
    double c = chebotarev(p).get_d();
    double var = secondary(p).get_d() - c * c;
    CHECK(std::abs(h.mean.get_d() - c) < 3 * std::sqrt(var / cfg.trials));
}

TEST_CASE("csv shape") {
    Histogram h;
    h.trials = 4;
    h.counts[2] = 3;
    h.counts[5] = 1;
    h.mean = rat(11, 4);
    CHECK(empirical_distribution_csv(h) == "k,count,frequency\n2,3,0.750000\n5,1,0.250000\n");
}

TEST_CASE("trivial profile cannot be sampled") {
    PermGroup G = cyclic_group(1);
    GenerationProfile p = group_profile(G);
    SimConfig cfg;
    cfg.trials = 1;
    CHECK_THROWS_AS(empirical_chebotarev(G, p, cfg), Error);
}

TEST_CASE("poisson model with one index is geometric with success 1/e") {
    SimConfig cfg;
    cfg.trials = 20000;
    cfg.seed = 11;
    cfg.L = 1;
    cfg.B = 8;
    PoissonEstimate est = poisson_model_estimate(cfg);
    CHECK(std::abs(est.mean - std::exp(1.0)) < 3 * est.stderr_);
    PoissonEstimate again = poisson_model_estimate(cfg);
    CHECK(est.mean == again.mean);
}

TEST_CASE("poisson model truncation parameters") {
    SimConfig cfg;
    cfg.trials = 200;
    cfg.seed = 3;
    cfg.L = 40;
    cfg.B = 200;
    PoissonEstimate est = poisson_model_estimate(cfg);
    CHECK(est.mean >= 1.0);
    CHECK(est.trials == 200);
}
