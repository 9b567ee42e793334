#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cheb/engine.hpp"
#include "cheb/group.hpp"
#include "cheb/lattice.hpp"

using namespace cheb;

namespace {

// S3 by hand: classes ordered (identity, transpositions, 3-cycles);
// maximal classes A3 and the three conjugate order-2 subgroups.
GenerationProfile s3_profile() {
    GenerationProfile p;
    p.group_order = 6;
    p.class_sizes = {1, 3, 2};
    for (const auto& s : p.class_sizes) p.class_densities.push_back(rat(s, p.group_order));
    DynBitset a3(3), s2(3);
    a3.set(0);
    a3.set(2);
    s2.set(0);
    s2.set(1);
    p.rows = {a3, s2};
    p.labels = {"A3", "S2"};
    p.orbit_sizes = {1, 3};
    p.validate();
    return p;
}

}  // namespace

TEST_CASE("hand-built S3 profile") {
    GenerationProfile p = s3_profile();
    CHECK(nu_intersection(p, {0}) == rat(1, 2));
    CHECK(nu_intersection(p, {1}) == rat(2, 3));
    CHECK(nu_intersection(p, {0, 1}) == rat(1, 6));
    CHECK(chebotarev(p) == rat(19, 5));
    CHECK(secondary(p) == rat(483, 25));
}

TEST_CASE("distribution of the waiting time for S3") {
    GenerationProfile p = s3_profile();
    CHECK(non_generation_probability(p, 1) == rat(1));
    CHECK(non_generation_probability(p, 2) == rat(2, 3));
    std::vector<Rational> d = distribution(p, 3);
    CHECK(d[0] == rat(0));
    CHECK(d[1] == rat(1, 3));
    Rational total = d[0] + d[1] + d[2];
    CHECK(total == rat(1) - non_generation_probability(p, 3));
}

TEST_CASE("trivial profile") {
    GenerationProfile p;
    p.group_order = 1;
    p.class_sizes = {1};
    p.class_densities = {rat(1)};
    p.validate();
    CHECK(chebotarev(p) == rat(1));
    CHECK(secondary(p) == rat(1));
}

TEST_CASE("partial bounds on S3 from the alternating row alone") {
    GenerationProfile p = s3_profile();
    Rational pm = outside_avoidance_density(p, {0});
    CHECK(pm == rat(1, 3));
    PartialBounds b = partial_bounds(p, {0}, pm);
    CHECK(b.e1 == rat(2));
    CHECK(b.e2 == rat(6));
    CHECK(b.c_lo == rat(2));
    CHECK(b.c_hi == rat(4));
    CHECK(b.c2_lo == rat(6));
    CHECK(b.c2_hi == rat(20));
    // the true values sit inside the brackets
    CHECK(b.c_lo <= chebotarev(p));
    CHECK(chebotarev(p) <= b.c_hi);
    CHECK(b.c2_lo <= secondary(p));
    CHECK(secondary(p) <= b.c2_hi);
    CHECK_THROWS_AS(partial_bounds(p, {0}, rat(0)), Error);
}

TEST_CASE("full-row partial bounds collapse to the exact values") {
    GenerationProfile p = s3_profile();
    PartialBounds b = partial_bounds(p, {0, 1}, rat(1));
    CHECK(b.e1 == chebotarev(p));
    CHECK(b.c_lo == b.c_hi);
    CHECK(b.e2 == secondary(p));
}

TEST_CASE("engine on lattice profiles") {
    CHECK(chebotarev(group_profile(alternating_group(5))) == rat(91, 22));
    CHECK(chebotarev(group_profile(symmetric_group(3))) == rat(19, 5));
    CHECK(chebotarev(group_profile(dihedral_group(12))) == rat(712, 165));
    CHECK(chebotarev(group_profile(cyclic_group(6))) == rat(23, 10));
    CHECK(significant_string(chebotarev(group_profile(psl2_group(7)))) == "4.653153");
}
