#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cheb/closed_forms.hpp"
#include "cheb/engine.hpp"
#include "cheb/group.hpp"
#include "cheb/lattice.hpp"

using namespace cheb;

TEST_CASE("cyclic closed forms") {
    CHECK(cheb_cyclic(1) == rat(1));
    CHECK(cheb_cyclic(2) == rat(2));
    CHECK(cheb_cyclic(4) == rat(2));  // only the prime 2 matters
    CHECK(cheb_cyclic(6) == rat(23, 10));
    CHECK(sec_cyclic(1) == rat(1));
    CHECK(sec_cyclic(2) == rat(6));
    CHECK(sec_cyclic(6) == rat(183, 25));
    CHECK_THROWS_AS(cheb_cyclic(0), Error);
}

TEST_CASE("elementary abelian closed forms") {
    CHECK(cheb_elementary(2, 1) == rat(2));
    CHECK(cheb_elementary(2, 2) == rat(10, 3));
    CHECK(sec_elementary(2, 2) == rat(122, 9));
    CHECK(cheb_elementary(3, 2) == rat(21, 8));
    CHECK(cheb_elementary(5, 3) == rat(3) + rat(1, 4) + rat(1, 24) + rat(1, 124));
}

TEST_CASE("p-binomial alternating sum agrees with the product form") {
    for (long p : {2, 3, 5, 7}) {
        for (long k = 1; k <= 4; ++k) {
            CHECK(cheb_elementary_qbinomial(p, k) == cheb_elementary(p, k));
            CHECK(sec_elementary_qbinomial(p, k) == sec_elementary(p, k));
        }
    }
}

TEST_CASE("abelian rank series brackets the exact cyclic values") {
    Rational tol = parse_rational("1e-12");
    for (long n : {2, 6, 12, 30, 210, 360}) {
        CertifiedValue v = cheb_abelian(AbelianShape::from_factors({n}), tol);
        CHECK(v.width() <= tol);
        CHECK(v.lower <= cheb_cyclic(n));
        CHECK(cheb_cyclic(n) <= v.upper);
        CertifiedValue s = sec_abelian(AbelianShape::from_factors({n}), tol);
        CHECK(s.width() <= tol);
        CHECK(s.lower <= sec_cyclic(n));
        CHECK(sec_cyclic(n) <= s.upper);
    }
}

TEST_CASE("abelian rank series brackets the elementary closed form") {
    Rational tol = parse_rational("1e-12");
    CertifiedValue v = cheb_abelian(AbelianShape::from_factors({2, 2, 2}), tol);
    CHECK(v.lower <= cheb_elementary(2, 3));
    CHECK(cheb_elementary(2, 3) <= v.upper);
    CertifiedValue s = sec_abelian(AbelianShape::from_factors({3, 3}), tol);
    CHECK(s.lower <= sec_elementary(3, 2));
    CHECK(sec_elementary(3, 2) <= s.upper);
}

TEST_CASE("abelian shape from invariant factors") {
    AbelianShape shape = AbelianShape::from_factors({2, 4, 12});
    CHECK(shape.delta == 3);
    CHECK(shape.prime_ranks.at(2) == 3);
    CHECK(shape.prime_ranks.at(3) == 1);
}

TEST_CASE("cyclic limsup constant") {
    Rational tol = parse_rational("1e-13");
    CertifiedValue v = niven_limit(tol);
    CHECK(v.width() <= tol);
    CHECK(v.lower < parse_rational("2.705211140105368"));
    CHECK(parse_rational("2.705211140105367") < v.upper);
}

TEST_CASE("affine closed forms") {
    CHECK(cheb_affine(3) == rat(19, 5));
    CHECK(sec_affine(3) == rat(483, 25));
    CHECK(cheb_affine(5) == rat(39, 7));
    CHECK(cheb_affine(5) == chebotarev(group_profile(affine_group(5))));
    CHECK(sec_affine(5) == secondary(group_profile(affine_group(5))));
    CHECK(cheb_affine(4) == chebotarev(group_profile(  // q = 2^2 via explicit generators
        build_group(parse_group_spec(
            R"({"family":"generators","degree":4,"generators":[[1,0,3,2],[0,2,3,1]]})")))));
    CHECK_THROWS_AS(cheb_affine(6), Error);
}
