#include <doctest.h>

#include "oind/realalg.hpp"
#include "oracle.hpp"

using namespace oind;

namespace {

QPoly P(std::vector<long> asc) { return qpoly_from_int_coeffs(asc); }

RealAlg sqrt_of(long n) { return RealAlg::root_of(P({-n, 0, 1}), 2); }

}  // namespace

TEST_CASE("construction and rational collapse") {
    RealAlg two = RealAlg::root_of(P({-2, 1}), 1);
    CHECK(two.is_rational());
    CHECK(two.rational_value() == 2);
    CHECK_THROWS_WITH_AS(RealAlg::root_of(P({1, 0, 1}), 1),
                         "root index out of range: polynomial has 0 real roots",
                         std::domain_error);
    RealAlg s2 = sqrt_of(2);
    CHECK(!s2.is_rational());
    CHECK(s2.sgn() == 1);
    CHECK(s2.to_string() == "root(t^2 - 2, 2)");
}

TEST_CASE("exact identities") {
    RealAlg s2 = sqrt_of(2), s3 = sqrt_of(3), s6 = sqrt_of(6);
    CHECK(ra_compare(ra_mul(s2, s2), RealAlg(2)) == Cmp::EQ);
    CHECK(ra_compare(ra_mul(s2, s3), s6) == Cmp::EQ);
    CHECK(ra_compare(ra_add(s2, ra_neg(s2)), RealAlg(0)) == Cmp::EQ);
    // sqrt2 + sqrt2 is the positive root of t^2 - 8
    CHECK(ra_compare(ra_add(s2, s2), RealAlg::root_of(P({-8, 0, 1}), 2)) == Cmp::EQ);
    CHECK(ra_compare(s2, RealAlg(make_rat(3, 2))) == Cmp::LT);
    CHECK(ra_compare(s2, s2) == Cmp::EQ);
    CHECK(ra_compare(ra_add(s2, s3), s6) == Cmp::GT);
}

TEST_CASE("inverse and division") {
    RealAlg s2 = sqrt_of(2);
    CHECK(ra_compare(ra_mul(s2, ra_inv(s2)), RealAlg(1)) == Cmp::EQ);
    CHECK(ra_compare(ra_inv(s2), ra_mul(s2, RealAlg(make_rat(1, 2)))) == Cmp::EQ);
    CHECK_THROWS_WITH_AS(ra_inv(RealAlg(0)), "division by zero", std::domain_error);
}

TEST_CASE("floors") {
    CHECK(ra_floor(sqrt_of(2)) == 1);
    CHECK(ra_floor(ra_neg(sqrt_of(2))) == -2);
    CHECK(ra_floor(RealAlg(3)) == 3);
    CHECK(ra_floor(RealAlg(make_rat(-7, 2))) == -4);
    // sqrt(1/2): floor of the root of 2t^2 - 1 in (0, 1)
    RealAlg h = RealAlg::root_of(P({-1, 0, 2}), 2);
    CHECK(ra_floor(h) == 0);
}

TEST_CASE("field laws on a sampled pool") {
    std::vector<RealAlg> pool = {
        RealAlg(make_rat(-3, 2)), RealAlg(2), sqrt_of(2), ra_neg(sqrt_of(3)),
        RealAlg::root_of(P({-1, -1, 1}), 2),  // golden ratio
        ra_add(sqrt_of(2), RealAlg(1)),
    };
    oracle::Rng rng(5);
    for (int i = 0; i < 12; ++i) {
        const RealAlg& a = pool[rng.range(0, pool.size() - 1)];
        const RealAlg& b = pool[rng.range(0, pool.size() - 1)];
        const RealAlg& c = pool[rng.range(0, pool.size() - 1)];
        CHECK(ra_compare(ra_add(ra_add(a, b), c), ra_add(a, ra_add(b, c))) == Cmp::EQ);
        CHECK(ra_compare(ra_add(a, b), ra_add(b, a)) == Cmp::EQ);
        CHECK(ra_compare(ra_mul(a, ra_add(b, c)), ra_add(ra_mul(a, b), ra_mul(a, c))) == Cmp::EQ);
        if (a.sgn() != 0) CHECK(ra_compare(ra_mul(a, ra_inv(a)), RealAlg(1)) == Cmp::EQ);
    }
}

TEST_CASE("floor bracketing on random algebraic numbers") {
    oracle::Rng rng(11);
    int done = 0;
    while (done < 25) {
        QPoly p = oracle::random_poly(rng, 4, 10);
        if (p.degree() < 1) continue;
        int n = count_real_roots(p);
        if (n == 0) continue;
        int idx = static_cast<int>(rng.range(1, n));
        RealAlg r = RealAlg::root_of(p, idx);
        Int f = ra_floor(r);
        CHECK(ra_compare(RealAlg(Rat(f)), r) != Cmp::GT);         // floor <= r
        CHECK(ra_compare(RealAlg(Rat(f + 1)), r) == Cmp::GT);     // r < floor + 1
        ++done;
    }
}

TEST_CASE("roots of polynomials with algebraic coefficients") {
    RealAlg s2 = sqrt_of(2);
    // e(c) = c^2 - (1 + sqrt2); its positive root squared minus 1 is sqrt2
    RAPoly e(std::vector<RealAlg>{ra_neg(ra_add(RealAlg(1), s2)), RealAlg(0), RealAlg(1)});
    RealAlg r = algebraic_root(e, Rat(1), Rat(2));
    CHECK(ra_compare(ra_add(ra_mul(r, r), RealAlg(-1)), s2) == Cmp::EQ);

    // (c - sqrt2)(c - sqrt3) = c^2 - (sqrt2+sqrt3)c + sqrt6
    RealAlg s3 = sqrt_of(3);
    RAPoly f(std::vector<RealAlg>{ra_mul(s2, s3), ra_neg(ra_add(s2, s3)), RealAlg(1)});
    auto roots = real_roots_of(f);
    REQUIRE(roots.size() == 2);
    CHECK(ra_compare(roots[0], s2) == Cmp::EQ);
    CHECK(ra_compare(roots[1], s3) == Cmp::EQ);
}
