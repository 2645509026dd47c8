#include <doctest.h>

#include "oind/sturm.hpp"
#include "oracle.hpp"

using namespace oind;

namespace {

QPoly P(std::vector<long> asc) { return qpoly_from_int_coeffs(asc); }

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    QPoly a = P({-2, 0, 1});  // t^2 - 2
    QPoly b = P({-5, 1});     // t - 5
    CHECK((a * b).degree() == 3);
    CHECK(poly_to_string(a, "t") == "t^2 - 2");
    CHECK(poly_to_string(P({7, -5, 3}), "X") == "3*X^2 - 5*X + 7");
    auto [q, r] = poly_divrem(a, b);
    CHECK(poly_to_string(q, "t") == "t + 5");
    CHECK(poly_to_string(r, "t") == "23");
    QPoly frac_poly(std::vector<Rat>{make_rat(1, 2), make_rat(3, 4)});
    CHECK(normalize_content(frac_poly) == P({2, 3}));
    CHECK(square_free_part(P({0, 0, 1})) == P({0, 1}));
}

TEST_CASE("sturm chains match hand computation") {
    auto c1 = sturm_chain(P({-2, 0, 1}));
    REQUIRE(c1.size() == 3);
    CHECK(c1[0] == P({-2, 0, 1}));
    CHECK(c1[1] == P({0, 2}));
    CHECK(c1[2] == QPoly::constant(Rat(2)));

    auto c2 = sturm_chain(P({-5, 1}));
    REQUIRE(c2.size() == 2);
    CHECK(c2[1] == QPoly::constant(Rat(1)));

    // t^3 - t -> [t^3 - t, 3t^2 - 1, (2/3)t, 1]
    auto c3 = sturm_chain(P({0, -1, 0, 1}));
    REQUIRE(c3.size() == 4);
    CHECK(c3[1] == P({-1, 0, 3}));
    CHECK(c3[2] == QPoly(std::vector<Rat>{Rat(0), make_rat(2, 3)}));
    CHECK(c3[3] == QPoly::constant(Rat(1)));

    CHECK_THROWS_WITH_AS(sturm_chain(QPoly{}), "zero polynomial has no Sturm chain",
                         std::domain_error);
}

TEST_CASE("root counting on intervals") {
    CHECK(count_real_roots(P({-2, 0, 1}), Interval<Rat>::open(Rat(0), Rat(2))) == 1);
    CHECK(count_real_roots(P({1, 0, 1}), Interval<Rat>::open(Rat(-10), Rat(10))) == 0);
    CHECK(count_real_roots(P({0, -1, 0, 1}), Interval<Rat>::open(Rat(-2), Rat(2))) == 3);
    CHECK(count_real_roots(P({0, -1, 0, 1})) == 3);
    // endpoint flags: roots of t^2-1 in [1, 2) vs (1, 2)
    CHECK(count_real_roots(P({-1, 0, 1}), Interval<Rat>(Rat(1), Rat(2), false, true)) == 1);
    CHECK(count_real_roots(P({-1, 0, 1}), Interval<Rat>::open(Rat(1), Rat(2))) == 0);
}

TEST_CASE("isolation: disjoint unit-count intervals, ascending") {
    auto ivs = isolate_real_roots(P({-2, 0, 1}));
    REQUIRE(ivs.size() == 2);
    CHECK(count_real_roots(P({-2, 0, 1}), ivs[0]) == 1);
    CHECK(count_real_roots(P({-2, 0, 1}), ivs[1]) == 1);
    CHECK(sign(ivs[1].lo) >= 0);  // second interval holds sqrt(2)
    CHECK(sign(ivs[0].hi - ivs[1].lo) <= 0);

    CHECK(isolate_real_roots(QPoly::constant(Rat(5))).empty());

    auto sq = isolate_real_roots(P({0, 0, 1}));  // t^2: square-free part t
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].contains(Rat(0)));
}

TEST_CASE("sturm count agrees with the Descartes subdivision oracle") {
    oracle::Rng rng(42);
    int done = 0;
    while (done < 120) {
        QPoly p = oracle::random_poly(rng, 6, 20);
        if (p.degree() < 1) continue;
        QPoly s = square_free_part(p);
        if (s.degree() < 1) continue;
        Rat b = cauchy_bound(s);
        if (is_zero(s.eval(-b)) || is_zero(s.eval(b))) continue;
        int sturm = count_real_roots(p, Interval<Rat>::open(-b, b));
        int desc = oracle::count_roots_open(s, -b, b);
        CHECK(sturm == desc);
        ++done;
    }
}

TEST_CASE("chains of square-free polynomials end in a nonzero constant") {
    oracle::Rng rng(7);
    int done = 0;
    while (done < 60) {
        QPoly p = oracle::random_poly(rng, 6, 20);
        if (p.degree() < 1) continue;
        QPoly g = poly_gcd(p, p.derivative());
        if (g.degree() != 0) continue;  // property is about square-free inputs
        auto chain = sturm_chain(p);
        CHECK(chain.back().degree() == 0);
        CHECK(!is_zero(chain.back().leading()));
        ++done;
    }
}

TEST_CASE("isolated intervals each carry sturm count one") {
    oracle::Rng rng(99);
    int done = 0;
    while (done < 40) {
        QPoly p = oracle::random_poly(rng, 5, 12);
        if (p.degree() < 1) continue;
        auto ivs = isolate_real_roots(p);
        QPoly s = square_free_part(p);
        for (const auto& iv : ivs) CHECK(count_real_roots(s, iv) == 1);
        for (size_t i = 0; i + 1 < ivs.size(); ++i)
            CHECK(sign(ivs[i].hi - ivs[i + 1].lo) <= 0);
        done++;
    }
}
