#include <doctest.h>

#include "oind/rat.hpp"

using namespace oind;

TEST_CASE("canonical form and floor conventions") {
    Rat q = make_rat(-7, 2);
    CHECK(q.get_den() == 2);
    CHECK(rat_floor(q) == -4);
    CHECK(rat_floor(make_rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(5)) == 5);
    CHECK(rat_ceil(make_rat(7, 2)) == 4);
    CHECK(is_integer(make_rat(8, 2)));
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("simplest rational in an interval") {
    // sqrt(2) ~ 1.4142, sqrt(3) ~ 1.7320
    CHECK(simplest_rational_between(make_rat(1414, 1000), make_rat(1732, 1000)) == make_rat(3, 2));
    CHECK(simplest_rational_between(Rat(-1), Rat(1)) == 0);
    CHECK(simplest_rational_between(Rat(2), Rat(7)) == 3);
    CHECK(simplest_rational_between(make_rat(1, 3), make_rat(1, 2)) == make_rat(2, 5));
    CHECK(simplest_rational_between(make_rat(-5, 2), make_rat(-7, 3)) == make_rat(-12, 5));
    Rat v = simplest_rational_between(make_rat(355, 113), make_rat(377, 120));
    CHECK(v > make_rat(355, 113));
    CHECK(v < make_rat(377, 120));
}

TEST_CASE("to_string") {
    CHECK(to_string(make_rat(-3, 4)) == "-3/4");
    CHECK(to_string(Rat(17)) == "17");
}
