#include "oind/rat.hpp"

namespace oind {

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between: empty interval");
    if (sign(hi) <= 0) return -simplest_rational_between(-hi, -lo);
    if (sign(lo) < 0) return Rat(0);
    Int fl = rat_floor(lo);
    if (hi > fl + 1) return Rat(fl + 1);
    // Both endpoints in [fl, fl+1]; write x = fl + 1/y with y > 1.
    Rat hgap = hi - fl;  // > 0
    if (lo == fl) {
        // y ranges over (1/hgap, +inf); smallest integer strictly above 1/hgap
        Int y = rat_floor(1 / hgap) + 1;
        return Rat(fl) + make_rat(Int(1), y);
    }
    Rat inv = simplest_rational_between(1 / hgap, 1 / (lo - fl));
    return Rat(fl) + 1 / inv;
}

std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace oind
