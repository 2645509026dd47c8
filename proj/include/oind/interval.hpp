#pragma once

#include <stdexcept>
#include <utility>

#include "oind/rat.hpp"

namespace oind {

// Isolating interval with independently open/closed endpoints. A degenerate
// interval (lo == hi) pins an exact value and must be closed on both sides.
template <typename F>
struct Interval {
    F lo;
    F hi;
    bool lo_open = true;
    bool hi_open = true;

    Interval(F l, F h, bool lopen, bool hopen)
        : lo(std::move(l)), hi(std::move(h)), lo_open(lopen), hi_open(hopen) {
        if (sign_of(hi - lo) < 0) throw std::invalid_argument("interval with lo > hi");
        if (sign_of(hi - lo) == 0 && (lo_open || hi_open))
            throw std::invalid_argument("degenerate interval must be closed");
    }

    static Interval open(F l, F h) { return Interval(std::move(l), std::move(h), true, true); }
    static Interval point(const F& v) { return Interval(v, v, false, false); }

    bool is_point() const { return sign_of(hi - lo) == 0; }

    bool contains(const F& x) const {
        int cl = sign_of(x - lo);
        int ch = sign_of(hi - x);
        if (cl < 0 || (cl == 0 && lo_open)) return false;
        if (ch < 0 || (ch == 0 && hi_open)) return false;
        return true;
    }
};

}  // namespace oind
