#pragma once

// Test-side oracles, deliberately independent of the Sturm machinery in
// src/: root counting by Descartes' rule with interval subdivision, plus a
// tiny deterministic generator for reproducible random instances.

#include <cstdint>
#include <vector>

#include "oind/poly.hpp"

namespace oracle {

using oind::QPoly;
using oind::Rat;

inline int descartes_variations(const QPoly& p) {
    int var = 0, prev = 0;
    for (const auto& c : p.c) {
        int s = oind::sign(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Descartes bound for the number of roots of q in (0,1):
// variations of rev(q)(t+1).
inline int descartes_01_bound(const QPoly& q) {
    return descartes_variations(q.reversed().shift(Rat(1)));
}

// exact count of roots of a square-free q in the open unit interval;
// q(0) != 0 and q(1) != 0 required
inline int count_roots_01(const QPoly& q) {
    int bound = descartes_01_bound(q);
    if (bound <= 1) return bound;
    // a root exactly at 1/2 would sit on the endpoint of both halves; strip it
    Rat half = oind::make_rat(1, 2);
    QPoly qq = q;
    int mid = 0;
    if (oind::is_zero(q.eval(half))) {
        qq = oind::poly_exact_div(q, QPoly(std::vector<Rat>{-half, Rat(1)}));
        mid = 1;
    }
    QPoly left = qq.scale_arg(half);                  // roots in (0, 1/2)
    QPoly right = qq.shift(half).scale_arg(half);     // roots in (1/2, 1)
    return count_roots_01(left) + mid + count_roots_01(right);
}

// distinct real roots of square-free p in the open interval (a, b)
inline int count_roots_open(const QPoly& p, const Rat& a, const Rat& b) {
    if (oind::is_zero(p.eval(a)) || oind::is_zero(p.eval(b)))
        throw std::logic_error("oracle expects non-root endpoints");
    QPoly unit = p.shift(a).scale_arg(b - a);  // t in (0,1) -> a + (b-a)t... see below
    return count_roots_01(unit);
}

// deterministic 64-bit generator (splitmix64); distributions are hand-rolled
// so results do not depend on the standard library
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline QPoly random_poly(Rng& rng, int max_degree, long max_coeff) {
    int deg = static_cast<int>(rng.range(1, max_degree));
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(Rat(rng.range(-max_coeff, max_coeff)));
    while (c.size() > 1 && oind::sign(c.back()) == 0) c.pop_back();
    return QPoly(std::move(c));
}

}  // namespace oracle
