#pragma once

#include <optional>
#include <type_traits>
#include <stdexcept>
#include <vector>

#include "oind/interval.hpp"
#include "oind/poly.hpp"

namespace oind {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical Sturm chain: p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i),
// ending at the last nonzero remainder (a constant when p is square-free,
// gcd(p, p') otherwise).
template <typename F>
std::vector<Poly<F>> sturm_chain(const Poly<F>& p) {
    if (p.is_zero_poly()) throw std::domain_error("zero polynomial has no Sturm chain");
    std::vector<Poly<F>> chain;
    chain.push_back(p);
    Poly<F> d = p.derivative();
    if (d.is_zero_poly()) return chain;  // constants
    chain.push_back(d);
    while (true) {
        Poly<F> r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero_poly()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace detail {

inline int count_variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

template <typename F>
int variations_at(const std::vector<Poly<F>>& chain, const std::type_identity_t<F>& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.is_zero_poly() ? 0 : sign_of(q.eval(x)));
    return count_variations(signs);
}

template <typename F>
int variations_at_pos_inf(const std::vector<Poly<F>>& chain) {
    std::vector<int> signs;
    for (const auto& q : chain) signs.push_back(q.is_zero_poly() ? 0 : sign_of(q.leading()));
    return count_variations(signs);
}

template <typename F>
int variations_at_neg_inf(const std::vector<Poly<F>>& chain) {
    std::vector<int> signs;
    for (const auto& q : chain) {
        if (q.is_zero_poly()) {
            signs.push_back(0);
            continue;
        }
        int s = sign_of(q.leading());
        if (q.degree() % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

}  // namespace detail

// Number of distinct real roots of square_free_part(p) in (a, b]. With the
// zero-dropping convention, V(x) equals the right limit V(x+), so the formula
// V(a) - V(b) needs no endpoint guards.
template <typename F>
int count_roots_halfopen(const Poly<F>& p, const std::type_identity_t<F>& a,
                         const std::type_identity_t<F>& b) {
    Poly<F> s = square_free_part(p);
    if (s.degree() <= 0) return 0;
    auto chain = sturm_chain(s);
    return detail::variations_at(chain, a) - detail::variations_at(chain, b);
}

// Distinct real roots of p over the whole line.
template <typename F>
int count_real_roots(const Poly<F>& p) {
    if (p.is_zero_poly()) throw std::domain_error("root count of zero polynomial");
    Poly<F> s = square_free_part(p);
    if (s.degree() <= 0) return 0;
    auto chain = sturm_chain(s);
    return detail::variations_at_neg_inf(chain) - detail::variations_at_pos_inf(chain);
}

// Distinct real roots of p inside iv, honoring the endpoint flags.
template <typename F>
int count_real_roots(const Poly<F>& p, const Interval<F>& iv) {
    if (p.is_zero_poly()) throw std::domain_error("root count of zero polynomial");
    Poly<F> s = square_free_part(p);
    if (s.degree() <= 0) return 0;
    if (iv.is_point()) return is_zero(s.eval(iv.lo)) ? 1 : 0;
    int n = count_roots_halfopen(s, iv.lo, iv.hi);
    if (iv.hi_open && is_zero(s.eval(iv.hi))) --n;
    if (!iv.lo_open && is_zero(s.eval(iv.lo))) ++n;
    return n;
}

// 1 + max |a_i / a_n|: every real root lies in (-B, B).
template <typename F>
F cauchy_bound(const Poly<F>& p) {
    if (p.is_zero_poly()) throw std::domain_error("Cauchy bound of zero polynomial");
    F one = one_like(p.leading());
    F best = one;
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        F q = p.c[i] / p.leading();
        if (sign_of(q) < 0) q = -q;
        if (sign_of(q - best) > 0) best = q;
    }
    return best + one;
}

// Pairwise-disjoint intervals, ascending, each isolating exactly one real
// root of square_free_part(p). Exact rational roots met by a bisection point
// come out as degenerate closed intervals. Bisection does not terminate in
// every ordered field; max_steps turns runaway refinement into an error.
template <typename F>
std::vector<Interval<F>> isolate_real_roots(const Poly<F>& p, long max_steps = 10000) {
    if (p.is_zero_poly()) throw std::domain_error("cannot isolate roots of zero polynomial");
    Poly<F> s = square_free_part(p);
    std::vector<Interval<F>> out;
    if (s.degree() <= 0) return out;
    auto chain = sturm_chain(s);
    F bound = cauchy_bound(s);
    struct Seg {
        F lo, hi;
        int vlo, vhi;
    };
    F neg_bound = -bound;
    int v_lo = detail::variations_at(chain, neg_bound);
    int v_hi = detail::variations_at(chain, bound);
    std::vector<Seg> stack;
    stack.push_back(Seg{neg_bound, bound, v_lo, v_hi});
    long steps = 0;
    while (!stack.empty()) {
        Seg seg = stack.back();
        stack.pop_back();
        int n = seg.vlo - seg.vhi;  // roots in (lo, hi]
        if (n == 0) continue;
        if (n == 1) {
            if (is_zero(s.eval(seg.hi)))
                out.push_back(Interval<F>::point(seg.hi));
            else
                out.push_back(Interval<F>::open(seg.lo, seg.hi));
            continue;
        }
        if (++steps > max_steps)
            throw ResourceError("root isolation exceeded bisection cap");
        F mid = half_point(seg.lo, seg.hi);
        int v_mid = detail::variations_at(chain, mid);
        // push right segment first so output comes out ascending
        stack.push_back(Seg{mid, seg.hi, v_mid, seg.vhi});
        stack.push_back(Seg{seg.lo, mid, seg.vlo, v_mid});
    }
    std::sort(out.begin(), out.end(), [](const Interval<F>& a, const Interval<F>& b) {
        int c = sign_of(a.lo - b.lo);
        if (c != 0) return c < 0;
        return sign_of(a.hi - b.hi) < 0;
    });
    return out;
}

}  // namespace oind
