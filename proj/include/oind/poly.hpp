#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oind/rat.hpp"

namespace oind {

// Dense univariate polynomial over an exact field F, coefficients ascending.
// The zero polynomial is the empty list; otherwise the last coefficient is
// nonzero.
template <typename F>
struct Poly {
    std::vector<F> c;

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly constant(const F& v) {
        if (is_zero(v)) return Poly{};
        return Poly(std::vector<F>{v});
    }

    void normalize() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    bool is_zero_poly() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const F& leading() const {
        if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c.back();
    }
    const F& coeff(size_t i) const {
        if (i < c.size()) return c[i];
        throw std::out_of_range("coefficient index past degree");
    }

    F eval(const F& x) const {
        F acc = zero_like(x);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> out;
        size_t n = std::max(a.c.size(), b.c.size());
        out.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (i < a.c.size() && i < b.c.size())
                out.push_back(a.c[i] + b.c[i]);
            else if (i < a.c.size())
                out.push_back(a.c[i]);
            else
                out.push_back(b.c[i]);
        }
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Poly{};
        std::vector<F> out(a.c.size() + b.c.size() - 1, zero_like(a.c[0]));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& a, const F& k) {
        Poly r = a;
        for (auto& v : r.c) v = v * k;
        r.normalize();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly{};
        std::vector<F> out;
        out.reserve(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) {
            F k = zero_like(c[i]);
            F one = one_like(c[i]);
            for (size_t j = 0; j < i; ++j) k = k + one;
            out.push_back(c[i] * k);
        }
        return Poly(std::move(out));
    }

    // p(t + a)
    Poly shift(const F& a) const {
        Poly lin(std::vector<F>{a, one_like(a)});
        return compose(lin);
    }

    // p(q(t)) by Horner
    Poly compose(const Poly& q) const {
        Poly acc;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Poly::constant(*it);
        return acc;
    }

    // coefficients reversed: t^deg * p(1/t)
    Poly reversed() const {
        std::vector<F> out(c.rbegin(), c.rend());
        return Poly(std::move(out));
    }

    // p(k * t)
    Poly scale_arg(const F& k) const {
        Poly r = *this;
        F pw = one_like(k);
        for (size_t i = 0; i < r.c.size(); ++i) {
            r.c[i] = r.c[i] * pw;
            pw = pw * k;
        }
        r.normalize();
        return r;
    }
};

template <typename F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
    Poly<F> r = a;
    if (a.degree() < b.degree()) return {Poly<F>{}, r};
    std::vector<F> q(a.degree() - b.degree() + 1, zero_like(b.leading()));
    while (!r.is_zero_poly() && r.degree() >= b.degree()) {
        F k = r.leading() / b.leading();
        int d = r.degree() - b.degree();
        q[d] = q[d] + k;
        // r -= k * t^d * b
        for (int i = 0; i <= b.degree(); ++i) r.c[i + d] = r.c[i + d] - k * b.c[i];
        r.normalize();
    }
    return {Poly<F>(std::move(q)), r};
}

template <typename F>
Poly<F> poly_rem(const Poly<F>& a, const Poly<F>& b) {
    return poly_divrem(a, b).second;
}

// Monic gcd by the Euclidean algorithm.
template <typename F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero_poly()) {
        Poly<F> r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    F inv = one_like(a.leading()) / a.leading();
    return a * inv;
}

template <typename F>
Poly<F> square_free_part(const Poly<F>& p) {
    if (p.is_zero_poly() || p.degree() == 0) return p;
    Poly<F> g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return poly_divrem(p, g).first;
}

// Exact division; throws if the remainder is nonzero.
template <typename F>
Poly<F> poly_exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero_poly()) throw std::domain_error("inexact polynomial division");
    return q;
}

using QPoly = Poly<Rat>;

// Integer-content normalization: integer coefficients with gcd 1 and positive
// leading coefficient. Structural equality of normalized polynomials then
// means equality of the rational polynomials up to positive scaling.
QPoly normalize_content(const QPoly& p);

std::string poly_to_string(const QPoly& p, const std::string& var);
QPoly qpoly_from_int_coeffs(const std::vector<long>& ascending);

}  // namespace oind
