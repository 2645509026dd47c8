#include "oind/mpoly.hpp"

#include <functional>

namespace oind {

MPoly MPoly::constant(unsigned n, const Rat& v) {
    MPoly p{n, {}};
    if (sign(v) != 0) p.terms.emplace(std::vector<unsigned>(n, 0), v);
    return p;
}

MPoly MPoly::var(unsigned n, unsigned i) {
    MPoly p{n, {}};
    std::vector<unsigned> e(n, 0);
    e[i] = 1;
    p.terms.emplace(std::move(e), Rat(1));
    return p;
}

int MPoly::deg_in(unsigned v) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, static_cast<int>(e[v]));
    return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms.emplace(e, c);
        } else {
            it->second += c;
            if (sign(it->second) == 0) r.terms.erase(it);
        }
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r = MPoly::zero(nvars);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<unsigned> e(nvars);
            for (unsigned i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(e), c1 * c2);
            } else {
                it->second += c1 * c2;
                if (sign(it->second) == 0) r.terms.erase(it);
            }
        }
    return r;
}

MPoly MPoly::operator*(const Rat& k) const {
    if (sign(k) == 0) return MPoly::zero(nvars);
    MPoly r = *this;
    for (auto& [e, c] : r.terms) c *= k;
    return r;
}

MPoly MPoly::subst(unsigned v, const Rat& value) const {
    MPoly r = MPoly::zero(nvars);
    for (const auto& [e, c] : terms) {
        Rat coef = c;
        for (unsigned k = 0; k < e[v]; ++k) coef *= value;
        std::vector<unsigned> e2 = e;
        e2[v] = 0;
        auto it = r.terms.find(e2);
        if (it == r.terms.end()) {
            if (sign(coef) != 0) r.terms.emplace(std::move(e2), coef);
        } else {
            it->second += coef;
            if (sign(it->second) == 0) r.terms.erase(it);
        }
    }
    return r;
}

QPoly MPoly::to_qpoly(unsigned v) const {
    std::vector<Rat> c;
    for (const auto& [e, coef] : terms) {
        for (unsigned i = 0; i < nvars; ++i)
            if (i != v && e[i] != 0)
                throw std::domain_error("MPoly::to_qpoly: polynomial is not univariate");
        if (c.size() <= e[v]) c.resize(e[v] + 1, Rat(0));
        c[e[v]] = coef;
    }
    return QPoly(std::move(c));
}

MPoly MPoly::from_qpoly(unsigned n, unsigned v, const QPoly& p) {
    MPoly r = MPoly::zero(n);
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (sign(p.c[i]) == 0) continue;
        std::vector<unsigned> e(n, 0);
        e[v] = static_cast<unsigned>(i);
        r.terms.emplace(std::move(e), p.c[i]);
    }
    return r;
}

Rat resultant_univ(QPoly a, QPoly b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return Rat(0);
    Rat res(1);
    if (a.degree() < b.degree()) {
        if ((a.degree() * b.degree()) % 2 != 0) res = -res;
        std::swap(a, b);
    }
    while (true) {
        if (b.degree() == 0) {
            Rat pw(1);
            for (int i = 0; i < a.degree(); ++i) pw *= b.leading();
            return res * pw;
        }
        QPoly r = poly_rem(a, b);
        if (r.is_zero_poly()) return Rat(0);
        Rat pw(1);
        for (int i = 0; i < a.degree() - r.degree(); ++i) pw *= b.leading();
        if ((a.degree() * b.degree()) % 2 != 0) pw = -pw;
        res *= pw;
        a = std::move(b);
        b = std::move(r);
    }
}

namespace {

// evaluation abscissas 0, 1, -1, 2, -2, ...
Rat grid_point(int j) {
    if (j == 0) return Rat(0);
    int k = (j + 1) / 2;
    return (j % 2 == 1) ? Rat(k) : Rat(-k);
}

}  // namespace

MPoly resultant_eliminate(const MPoly& e, unsigned v, const QPoly& b) {
    if (b.degree() < 1) throw std::domain_error("resultant_eliminate: defining polynomial is constant");
    int m = e.deg_in(v);
    if (m <= 0) {
        // variable absent: Res_v(E, B) would be E^{deg B}; callers never want
        // that blow-up, they just skip the elimination
        throw std::domain_error("resultant_eliminate: variable absent from polynomial");
    }
    unsigned n = e.nvars;
    std::vector<unsigned> others;
    std::vector<int> counts;
    for (unsigned i = 0; i < n; ++i) {
        if (i == v) continue;
        int d = e.deg_in(i);
        if (d > 0) {
            others.push_back(i);
            counts.push_back(d * b.degree() + 1);
        }
    }

    std::function<MPoly(size_t, MPoly)> rec = [&](size_t k, MPoly cur) -> MPoly {
        if (k == others.size()) {
            QPoly a = cur.to_qpoly(v);
            if (a.is_zero_poly()) return MPoly::zero(n);
            Rat val = resultant_univ(a, b);
            Rat corr(1);
            for (int i = 0; i < m - a.degree(); ++i) corr *= b.leading();
            return MPoly::constant(n, val * corr);
        }
        unsigned var = others[k];
        int cnt = counts[k];
        std::vector<Rat> xs;
        std::vector<MPoly> ys;
        for (int j = 0; j < cnt; ++j) {
            Rat x = grid_point(j);
            xs.push_back(x);
            ys.push_back(rec(k + 1, cur.subst(var, x)));
        }
        // Lagrange combine in `var`
        MPoly acc = MPoly::zero(n);
        for (int j = 0; j < cnt; ++j) {
            QPoly lj = QPoly::constant(Rat(1));
            Rat denom(1);
            for (int i = 0; i < cnt; ++i) {
                if (i == j) continue;
                lj = lj * QPoly(std::vector<Rat>{-xs[i], Rat(1)});
                denom *= xs[j] - xs[i];
            }
            MPoly ljm = MPoly::from_qpoly(n, var, lj * (Rat(1) / denom));
            acc = acc + ljm * ys[j];
        }
        return acc;
    };

    return rec(0, e);
}

}  // namespace oind
