#include "oind/puiseux.hpp"

#include <algorithm>

namespace oind {

PuiseuxPoly PuiseuxPoly::constant(const RealAlg& c) {
    PuiseuxPoly p;
    if (c.sgn() != 0) p.terms_.push_back({Rat(0), c});
    return p;
}

PuiseuxPoly PuiseuxPoly::monomial(const RealAlg& c, const Rat& e) {
    PuiseuxPoly p;
    if (c.sgn() != 0) p.terms_.push_back({e, c});
    return p;
}

PuiseuxPoly PuiseuxPoly::from_terms(std::vector<PuiseuxTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exp > b.exp; });
    PuiseuxPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            RealAlg merged = ra_add(p.terms_.back().coef, t.coef);
            if (merged.sgn() == 0)
                p.terms_.pop_back();
            else
                p.terms_.back().coef = merged;
        } else if (t.coef.sgn() != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const PuiseuxTerm& PuiseuxPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return terms_.front();
}

RealAlg PuiseuxPoly::coeff_at(const Rat& e) const {
    for (const auto& t : terms_) {
        if (t.exp == e) return t.coef;
        if (t.exp < e) break;
    }
    return RealAlg(Rat(0));
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly r = *this;
    for (auto& t : r.terms_) t.coef = ra_neg(t.coef);
    return r;
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly r;
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp > b.terms_[j].exp)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].exp > a.terms_[i].exp) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            RealAlg merged = ra_add(a.terms_[i].coef, b.terms_[j].coef);
            if (merged.sgn() != 0) r.terms_.push_back({a.terms_[i].exp, merged});
            ++i;
            ++j;
        }
    }
    return r;
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    std::vector<PuiseuxTerm> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) acc.push_back({ta.exp + tb.exp, ra_mul(ta.coef, tb.coef)});
    return PuiseuxPoly::from_terms(std::move(acc));
}

PuiseuxPoly PuiseuxPoly::shifted_scaled(const RealAlg& c, const Rat& e) const {
    if (c.sgn() == 0) return PuiseuxPoly{};
    PuiseuxPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        RealAlg nc = ra_mul(t.coef, c);
        if (nc.sgn() != 0) r.terms_.push_back({t.exp + e, nc});
    }
    return r;
}

std::pair<PuiseuxPoly, PuiseuxPoly> PuiseuxPoly::split_at(const Rat& cutoff) const {
    PuiseuxPoly head, tail;
    for (const auto& t : terms_) {
        if (t.exp >= cutoff)
            head.terms_.push_back(t);
        else
            tail.terms_.push_back(t);
    }
    return {head, tail};
}

Int PuiseuxPoly::exponent_den_bound() const {
    Int d = 1;
    for (const auto& t : terms_) {
        Int g;
        mpz_lcm(g.get_mpz_t(), d.get_mpz_t(), t.exp.get_den().get_mpz_t());
        d = g;
    }
    return d;
}

std::string PuiseuxPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        bool rational = t.coef.is_rational();
        Rat rv = rational ? t.coef.rational_value() : Rat(0);
        bool negative = rational && sign(rv) < 0;
        std::string coef_str;
        if (rational) {
            Rat mag = negative ? Rat(-rv) : rv;
            coef_str = oind::to_string(mag);
        } else {
            coef_str = t.coef.to_string();
        }
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        bool unit_coef = rational && (negative ? Rat(-rv) : rv) == 1;
        if (sign(t.exp) == 0) {
            s += coef_str;
            continue;
        }
        if (!unit_coef) {
            s += coef_str;
            s += "*";
        }
        s += var;
        if (t.exp != 1) {
            if (is_integer(t.exp) && sign(t.exp) > 0)
                s += "^" + oind::to_string(t.exp);
            else
                s += "^(" + oind::to_string(t.exp) + ")";
        }
    }
    return s;
}

std::pair<PuiseuxPoly, PuiseuxPoly> puiseux_divide_nonneg(const PuiseuxPoly& n,
                                                          const PuiseuxPoly& k) {
    return puiseux_series_div(n, k, Rat(0));
}

std::pair<PuiseuxPoly, PuiseuxPoly> puiseux_series_div(const PuiseuxPoly& n,
                                                       const PuiseuxPoly& k,
                                                       const Rat& min_exp, int max_terms) {
    if (k.is_zero()) throw std::domain_error("division by zero");
    PuiseuxPoly q, r = n;
    int produced = 0;
    while (!r.is_zero()) {
        Rat qe = r.leading().exp - k.leading().exp;
        if (qe < min_exp) break;
        if (++produced > max_terms)
            throw ResourceError("series division exceeded the term cap");
        RealAlg qc = r.leading().coef / k.leading().coef;
        PuiseuxPoly qt = PuiseuxPoly::monomial(qc, qe);
        q = q + qt;
        r = r - k.shifted_scaled(qc, qe);
    }
    return {q, r};
}

}  // namespace oind
