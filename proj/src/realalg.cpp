#include "oind/realalg.hpp"

#include <vector>

#include "oind/mpoly.hpp"

namespace oind {

struct RealAlg::State {
    std::mutex m;
    Interval<Rat> iv;
    std::vector<QPoly> chain;  // Sturm chain of the defining polynomial, filled lazily

    explicit State(Interval<Rat> i) : iv(std::move(i)) {}
};

namespace {

QPoly canon(const QPoly& p) { return normalize_content(square_free_part(p)); }

// root counter with a precomputed chain (avoids re-deriving gcd per query)
struct ChainCounter {
    QPoly s;
    std::vector<QPoly> chain;

    explicit ChainCounter(QPoly sf) : s(std::move(sf)), chain(sturm_chain(s)) {}

    int vars(const Rat& x) const { return detail::variations_at(chain, x); }
    // roots in (a, b]
    int halfopen(const Rat& a, const Rat& b) const { return vars(a) - vars(b); }
    int closed(const Rat& a, const Rat& b) const {
        if (a == b) return is_zero(s.eval(a)) ? 1 : 0;
        return halfopen(a, b) + (is_zero(s.eval(a)) ? 1 : 0);
    }
};

// C(x) = Res_y(A(y), B(x - y)); roots are sums alpha + beta
QPoly resultant_sum_poly(const QPoly& a, const QPoly& b) {
    int n = a.degree() * b.degree() + 1;
    std::vector<Rat> xs, ys;
    for (int j = 0; j < n; ++j) {
        Rat x = (j == 0) ? Rat(0) : (j % 2 == 1 ? Rat((j + 1) / 2) : Rat(-(j + 1) / 2));
        QPoly by = b.compose(QPoly(std::vector<Rat>{x, Rat(-1)}));
        xs.push_back(x);
        ys.push_back(resultant_univ(a, by));
    }
    QPoly acc;
    for (int j = 0; j < n; ++j) {
        QPoly lj = QPoly::constant(Rat(1));
        Rat denom(1);
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            lj = lj * QPoly(std::vector<Rat>{-xs[i], Rat(1)});
            denom *= xs[j] - xs[i];
        }
        acc = acc + lj * (ys[j] / denom);
    }
    return acc;
}

// C(x) = Res_y(A(y), y^m B(x/y)); roots are products alpha * beta.
// Requires B(0) != 0 so the y-leading coefficient stays constant.
QPoly resultant_prod_poly(const QPoly& a, const QPoly& b) {
    int m = b.degree();
    int n = a.degree() * b.degree() + 1;
    std::vector<Rat> xs, ys;
    for (int j = 0; j < n; ++j) {
        Rat x = (j == 0) ? Rat(0) : (j % 2 == 1 ? Rat((j + 1) / 2) : Rat(-(j + 1) / 2));
        std::vector<Rat> coeffs(m + 1, Rat(0));
        Rat xp(1);
        for (int i = 0; i <= m; ++i) {
            coeffs[m - i] = b.c[i] * xp;
            xp *= x;
        }
        xs.push_back(x);
        ys.push_back(resultant_univ(a, QPoly(std::move(coeffs))));
    }
    QPoly acc;
    for (int j = 0; j < n; ++j) {
        QPoly lj = QPoly::constant(Rat(1));
        Rat denom(1);
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            lj = lj * QPoly(std::vector<Rat>{-xs[i], Rat(1)});
            denom *= xs[j] - xs[i];
        }
        acc = acc + lj * (ys[j] / denom);
    }
    return acc;
}

QPoly strip_zero_roots(QPoly p) {
    size_t k = 0;
    while (k < p.c.size() && is_zero(p.c[k])) ++k;
    if (k == 0) return p;
    p.c.erase(p.c.begin(), p.c.begin() + k);
    return p;
}

}  // namespace

RealAlg::RealAlg(const Rat& r)
    : defining_(normalize_content(QPoly(std::vector<Rat>{-r, Rat(1)}))),
      state_(std::make_shared<State>(Interval<Rat>::point(r))) {}

RealAlg::RealAlg(QPoly defining, Interval<Rat> iso)
    : defining_(std::move(defining)), state_(std::make_shared<State>(std::move(iso))) {}

Interval<Rat> RealAlg::isolating() const {
    std::lock_guard<std::mutex> lk(state_->m);
    return state_->iv;
}

bool RealAlg::is_rational() const {
    std::lock_guard<std::mutex> lk(state_->m);
    return state_->iv.is_point();
}

Rat RealAlg::rational_value() const {
    std::lock_guard<std::mutex> lk(state_->m);
    if (!state_->iv.is_point()) throw std::logic_error("rational_value on non-pinned algebraic number");
    return state_->iv.lo;
}

Interval<Rat> RealAlg::refine_step() const {
    std::lock_guard<std::mutex> lk(state_->m);
    Interval<Rat>& iv = state_->iv;
    if (iv.is_point()) return iv;
    if (state_->chain.empty()) state_->chain = sturm_chain(defining_);
    Rat mid = (iv.lo + iv.hi) / 2;
    if (is_zero(defining_.eval(mid))) {
        iv = Interval<Rat>::point(mid);
        return iv;
    }
    int roots_left = detail::variations_at(state_->chain, iv.lo) -
                     detail::variations_at(state_->chain, mid);
    iv = roots_left == 1 ? Interval<Rat>::open(iv.lo, mid) : Interval<Rat>::open(mid, iv.hi);
    return iv;
}

Interval<Rat> RealAlg::refined(const Rat& max_width, long cap) const {
    Interval<Rat> iv = isolating();
    long steps = 0;
    while (!iv.is_point() && iv.hi - iv.lo > max_width) {
        if (++steps > cap) throw ResourceError("interval refinement exceeded bisection cap");
        iv = refine_step();
    }
    return iv;
}

RealAlg RealAlg::from_poly_interval(const QPoly& p, const Interval<Rat>& iv, long bisect_cap) {
    if (p.is_zero_poly()) throw std::domain_error("zero polynomial does not define an algebraic number");
    QPoly s = canon(p);
    if (count_real_roots(s, iv) != 1)
        throw std::invalid_argument("interval does not isolate exactly one root");
    if (s.degree() == 1) return RealAlg(-s.c[0] / s.c[1]);
    if (iv.is_point()) return RealAlg(iv.lo);
    (void)bisect_cap;
    return RealAlg(std::move(s), iv);
}

RealAlg RealAlg::root_of(const QPoly& p, int index, long bisect_cap) {
    if (p.is_zero_poly()) throw std::domain_error("zero polynomial does not define an algebraic number");
    QPoly s = canon(p);
    auto roots = isolate_real_roots(s, bisect_cap);
    if (index < 1 || static_cast<size_t>(index) > roots.size())
        throw std::domain_error("root index out of range: polynomial has " +
                                std::to_string(roots.size()) + " real roots");
    const Interval<Rat>& iv = roots[index - 1];
    if (s.degree() == 1) return RealAlg(-s.c[0] / s.c[1]);
    if (iv.is_point()) return RealAlg(iv.lo);
    return RealAlg(std::move(s), iv);
}

int RealAlg::sgn() const {
    Interval<Rat> iv = isolating();
    if (iv.is_point()) return sign(iv.lo);
    if (is_zero(defining_.eval(Rat(0)))) {
        // zero is a root of the defining polynomial; the value is zero
        // exactly when zero lies in the isolating interval
        if (iv.contains(Rat(0))) return 0;
    }
    while (true) {
        if (sign(iv.lo) >= 0) return 1;
        if (sign(iv.hi) <= 0) return -1;
        iv = refine_step();
        if (iv.is_point()) return sign(iv.lo);
    }
}

RealAlg ra_neg(const RealAlg& a) {
    if (a.is_rational()) return RealAlg(-a.rational_value());
    std::vector<Rat> c = a.defining_.c;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    QPoly neg = normalize_content(QPoly(std::move(c)));
    Interval<Rat> iv = a.isolating();
    return RealAlg(std::move(neg), Interval<Rat>::open(-iv.hi, -iv.lo));
}

RealAlg ra_add(const RealAlg& a, const RealAlg& b) {
    if (a.is_rational() && b.is_rational()) return RealAlg(a.rational_value() + b.rational_value());
    if (a.is_rational() || b.is_rational()) {
        const RealAlg& alg = a.is_rational() ? b : a;
        Rat r = a.is_rational() ? a.rational_value() : b.rational_value();
        if (is_zero(r)) return alg;
        QPoly shifted = normalize_content(alg.defining_.shift(-r));
        Interval<Rat> iv = alg.isolating();
        return RealAlg(std::move(shifted), Interval<Rat>::open(iv.lo + r, iv.hi + r));
    }
    QPoly c = canon(resultant_sum_poly(a.defining_, b.defining_));
    ChainCounter counter(c);
    long steps = 0;
    while (true) {
        Interval<Rat> ia = a.isolating(), ib = b.isolating();
        if (ia.is_point() || ib.is_point()) return ra_add(b, a);  // rational fast path now applies
        Rat lo = ia.lo + ib.lo, hi = ia.hi + ib.hi;
        if (counter.closed(lo, hi) == 1)
            return RealAlg(std::move(counter.s), Interval<Rat>::open(lo, hi));
        if (++steps > 10000) throw ResourceError("ra_add refinement exceeded bisection cap");
        a.refine_step();
        b.refine_step();
    }
}

RealAlg ra_mul(const RealAlg& a, const RealAlg& b) {
    if (a.is_rational() && b.is_rational()) return RealAlg(a.rational_value() * b.rational_value());
    if (a.is_rational() || b.is_rational()) {
        const RealAlg& alg = a.is_rational() ? b : a;
        Rat r = a.is_rational() ? a.rational_value() : b.rational_value();
        if (is_zero(r)) return RealAlg(Rat(0));
        if (r == 1) return alg;
        QPoly scaled = normalize_content(alg.defining_.scale_arg(Rat(1) / r));
        Interval<Rat> iv = alg.isolating();
        Rat l = iv.lo * r, h = iv.hi * r;
        if (sign(r) < 0) std::swap(l, h);
        return RealAlg(std::move(scaled), Interval<Rat>::open(l, h));
    }
    QPoly bs = strip_zero_roots(b.defining_);
    QPoly c = canon(resultant_prod_poly(a.defining_, bs));
    ChainCounter counter(c);
    long steps = 0;
    while (true) {
        Interval<Rat> ia = a.isolating(), ib = b.isolating();
        if (ia.is_point() || ib.is_point()) return ra_mul(b, a);
        Rat p1 = ia.lo * ib.lo, p2 = ia.lo * ib.hi, p3 = ia.hi * ib.lo, p4 = ia.hi * ib.hi;
        Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
        if (counter.closed(lo, hi) == 1)
            return RealAlg(std::move(counter.s), Interval<Rat>::open(lo, hi));
        if (++steps > 10000) throw ResourceError("ra_mul refinement exceeded bisection cap");
        a.refine_step();
        b.refine_step();
    }
}

RealAlg ra_inv(const RealAlg& a) {
    int s = a.sgn();
    if (s == 0) throw std::domain_error("division by zero");
    if (a.is_rational()) return RealAlg(Rat(1) / a.rational_value());
    QPoly stripped = strip_zero_roots(a.defining_);
    QPoly c = canon(stripped.reversed());
    ChainCounter counter(c);
    long steps = 0;
    Interval<Rat> ia = a.isolating();
    while (!ia.is_point() && sign(ia.lo) * sign(ia.hi) <= 0) {
        if (++steps > 10000) throw ResourceError("ra_inv refinement exceeded bisection cap");
        ia = a.refine_step();
    }
    if (ia.is_point()) return RealAlg(Rat(1) / ia.lo);
    while (true) {
        Rat lo = 1 / ia.hi, hi = 1 / ia.lo;
        if (counter.closed(lo, hi) == 1)
            return RealAlg(std::move(counter.s), Interval<Rat>::open(lo, hi));
        if (++steps > 10000) throw ResourceError("ra_inv refinement exceeded bisection cap");
        ia = a.refine_step();
        if (ia.is_point()) return RealAlg(Rat(1) / ia.lo);
    }
}

Cmp ra_compare(const RealAlg& a, const RealAlg& b) {
    if (a.state_ == b.state_) return Cmp::EQ;  // same shared value
    bool ar = a.is_rational(), br = b.is_rational();
    if (ar && br) return cmp_from_sign(sign(a.rational_value() - b.rational_value()));
    if (ar || br) {
        const RealAlg& alg = ar ? b : a;
        Rat r = ar ? a.rational_value() : b.rational_value();
        Interval<Rat> iv = alg.isolating();
        Cmp rel;  // alg vs r
        if (iv.contains(r) && is_zero(alg.defining_.eval(r))) {
            rel = Cmp::EQ;
        } else if (iv.is_point()) {
            rel = cmp_from_sign(sign(iv.lo - r));
        } else if (sign(r - iv.hi) >= 0) {
            rel = Cmp::LT;
        } else if (sign(iv.lo - r) >= 0) {
            rel = Cmp::GT;
        } else {
            rel = count_roots_halfopen(alg.defining_, iv.lo, r) == 1 ? Cmp::LT : Cmp::GT;
        }
        if (ar) rel = (rel == Cmp::LT ? Cmp::GT : rel == Cmp::GT ? Cmp::LT : Cmp::EQ);
        return rel;
    }
    // both irrational: equality via a shared root of the gcd
    Interval<Rat> ia = a.isolating(), ib = b.isolating();
    QPoly g = poly_gcd(a.defining_, b.defining_);
    if (g.degree() >= 1) {
        Rat lo = std::max(ia.lo, ib.lo), hi = std::min(ia.hi, ib.hi);
        if (lo < hi && count_roots_halfopen(g, lo, hi) - (is_zero(g.eval(hi)) ? 1 : 0) >= 1)
            return Cmp::EQ;
    }
    long steps = 0;
    while (true) {
        if (sign(ia.hi - ib.lo) <= 0) return Cmp::LT;
        if (sign(ib.hi - ia.lo) <= 0) return Cmp::GT;
        if (++steps > 10000) throw ResourceError("ra_compare refinement exceeded bisection cap");
        ia = a.refine_step();
        ib = b.refine_step();
        if (ia.is_point() || ib.is_point()) return ra_compare(a, b);  // rational path now applies
    }
}

Int ra_floor(const RealAlg& a) {
    if (a.is_rational()) return rat_floor(a.rational_value());
    Interval<Rat> iv = a.isolating();
    long steps = 0;
    while (true) {
        if (iv.is_point()) return rat_floor(iv.lo);
        Int first = rat_floor(iv.lo) + 1;
        Int last = rat_ceil(iv.hi) - 1;
        if (first > last) return rat_floor(iv.lo);  // no integer strictly inside
        if (first == last) {
            Rat n{first};
            if (iv.contains(n) && is_zero(a.defining_.eval(n))) return first;  // value == n
            if (count_roots_halfopen(a.defining_, iv.lo, n) == 1) return first - 1;  // value < n
            return first;
        }
        if (++steps > 10000) throw ResourceError("ra_floor refinement exceeded bisection cap");
        iv = a.refine_step();
    }
}

std::string RealAlg::to_string() const {
    if (is_rational()) return oind::to_string(rational_value());
    auto chain = sturm_chain(defining_);
    Interval<Rat> iv = isolating();
    int before = detail::variations_at_neg_inf(chain) - detail::variations_at(chain, iv.lo);
    int index = before + 1;
    return "root(" + poly_to_string(defining_, "t") + ", " + std::to_string(index) + ")";
}

int rapoly_sign_at(const RAPoly& e, const Rat& x) {
    Rat rational_part(0);
    std::vector<std::pair<const RealAlg*, Rat>> irr;  // coefficient, x^i
    Rat xp(1);
    for (size_t i = 0; i < e.c.size(); ++i) {
        if (e.c[i].is_rational())
            rational_part += e.c[i].rational_value() * xp;
        else
            irr.emplace_back(&e.c[i], xp);
        xp *= x;
    }
    if (irr.empty()) return sign(rational_part);
    Rat width(1);
    for (int round = 0; round < 48; ++round) {
        Rat lo = rational_part, hi = rational_part;
        for (const auto& [coef, scale] : irr) {
            Interval<Rat> iv = coef->refined(width);
            Rat a = iv.lo * scale, b = iv.hi * scale;
            if (a > b) std::swap(a, b);
            lo += a;
            hi += b;
        }
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        width /= 64;
    }
    // enclosure kept straddling zero: decide exactly
    RealAlg acc{rational_part};
    for (const auto& [coef, scale] : irr) acc = ra_add(acc, ra_mul(*coef, RealAlg(scale)));
    return acc.sgn();
}

namespace {

// enclosure of e over a rational box, with coefficient enclosures of the
// given width; interval Horner
std::pair<Rat, Rat> rapoly_enclosure(const RAPoly& e, const Rat& lo, const Rat& hi,
                                     const Rat& coeff_width) {
    Rat alo(0), ahi(0);
    for (auto it = e.c.rbegin(); it != e.c.rend(); ++it) {
        // multiply accumulated enclosure by [lo, hi]
        Rat p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rat mlo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat mhi = std::max(std::max(p1, p2), std::max(p3, p4));
        Interval<Rat> ci = it->refined(coeff_width);
        alo = mlo + ci.lo;
        ahi = mhi + ci.hi;
    }
    return {alo, ahi};
}

// Collapse a polynomial with RealAlg coefficients to one with rational
// coefficients whose real roots include every real root of e: replace each
// distinct irrational coefficient by a fresh variable and eliminate it with
// a resultant against its defining polynomial.
QPoly collapse_to_q(const RAPoly& e) {
    std::vector<RealAlg> alphas;
    std::vector<int> coeff_var(e.c.size(), -1);
    for (size_t i = 0; i < e.c.size(); ++i) {
        if (e.c[i].is_rational()) continue;
        int found = -1;
        for (size_t j = 0; j < alphas.size(); ++j)
            if (ra_compare(alphas[j], e.c[i]) == Cmp::EQ) {
                found = static_cast<int>(j);
                break;
            }
        if (found < 0) {
            alphas.push_back(e.c[i]);
            found = static_cast<int>(alphas.size()) - 1;
        }
        coeff_var[i] = found;
    }
    if (alphas.empty()) {
        std::vector<Rat> qc;
        qc.reserve(e.c.size());
        for (const auto& c : e.c) qc.push_back(c.rational_value());
        return QPoly(std::move(qc));
    }
    unsigned nv = static_cast<unsigned>(alphas.size()) + 1;
    MPoly big = MPoly::zero(nv);
    for (size_t i = 0; i < e.c.size(); ++i) {
        MPoly coef = coeff_var[i] < 0 ? MPoly::constant(nv, e.c[i].rational_value())
                                      : MPoly::var(nv, static_cast<unsigned>(coeff_var[i]) + 1);
        std::vector<unsigned> mono(nv, 0);
        mono[0] = static_cast<unsigned>(i);
        MPoly xi = MPoly::zero(nv);
        xi.terms.emplace(std::move(mono), Rat(1));
        big = big + coef * xi;
    }
    for (size_t j = alphas.size(); j-- > 0;) {
        unsigned v = static_cast<unsigned>(j) + 1;
        if (big.deg_in(v) <= 0) continue;
        big = resultant_eliminate(big, v, alphas[j].defining());
    }
    QPoly n = big.to_qpoly(0);
    if (n.is_zero_poly())
        throw ResourceError("degenerate elimination while collapsing an algebraic-coefficient polynomial");
    return n;
}

// exact RealAlg evaluation; last resort for the root filters
int rapoly_sign_at_exact(const RAPoly& e, const RealAlg& x) {
    RealAlg acc(Rat(0));
    for (auto it = e.c.rbegin(); it != e.c.rend(); ++it) acc = ra_add(ra_mul(acc, x), *it);
    return acc.sgn();
}

// does e have a root at the unique N-root inside the bracket?
bool is_root_of(const RAPoly& e, const QPoly& nsf, const Interval<Rat>& iv, long cap) {
    if (iv.is_point()) return rapoly_sign_at(e, iv.lo) == 0;
    int slo = rapoly_sign_at(e, iv.lo), shi = rapoly_sign_at(e, iv.hi);
    if (slo == 0 || shi == 0) {
        // rational endpoint root of e; shrink the bracket off it and retry
        Interval<Rat> narrowed = iv;
        ChainCounter counter(nsf);
        for (int k = 0; k < 64; ++k) {
            Rat mid = (narrowed.lo + narrowed.hi) / 2;
            if (is_zero(nsf.eval(mid))) return rapoly_sign_at(e, mid) == 0;
            narrowed = counter.halfopen(narrowed.lo, mid) == 1
                           ? Interval<Rat>::open(narrowed.lo, mid)
                           : Interval<Rat>::open(mid, narrowed.hi);
            slo = rapoly_sign_at(e, narrowed.lo);
            shi = rapoly_sign_at(e, narrowed.hi);
            if (slo != 0 && shi != 0) break;
        }
        if (slo == 0 || shi == 0) throw ResourceError("cannot move bracket off a root");
        return is_root_of(e, nsf, narrowed, cap);
    }
    if (slo * shi < 0) return true;  // sign change: odd-multiplicity root inside
    // same signs: either no root or an even-multiplicity root; try to exclude
    Rat w(1);
    Interval<Rat> box = iv;
    ChainCounter counter(nsf);
    for (int k = 0; k < 24; ++k) {
        auto [elo, ehi] = rapoly_enclosure(e, box.lo, box.hi, w);
        if (sign(elo) > 0 || sign(ehi) < 0) return false;
        w /= 64;
        for (int j = 0; j < 3 && !box.is_point(); ++j) {
            Rat mid = (box.lo + box.hi) / 2;
            if (is_zero(nsf.eval(mid))) {
                box = Interval<Rat>::point(mid);
                break;
            }
            box = counter.halfopen(box.lo, mid) == 1 ? Interval<Rat>::open(box.lo, mid)
                                                     : Interval<Rat>::open(mid, box.hi);
        }
        if (box.is_point()) return rapoly_sign_at(e, box.lo) == 0;
    }
    // exact decision
    RealAlg r = RealAlg::from_poly_interval(nsf, box, cap);
    return rapoly_sign_at_exact(e, r) == 0;
}

}  // namespace

std::vector<RealAlg> real_roots_of(const RAPoly& p, long cap) {
    if (p.is_zero_poly()) throw std::domain_error("cannot isolate roots of zero polynomial");
    std::vector<RealAlg> out;
    if (p.degree() <= 0) return out;
    bool all_rat = true;
    for (const auto& c : p.c)
        if (!c.is_rational()) {
            all_rat = false;
            break;
        }
    if (all_rat) {
        std::vector<Rat> qc;
        qc.reserve(p.c.size());
        for (const auto& c : p.c) qc.push_back(c.rational_value());
        QPoly q(std::move(qc));
        int n = count_real_roots(q);
        for (int i = 1; i <= n; ++i) out.push_back(RealAlg::root_of(q, i, cap));
        return out;
    }
    QPoly n = canon(collapse_to_q(p));
    if (n.degree() <= 0) return out;
    auto candidates = isolate_real_roots(n, cap);
    ChainCounter counter(n);
    for (auto& iv : candidates) {
        if (!is_root_of(p, counter.s, iv, cap)) continue;
        out.push_back(RealAlg::from_poly_interval(counter.s, iv, cap));
    }
    return out;
}

RealAlg algebraic_root(const RAPoly& e, const Rat& lo, const Rat& hi, long cap) {
    if (e.is_zero_poly()) throw std::domain_error("zero polynomial does not define a root");
    bool all_rat = true;
    for (const auto& c : e.c)
        if (!c.is_rational()) {
            all_rat = false;
            break;
        }
    if (all_rat) {
        std::vector<Rat> qc;
        qc.reserve(e.c.size());
        for (const auto& c : e.c) qc.push_back(c.rational_value());
        return RealAlg::from_poly_interval(QPoly(std::move(qc)), Interval<Rat>::open(lo, hi), cap);
    }

    int slo = rapoly_sign_at(e, lo), shi = rapoly_sign_at(e, hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("algebraic_root requires a sign-changing bracket");

    ChainCounter counter(canon(collapse_to_q(e)));

    // shrink the bracket until it isolates within the collapsed polynomial
    Rat a = lo, b = hi;
    long steps = 0;
    while (counter.closed(a, b) != 1) {
        if (++steps > cap) throw ResourceError("algebraic_root refinement exceeded bisection cap");
        Rat mid = (a + b) / 2;
        int smid = rapoly_sign_at(e, mid);
        if (smid == 0) return RealAlg(mid);
        if (smid == slo)
            a = mid;
        else
            b = mid;
    }
    return RealAlg::from_poly_interval(counter.s, Interval<Rat>::open(a, b), cap);
}

}  // namespace oind
