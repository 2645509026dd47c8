#include "oind/rcroots.hpp"

#include <algorithm>
#include <mutex>

namespace oind {

namespace {

Frac frac_rat(ModelId m, const Rat& q) {
    return frac_make(RingElem::from_int(m, q.get_num()), RingElem::from_int(m, q.get_den()));
}

// sign of the Puiseux-coefficient polynomial w at the fraction num/den
// (den > 0): Horner on sum w_i num^i den^(deg-i)
int ppvec_sign_at_frac(const std::vector<PuiseuxPoly>& w, const PuiseuxPoly& num,
                       const PuiseuxPoly& den) {
    if (w.empty()) return 0;
    PuiseuxPoly acc = w.back();
    PuiseuxPoly dp = PuiseuxPoly::constant(RealAlg(1));
    for (size_t i = w.size() - 1; i-- > 0;) {
        dp = dp * den;
        acc = acc * num + w[i] * dp;
    }
    return acc.sgn();
}

// w(u + m) for a Puiseux-coefficient polynomial in u
std::vector<PuiseuxPoly> compose_shift(const std::vector<PuiseuxPoly>& w, const PuiseuxPoly& m) {
    std::vector<PuiseuxPoly> acc;
    for (size_t idx = w.size(); idx-- > 0;) {
        std::vector<PuiseuxPoly> next(acc.size() + 1);
        for (size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] = next[k + 1] + acc[k];
            next[k] = next[k] + acc[k] * m;
        }
        next[0] = next[0] + w[idx];
        while (!next.empty() && next.back().is_zero()) next.pop_back();
        acc = std::move(next);
    }
    return acc;
}

struct SlotLead {
    bool exact = false;  // the value-zero slot
    Rat q;
    RealAlg c;
};

// value order of leading behaviors c * x^q (exact slot = value 0)
bool slot_less(const SlotLead& a, const SlotLead& b) {
    auto side = [](const SlotLead& s) { return s.exact ? 0 : s.c.sgn(); };
    int sa = side(a), sb = side(b);
    if (sa != sb) return sa < sb;
    if (a.exact || b.exact) return false;
    if (sa > 0) {
        if (a.q != b.q) return a.q < b.q;
        return ra_compare(a.c, b.c) == Cmp::LT;
    }
    if (a.q != b.q) return a.q > b.q;
    return ra_compare(a.c, b.c) == Cmp::LT;
}

// rational strictly between two algebraic values (requires a < b)
Rat rational_between(const RealAlg& a, const RealAlg& b) {
    if (a.is_rational() && b.is_rational())
        return simplest_rational_between(a.rational_value(), b.rational_value());
    Rat w(1);
    for (int round = 0; round < 256; ++round) {
        Interval<Rat> ia = a.refined(w), ib = b.refined(w);
        Rat a_hi = ia.is_point() ? ia.lo : ia.hi;
        Rat b_lo = ib.lo;
        if (a_hi < b_lo) return simplest_rational_between(a_hi, b_lo);
        if (a_hi == b_lo && !ia.is_point() && !ib.is_point()) return a_hi;
        w /= 16;
    }
    throw ResourceError("cannot find a rational between two algebraic values");
}

Rat rational_between_nonzero(const RealAlg& a, const RealAlg& b) {
    Rat m = rational_between(a, b);
    if (sign(m) != 0) return m;
    return rational_between(RealAlg(Rat(0)), b);
}

bool ff_exponent_ok(ModelId model, const Rat& e) {
    switch (model) {
        case ModelId::Z: return sign(e) == 0;
        case ModelId::ZX_LEX: return is_integer(e);
        case ModelId::SHEPHERDSON: return true;
    }
    return false;
}

}  // namespace

bool realizable_in_m(ModelId model, const PuiseuxPoly& pp) {
    for (const auto& t : pp.terms()) {
        if (sign(t.exp) < 0) return false;
        switch (model) {
            case ModelId::Z:
                if (sign(t.exp) != 0) return false;
                if (!t.coef.is_rational() || !is_integer(t.coef.rational_value())) return false;
                break;
            case ModelId::ZX_LEX:
                if (!is_integer(t.exp)) return false;
                if (!t.coef.is_rational() || !is_integer(t.coef.rational_value())) return false;
                break;
            case ModelId::SHEPHERDSON:
                if (sign(t.exp) == 0 &&
                    (!t.coef.is_rational() || !is_integer(t.coef.rational_value())))
                    return false;
                break;
        }
    }
    return true;
}

std::optional<RingElem> realize_in_m(ModelId model, const PuiseuxPoly& pp) {
    if (!realizable_in_m(model, pp)) return std::nullopt;
    switch (model) {
        case ModelId::Z:
            return RingElem::from_int(
                ModelId::Z, pp.is_zero() ? Int(0) : pp.leading().coef.rational_value().get_num());
        case ModelId::ZX_LEX: {
            std::vector<Rat> c;
            for (const auto& t : pp.terms()) {
                size_t e = static_cast<size_t>(t.exp.get_num().get_ui());
                if (c.size() <= e) c.resize(e + 1, Rat(0));
                c[e] = t.coef.rational_value();
            }
            return RingElem::from_poly(QPoly(std::move(c)));
        }
        case ModelId::SHEPHERDSON: return RingElem::from_puiseux(pp);
    }
    return std::nullopt;
}

std::optional<Frac> realize_in_ff(ModelId model, const PuiseuxPoly& pp) {
    if (auto m = realize_in_m(model, pp)) return frac_from_elem(*m);
    switch (model) {
        case ModelId::Z: {
            if (pp.terms().size() == 1 && sign(pp.leading().exp) == 0 &&
                pp.leading().coef.is_rational())
                return frac_rat(model, pp.leading().coef.rational_value());
            return std::nullopt;
        }
        case ModelId::ZX_LEX: {
            Int den_lcm = 1;
            Rat min_exp(0);
            for (const auto& t : pp.terms()) {
                if (!is_integer(t.exp)) return std::nullopt;
                if (!t.coef.is_rational()) return std::nullopt;
                Int g;
                mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(),
                        t.coef.rational_value().get_den().get_mpz_t());
                den_lcm = g;
                if (t.exp < min_exp) min_exp = t.exp;
            }
            long shift = std::max(0L, static_cast<long>(-min_exp.get_num().get_si()));
            std::vector<Rat> c;
            for (const auto& t : pp.terms()) {
                long e = static_cast<long>(t.exp.get_num().get_si()) + shift;
                if (c.size() <= static_cast<size_t>(e)) c.resize(e + 1, Rat(0));
                c[e] = t.coef.rational_value() * Rat(den_lcm);
            }
            std::vector<Rat> d(static_cast<size_t>(shift) + 1, Rat(0));
            d[shift] = Rat(den_lcm);
            return frac_make(RingElem::from_poly(QPoly(std::move(c))),
                             RingElem::from_poly(QPoly(std::move(d))));
        }
        case ModelId::SHEPHERDSON: {
            // shift by a fractional power so no term lands on exponent zero
            Rat min_exp(0);
            for (const auto& t : pp.terms())
                if (t.exp < min_exp) min_exp = t.exp;
            Int k = rat_ceil(-min_exp);
            if (sign(k) < 0) k = 0;
            for (long den = 2; den <= 31; ++den) {
                Rat sigma = Rat(k) + make_rat(1, den);
                bool collision = false;
                for (const auto& t : pp.terms())
                    if (t.exp + sigma == 0) collision = true;
                if (collision) continue;
                PuiseuxPoly num = pp.shifted_scaled(RealAlg(1), sigma);
                PuiseuxPoly dn = PuiseuxPoly::monomial(RealAlg(1), sigma);
                return frac_make(RingElem::from_puiseux(num), RingElem::from_puiseux(dn));
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// ===========================================================================
// RootSystem: Newton-polygon branch tree over the cleared polynomial; every
// bracket is certified by a Sturm count over FF(M), which stays the sole
// authority on how many roots live where.
// ===========================================================================

class RootSystem {
  public:
    struct Node {
        PuiseuxPoly phi;
        std::vector<PuiseuxPoly> w;  // P(phi + u) as a polynomial in u
        std::optional<Rat> bound;    // children exponents stay strictly below
        Rat added_exp;               // exponent of the term this node added
        Frac lo, hi;                 // open bracket holding this node's roots
        int count = 0;
        bool exact_here = false;  // phi itself is a root of P
        bool expanded = false;
        bool blocked = false;  // no FF probes separate this cluster
        std::string blocker;
        std::vector<std::shared_ptr<Node>> slots;  // ascending, only count > 0
        bool is_exact_slot = false;
        long depth = 0;

        Node() : lo(Frac{}), hi(Frac{}) {}
    };
    using NodePtr = std::shared_ptr<Node>;

    RootSystem(const FPoly& p, const ModelContext& ctx) : ctx_(ctx), model_(ctx.id) {
        if (p.is_zero_poly()) throw std::domain_error("zero polynomial has no roots");
        p_sf_ = square_free_part(p);
        if (p_sf_.degree() < 1) {
            total_ = 0;
            return;
        }
        chain_ = sturm_chain(p_sf_);
        PuiseuxPoly denprod = PuiseuxPoly::constant(RealAlg(1));
        for (const auto& c : p_sf_.c) denprod = denprod * c.den.to_puiseux();
        cleared_.reserve(p_sf_.c.size());
        for (const auto& c : p_sf_.c) {
            auto [q, r] = puiseux_series_div(denprod * c.num.to_puiseux(), c.den.to_puiseux(),
                                             Rat(-1000000), 4096);
            if (!r.is_zero()) throw std::logic_error("denominator clearing failed");
            cleared_.push_back(q);
        }
        Frac bound = cauchy_bound(p_sf_);
        root_ = std::make_shared<Node>();
        root_->w = cleared_;
        root_->lo = frac_neg(bound);
        root_->hi = bound;
        root_->count = count_open(root_->lo, root_->hi);
        total_ = root_->count;
    }

    int total() const { return total_; }
    ModelId model() const { return model_; }
    const FPoly& defining() const { return p_sf_; }
    const std::vector<FPoly>& chain() const { return chain_; }
    const ModelContext& ctx() const { return ctx_; }

    // locate the index-th root (1-based ascending), expanding until its node
    // isolates exactly one root
    NodePtr locate(int index) {
        std::lock_guard<std::mutex> lk(mu_);
        if (index < 1 || index > total_) throw std::logic_error("root ordinal out of range");
        NodePtr node = root_;
        int skip = index - 1;
        while (node->count > 1) {
            expand_locked(node);
            if (node->blocked) throw DensityError(node->blocker);
            NodePtr next;
            for (const auto& s : node->slots) {
                if (skip < s->count) {
                    next = s;
                    break;
                }
                skip -= s->count;
            }
            if (!next) throw std::logic_error("root bookkeeping mismatch");
            node = next;
        }
        return node;
    }

    // expansion of the isolated root held by leaf, down to floor_exponent
    PuiseuxExpansion expand_leaf(NodePtr leaf, const Rat& floor_exponent) {
        std::lock_guard<std::mutex> lk(mu_);
        NodePtr node = leaf;
        long guard = 0;
        while (true) {
            if (node->is_exact_slot) return PuiseuxExpansion{node->phi, floor_exponent, true};
            expand_locked(node);
            if (node->blocked) throw DensityError(node->blocker);
            NodePtr next;
            for (const auto& s : node->slots)
                if (s->count == 1) next = s;
            if (!next) throw std::logic_error("isolated root lost during expansion");
            if (!next->is_exact_slot && next->added_exp < floor_exponent)
                return PuiseuxExpansion{node->phi, floor_exponent, false};
            node = next;
            if (++guard > ctx_.bisect_cap) throw ResourceError("expansion exceeded the step cap");
        }
    }

    // refine the bracket of an isolated root by one expansion level
    NodePtr deepen(NodePtr leaf) {
        std::lock_guard<std::mutex> lk(mu_);
        if (leaf->is_exact_slot) return leaf;
        expand_locked(leaf);
        if (leaf->blocked) throw DensityError(leaf->blocker);
        for (const auto& s : leaf->slots)
            if (s->count == 1) return s;
        throw std::logic_error("isolated root lost during refinement");
    }

    // roots of p_sf in the open interval (lo, hi)
    int count_open(const Frac& lo, const Frac& hi) const {
        int n = detail::variations_at(chain_, lo) - detail::variations_at(chain_, hi);
        if (is_zero(p_sf_.eval(hi))) --n;
        return n;
    }

    int sign_of_p_at(const Frac& f) const {
        return ppvec_sign_at_frac(cleared_, f.num.to_puiseux(), f.den.to_puiseux());
    }

  private:
    void expand_locked(const NodePtr& node) {
        if (node->expanded || node->blocked || node->is_exact_slot) return;
        if (node->depth > 512) throw ResourceError("expansion tree exceeded the depth cap");
        std::vector<PuiseuxPoly> w = node->w;
        size_t k = 0;
        while (k < w.size() && w[k].is_zero()) ++k;
        bool exact_here = k > 0;
        node->exact_here = exact_here;
        if (k > 0) w.erase(w.begin(), w.begin() + k);
        if (w.size() <= 1) {
            node->expanded = true;
            if (!exact_here || node->count != 1)
                throw std::logic_error("branch with no continuations but surplus roots");
            auto slot = make_exact_slot(node);
            slot->lo = node->lo;
            slot->hi = node->hi;
            slot->count = 1;
            node->slots = {slot};
            return;
        }

        // upper Newton hull of the points (i, topexp(w_i))
        struct Pt {
            long i;
            Rat d;
        };
        std::vector<Pt> pts;
        for (size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_zero()) pts.push_back({static_cast<long>(i), w[i].leading().exp});
        std::vector<Pt> hull;
        for (const auto& p : pts) {
            while (hull.size() >= 2) {
                const Pt& a = hull[hull.size() - 2];
                const Pt& b = hull[hull.size() - 1];
                if ((b.d - a.d) * Rat(p.i - b.i) <= (p.d - b.d) * Rat(b.i - a.i))
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(p);
        }

        struct Cand {
            Rat q;
            RealAlg c;
        };
        std::vector<Cand> cands;
        for (size_t h = 0; h + 1 < hull.size(); ++h) {
            const Pt& a = hull[h];
            const Pt& b = hull[h + 1];
            Rat slope = (b.d - a.d) / Rat(b.i - a.i);
            Rat q = -slope;
            if (node->bound && !(q < *node->bound)) continue;
            if (q.get_den() > ctx_.max_exp_den)
                throw ResourceError("exponent denominator exceeds the model cap");
            std::vector<RealAlg> ec(static_cast<size_t>(b.i - a.i) + 1, RealAlg(Rat(0)));
            for (const auto& p : pts) {
                if (p.i < a.i || p.i > b.i) continue;
                if (p.d == a.d + slope * Rat(p.i - a.i))
                    ec[static_cast<size_t>(p.i - a.i)] = w[static_cast<size_t>(p.i)].leading().coef;
            }
            for (const RealAlg& c : real_roots_of(RAPoly{std::move(ec)}, ctx_.bisect_cap)) {
                if (c.sgn() == 0) continue;
                cands.push_back({q, c});
            }
        }

        std::vector<SlotLead> leads;
        for (const auto& c : cands) leads.push_back({false, c.q, c.c});
        if (exact_here) leads.push_back({true, Rat(0), RealAlg(Rat(0))});
        std::sort(leads.begin(), leads.end(), slot_less);

        std::vector<Frac> cuts;
        for (size_t j = 0; j + 1 < leads.size(); ++j) {
            auto probe = make_probe(node, leads[j], leads[j + 1]);
            if (!probe) {
                node->blocked = true;
                node->blocker = blocker_text(node, leads[j], leads[j + 1]);
                node->expanded = true;
                return;
            }
            cuts.push_back(*probe);
        }

        std::vector<NodePtr> slots;
        int total_seen = 0;
        for (size_t j = 0; j < leads.size(); ++j) {
            const SlotLead& lead = leads[j];
            NodePtr s;
            if (lead.exact) {
                s = make_exact_slot(node);
            } else {
                s = std::make_shared<Node>();
                s->phi = node->phi + PuiseuxPoly::monomial(lead.c, lead.q);
                s->w = compose_shift(node->w, PuiseuxPoly::monomial(lead.c, lead.q));
                s->bound = lead.q;
                s->added_exp = lead.q;
                s->depth = node->depth + 1;
                if (static_cast<int>(s->phi.terms().size()) > ctx_.max_terms)
                    throw ResourceError("expansion term count exceeds the model cap");
            }
            s->lo = (j == 0) ? node->lo : cuts[j - 1];
            s->hi = (j + 1 == leads.size()) ? node->hi : cuts[j];
            s->count = count_open(s->lo, s->hi);
            total_seen += s->count;
            if (lead.exact && s->count != 1)
                throw std::logic_error("exact root slot does not isolate");
            if (s->count > 0) slots.push_back(s);
        }
        if (total_seen != node->count)
            throw std::logic_error("root counts do not add up across branch slots");
        node->slots = std::move(slots);
        node->expanded = true;
    }

    NodePtr make_exact_slot(const NodePtr& node) {
        auto slot = std::make_shared<Node>();
        slot->phi = node->phi;
        slot->is_exact_slot = true;
        slot->depth = node->depth + 1;
        return slot;
    }

    std::optional<Frac> make_probe(const NodePtr& node, const SlotLead& a, const SlotLead& b) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            auto term = separator_term(a, b, attempt);
            if (!term) return std::nullopt;
            PuiseuxPoly probe_pp = node->phi;
            if (sign(term->first) != 0)
                probe_pp = probe_pp + PuiseuxPoly::monomial(RealAlg(term->first), term->second);
            auto fr = realize_in_ff(model_, probe_pp);
            if (!fr) return std::nullopt;
            if (sign_of_p_at(*fr) != 0) return fr;
        }
        return std::nullopt;
    }

    // candidate separating term gamma * x^e between adjacent leading
    // behaviors; attempts > 0 vary the choice after a probe landed on a root
    std::optional<std::pair<Rat, Rat>> separator_term(const SlotLead& a, const SlotLead& b,
                                                      int attempt) {
        if (a.exact || b.exact) {
            const SlotLead& other = a.exact ? b : a;
            bool above = a.exact;  // probing above the exact value
            if (ff_exponent_ok(model_, other.q)) {
                Rat g = above ? rational_between(RealAlg(Rat(0)), other.c)
                              : rational_between(other.c, RealAlg(Rat(0)));
                for (int k = 0; k < attempt; ++k) g /= 2;
                if (sign(g) != 0) return std::make_pair(g, other.q);
            }
            if (model_ == ModelId::Z) return std::nullopt;
            Rat e = is_integer(other.q) ? other.q - 1 : Rat(rat_floor(other.q));
            e -= attempt;
            return std::make_pair(Rat(above ? 1 : -1), e);
        }
        if (a.q == b.q) {
            if (!ff_exponent_ok(model_, a.q)) {
                if (a.c.sgn() < 0 && b.c.sgn() > 0 && attempt == 0)
                    return std::make_pair(Rat(0), Rat(0));
                return std::nullopt;
            }
            Rat g = rational_between_nonzero(a.c, b.c);
            for (int k = 0; k < attempt; ++k) g = rational_between(RealAlg(g), b.c);
            if (sign(g) == 0) return std::nullopt;
            return std::make_pair(g, a.q);
        }
        const bool b_dominates = a.q < b.q;
        const SlotLead& dom = b_dominates ? b : a;
        const SlotLead& low = b_dominates ? a : b;
        if (ff_exponent_ok(model_, dom.q)) {
            Rat g = b_dominates ? rational_between(RealAlg(Rat(0)), dom.c)
                                : rational_between(dom.c, RealAlg(Rat(0)));
            for (int k = 0; k < attempt; ++k) g /= 2;
            if (sign(g) != 0) return std::make_pair(g, dom.q);
        }
        if (ff_exponent_ok(model_, low.q)) {
            Rat g;
            if (b_dominates) {
                g = rational_between(low.c, ra_add(low.c, RealAlg(1))) + attempt + 1;
            } else {
                g = rational_between(ra_add(low.c, RealAlg(-1)), low.c) - attempt - 1;
            }
            return std::make_pair(g, low.q);
        }
        if (model_ == ModelId::SHEPHERDSON) {
            Rat e = (a.q + b.q) / 2;
            // nudge within the gap on retries
            for (int k = 0; k < attempt; ++k) e = (e + std::max(a.q, b.q)) / 2;
            return std::make_pair(Rat(b_dominates ? 1 : -1), e);
        }
        if (model_ == ModelId::ZX_LEX) {
            Rat qlo = std::min(a.q, b.q), qhi = std::max(a.q, b.q);
            Int z = is_integer(qhi) ? Int(qhi.get_num() - 1) : rat_floor(qhi);
            Rat e = Rat(z) - attempt;
            if (e > qlo) return std::make_pair(Rat(b_dominates ? 1 : -1), e);
        }
        if (a.c.sgn() < 0 && b.c.sgn() > 0 && attempt == 0) return std::make_pair(Rat(0), Rat(0));
        return std::nullopt;
    }

    std::string blocker_text(const NodePtr& node, const SlotLead& a, const SlotLead& b) {
        std::string prefix = node->phi.is_zero() ? "0" : node->phi.to_string("x");
        auto lead = [](const SlotLead& s) {
            if (s.exact) return std::string("the exact prefix value");
            return s.c.to_string() + "*x^(" + oind::to_string(s.q) + ")";
        };
        return "no element of FF(M) separates the branches " + lead(a) + " and " + lead(b) +
               " beyond the common prefix " + prefix;
    }

    ModelContext ctx_;
    ModelId model_;
    FPoly p_sf_;
    std::vector<FPoly> chain_;
    std::vector<PuiseuxPoly> cleared_;
    NodePtr root_;
    int total_ = 0;
    std::mutex mu_;
};

// ===========================================================================
// public surface
// ===========================================================================

namespace {

Interval<Frac> node_interval(const RootSystem& sys, const RootSystem::Node& n) {
    if (n.is_exact_slot) {
        if (auto fr = realize_in_ff(sys.model(), n.phi)) return Interval<Frac>::point(*fr);
    }
    return Interval<Frac>(n.lo, n.hi, true, true);
}

struct LeafRef {
    std::shared_ptr<RootSystem> sys;
    RootSystem::NodePtr leaf;
};

// registry tying a RootElem to its leaf: keyed by (system, index)
LeafRef leaf_of(const RootElem& r) {
    auto leaf = r.system->locate(r.root_index);
    return {r.system, leaf};
}

}  // namespace

int real_root_count(const FPoly& p, const ModelContext& ctx) {
    if (p.is_zero_poly()) throw std::domain_error("zero polynomial has no roots");
    FPoly s = square_free_part(p);
    if (s.degree() < 1) return 0;
    auto chain = sturm_chain(s);
    return detail::variations_at_neg_inf(chain) - detail::variations_at_pos_inf(chain);
}

RootElem root_elem(const FPoly& p, int index, const ModelContext& ctx) {
    auto sys = std::make_shared<RootSystem>(p, ctx);
    if (index < 1 || index > sys->total())
        throw std::domain_error("root index out of range: polynomial has " +
                                std::to_string(sys->total()) + " real roots");
    auto leaf = sys->locate(index);
    return RootElem{sys->defining(), node_interval(*sys, *leaf), index, ctx.id, sys};
}

Cmp cmp_root_frac(const RootElem& r, const Frac& f) {
    const auto& chain = r.system->chain();
    const FPoly& def = r.system->defining();
    Interval<Frac> iv = r.isolating;
    if (iv.is_point()) return cmp_from_sign(frac_sign(frac_sub(iv.lo, f)));
    if (frac_cmp(f, iv.lo) != Cmp::GT) return Cmp::GT;   // f <= lo < root
    if (frac_cmp(f, iv.hi) != Cmp::LT) return Cmp::LT;   // root < hi <= f
    if (is_zero(def.eval(f))) return Cmp::EQ;            // f is the isolated root
    int roots_left = detail::variations_at(chain, iv.lo) - detail::variations_at(chain, f);
    return roots_left == 1 ? Cmp::LT : Cmp::GT;
}

Cmp cmp_roots(const RootElem& r, const RootElem& s) {
    if (r.model != s.model) throw std::invalid_argument("model mismatch");
    // shared root of the gcd inside the overlap means equality
    Interval<Frac> ir = r.isolating, is_ = s.isolating;
    if (ir.is_point()) return cmp_from_sign(-static_cast<int>(cmp_root_frac(s, ir.lo)));
    if (is_.is_point()) return cmp_root_frac(r, is_.lo);
    FPoly g = poly_gcd(r.defining, s.defining);
    if (g.degree() >= 1) {
        Frac lo = frac_cmp(ir.lo, is_.lo) == Cmp::GT ? ir.lo : is_.lo;
        Frac hi = frac_cmp(ir.hi, is_.hi) == Cmp::LT ? ir.hi : is_.hi;
        if (frac_cmp(lo, hi) == Cmp::LT) {
            auto gchain = sturm_chain(g);
            int n = detail::variations_at(gchain, lo) - detail::variations_at(gchain, hi);
            if (is_zero(g.eval(hi))) --n;
            if (n >= 1) return Cmp::EQ;
        }
    }
    LeafRef rr = leaf_of(r), ss = leaf_of(s);
    long guard = 0;
    while (true) {
        Interval<Frac> a = node_interval(*rr.sys, *rr.leaf);
        Interval<Frac> b = node_interval(*ss.sys, *ss.leaf);
        if (frac_cmp(a.hi, b.lo) != Cmp::GT) return Cmp::LT;
        if (frac_cmp(b.hi, a.lo) != Cmp::GT) return Cmp::GT;
        if (a.is_point() && b.is_point()) return cmp_from_sign(frac_sign(frac_sub(a.lo, b.lo)));
        if (a.is_point()) return cmp_from_sign(-static_cast<int>(cmp_root_frac(s, a.lo)));
        if (b.is_point()) return cmp_root_frac(r, b.lo);
        rr.leaf = rr.sys->deepen(rr.leaf);
        ss.leaf = ss.sys->deepen(ss.leaf);
        if (++guard > rr.sys->ctx().bisect_cap)
            throw ResourceError("root comparison exceeded the refinement cap");
    }
}

int sign_at_root(const FPoly& q, const RootElem& r) {
    if (q.is_zero_poly()) return 0;
    Interval<Frac> iv = r.isolating;
    if (iv.is_point()) return sign_of(q.eval(iv.lo));
    FPoly g = poly_gcd(r.defining, q);
    if (g.degree() >= 1) {
        auto gchain = sturm_chain(g);
        int n = detail::variations_at(gchain, iv.lo) - detail::variations_at(gchain, iv.hi);
        if (is_zero(g.eval(iv.hi))) --n;
        if (n >= 1) return 0;  // the shared root inside the bracket is r itself
    }
    // shrink r's bracket until q keeps a constant sign on it
    FPoly qs = square_free_part(q);
    auto qchain = sturm_chain(qs);
    LeafRef ref = leaf_of(r);
    long guard = 0;
    while (true) {
        Interval<Frac> iv2 = node_interval(*ref.sys, *ref.leaf);
        if (iv2.is_point()) return sign_of(q.eval(iv2.lo));
        int qroots = detail::variations_at(qchain, iv2.lo) - detail::variations_at(qchain, iv2.hi);
        if (qroots == 0) {
            int slo = sign_of(q.eval(iv2.lo));
            if (slo != 0) return slo;
            int shi = sign_of(q.eval(iv2.hi));
            if (shi != 0) return shi;
        }
        ref.leaf = ref.sys->deepen(ref.leaf);
        if (++guard > ref.sys->ctx().bisect_cap)
            throw ResourceError("sign evaluation exceeded the refinement cap");
    }
}

RootElem shift_root(const RootElem& r, const RingElem& d) {
    Frac df = frac_from_elem(d);
    FPoly shifted = r.defining.shift(frac_neg(df));
    ModelContext ctx;
    ctx.id = r.model;
    return root_elem(shifted, r.root_index, ctx);
}

RootElem reciprocal_root(const RootElem& r) {
    Cmp against_zero = cmp_root_frac(r, frac_from_elem(elem_zero(r.model)));
    if (against_zero == Cmp::EQ) throw std::domain_error("reciprocal of zero");
    FPoly def = r.defining;
    size_t strip = 0;
    while (strip < def.c.size() && is_zero(def.c[strip])) ++strip;
    if (strip > 0) def.c.erase(def.c.begin(), def.c.begin() + strip);
    FPoly rev = def.reversed();
    // index bookkeeping: reciprocation reverses the order within each sign class
    ModelContext ctx;
    ctx.id = r.model;
    auto chain = sturm_chain(square_free_part(r.defining));
    Frac zero = frac_from_elem(elem_zero(r.model));
    int total = real_root_count(r.defining, ctx);
    int upto_zero = detail::variations_at_neg_inf(chain) - detail::variations_at(chain, zero);
    bool zero_root = is_zero(square_free_part(r.defining).eval(zero));
    int n_neg = upto_zero - (zero_root ? 1 : 0);
    int n_pos = total - upto_zero;
    int index2;
    if (against_zero == Cmp::GT) {
        int j = r.root_index - (total - n_pos);  // position among positive roots
        index2 = n_neg + (n_pos - j + 1);
    } else {
        int j = r.root_index;  // position among negative roots (all below zero ones)
        index2 = n_neg - j + 1;
    }
    return root_elem(rev, index2, ctx);
}

PuiseuxExpansion expand_root(const RootElem& r, const Rat& floor_exponent) {
    LeafRef ref = leaf_of(r);
    return ref.sys->expand_leaf(ref.leaf, floor_exponent);
}

PuiseuxExpansion newton_puiseux_expand(const FPoly& p, int root_index, const Rat& floor_exponent,
                                       const ModelContext& ctx) {
    if (ctx.id != ModelId::SHEPHERDSON)
        throw std::domain_error("newton_puiseux_expand requires the SHEPHERDSON model");
    RootElem r = root_elem(p, root_index, ctx);
    return expand_root(r, floor_exponent);
}

std::string PuiseuxExpansion::to_string() const {
    std::string s = head.is_zero() ? "0" : head.to_string("x");
    if (exact) return s;
    return s + " + O(x^(" + oind::to_string(truncation_exponent) + "))";
}

std::string RootElem::to_string() const {
    std::string coeffs;
    for (int i = defining.degree(); i >= 0; --i) {
        const Frac& c = defining.c[i];
        if (frac_is_zero(c)) continue;
        if (!coeffs.empty()) coeffs += " + ";
        coeffs += "(" + c.to_string() + ")";
        if (i >= 1) coeffs += "*t";
        if (i >= 2) coeffs += "^" + std::to_string(i);
    }
    if (coeffs.empty()) coeffs = "0";
    return "rcroot(" + coeffs + ", " + std::to_string(root_index) + ")";
}

}  // namespace oind
