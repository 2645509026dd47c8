#include "oind/frac.hpp"

namespace oind {

Frac frac_make(const RingElem& num, const RingElem& den) {
    if (num.model() != den.model()) throw std::invalid_argument("model mismatch");
    int s = elem_sign(den);
    if (s == 0) throw std::domain_error("fraction with zero denominator");
    if (s < 0) return Frac{elem_neg(num), elem_neg(den)};
    return Frac{num, den};
}

Frac frac_from_elem(const RingElem& e) { return Frac{e, elem_one(e.model())}; }

int frac_sign(const Frac& a) { return elem_sign(a.num); }
bool frac_is_zero(const Frac& a) { return a.num.is_zero(); }

Cmp frac_cmp(const Frac& a, const Frac& b) {
    // a.num/a.den ? b.num/b.den  with positive denominators
    RingElem lhs = elem_mul(a.num, b.den);
    RingElem rhs = elem_mul(b.num, a.den);
    return elem_cmp(lhs, rhs);
}

Frac frac_add(const Frac& a, const Frac& b) {
    RingElem num = elem_add(elem_mul(a.num, b.den), elem_mul(b.num, a.den));
    return frac_make(num, elem_mul(a.den, b.den));
}

Frac frac_sub(const Frac& a, const Frac& b) { return frac_add(a, frac_neg(b)); }

Frac frac_mul(const Frac& a, const Frac& b) {
    return frac_make(elem_mul(a.num, b.num), elem_mul(a.den, b.den));
}

Frac frac_neg(const Frac& a) { return Frac{elem_neg(a.num), a.den}; }

Frac frac_inv(const Frac& a) {
    if (frac_is_zero(a)) throw std::domain_error("inversion of zero fraction");
    return frac_make(a.den, a.num);
}

namespace {

DivOutcome euclid_div_z(const RingElem& n, const RingElem& k) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.as_int().get_mpz_t(), k.as_int().get_mpz_t());
    return DivResult{RingElem::from_int(ModelId::Z, q), RingElem::from_int(ModelId::Z, r)};
}

// Z[x] with the lexicographic order. Write n = q~ * k + r~ over Q. Any valid
// quotient differs from q~ by a constant, so solvability reduces to the
// non-constant coefficients of q~ being integers (constant k: to
// divisibility of all non-constant coefficients of n).
DivOutcome euclid_div_zx(const RingElem& ne, const RingElem& ke) {
    const QPoly& n = ne.as_poly();
    const QPoly& k = ke.as_poly();
    if (k.degree() == 0) {
        Int c = k.c[0].get_num();  // integer, positive
        std::vector<Rat> qc(std::max<size_t>(1, n.c.size()), Rat(0));
        for (size_t i = 1; i < n.c.size(); ++i) {
            Int a = n.c[i].get_num();
            if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t()))
                return NotFound{"coefficient " + a.get_str() + " of X^" + std::to_string(i) +
                                " is not divisible by " + c.get_str()};
            qc[i] = Rat(a / c);
        }
        Int a0 = n.c.empty() ? Int(0) : Int(n.c[0].get_num());
        Int l, q0;
        mpz_fdiv_qr(q0.get_mpz_t(), l.get_mpz_t(), a0.get_mpz_t(), c.get_mpz_t());
        qc[0] = Rat(q0);
        return DivResult{RingElem::from_poly(QPoly(std::move(qc))),
                         RingElem::from_int(ModelId::ZX_LEX, l)};
    }
    auto [qt, rt] = poly_divrem(n, k);
    for (size_t i = 1; i < qt.c.size(); ++i) {
        if (!is_integer(qt.c[i]))
            return NotFound{"quotient coefficient " + to_string(qt.c[i]) + " at X^" +
                            std::to_string(i) + " is not an integer"};
    }
    Rat q0 = qt.c.empty() ? Rat(0) : qt.c[0];
    Rat s = q0 - Rat(rat_floor(q0));
    if (oind::is_zero(s)) {
        // remainder sign decides between the floor and floor - 1
        int rsign = rt.is_zero_poly() ? 0 : sign(rt.leading());
        if (rsign < 0) s = Rat(1);
    }
    QPoly q = qt + QPoly::constant(-s);
    QPoly l = rt + k * s;
    RingElem qe = RingElem::from_poly(q);
    RingElem le = RingElem::from_poly(l);
    // exact certification of the divisibility contract
    if (!elem_eq(elem_add(elem_mul(qe, ke), le), ne))
        throw std::logic_error("euclid_div internal check failed");
    if (elem_sign(le) < 0 || elem_cmp(le, ke) != Cmp::LT)
        throw std::logic_error("euclid_div remainder out of range");
    return DivResult{qe, le};
}

DivOutcome euclid_div_shep(const RingElem& ne, const RingElem& ke) {
    const PuiseuxPoly& n = ne.as_puiseux();
    const PuiseuxPoly& k = ke.as_puiseux();
    auto [qs, rs] = puiseux_divide_nonneg(n, k);
    RealAlg c0 = qs.coeff_at(Rat(0));
    PuiseuxPoly q = qs;
    if (c0.sgn() != 0) {
        Int fl = ra_floor(c0);
        q = qs - PuiseuxPoly::constant(c0) + PuiseuxPoly::constant(RealAlg(fl));
    }
    RingElem qe = RingElem::from_puiseux(q);
    RingElem le = elem_sub(ne, elem_mul(qe, ke));
    for (int guard = 0; guard < 4; ++guard) {
        if (elem_sign(le) < 0) {
            qe = elem_sub(qe, elem_one(ModelId::SHEPHERDSON));
            le = elem_add(le, ke);
            continue;
        }
        if (elem_cmp(le, ke) != Cmp::LT) {
            qe = elem_add(qe, elem_one(ModelId::SHEPHERDSON));
            le = elem_sub(le, ke);
            continue;
        }
        break;
    }
    if (elem_sign(le) < 0 || elem_cmp(le, ke) != Cmp::LT)
        throw std::logic_error("puiseux euclidean division out of range");
    return DivResult{qe, le};
}

}  // namespace

DivOutcome euclid_div(const RingElem& n, const RingElem& k) {
    if (n.model() != k.model()) throw std::invalid_argument("model mismatch");
    if (elem_sign(k) <= 0) throw std::domain_error("euclid_div requires a positive divisor");
    switch (n.model()) {
        case ModelId::Z: return euclid_div_z(n, k);
        case ModelId::ZX_LEX: return euclid_div_zx(n, k);
        case ModelId::SHEPHERDSON: return euclid_div_shep(n, k);
    }
    throw std::logic_error("bad model id");
}

IntPartOutcome frac_integer_part(const Frac& f) {
    DivOutcome out = euclid_div(f.num, f.den);
    if (auto* nf = std::get_if<NotFound>(&out)) return *nf;
    return std::get<DivResult>(out).quotient;
}

IntPartOutcome nat_den_integer_part(const RingElem& m, long n) {
    if (n < 1) throw std::domain_error("denominator must be a positive natural number");
    return frac_integer_part(frac_make(m, RingElem::from_int(m.model(), n)));
}

Frac parse_frac(const ModelContext& m, const std::string& text) {
    // <elem> or <elem> / <elem>. Only the SHEPHERDSON grammar contains '/'
    // inside elements: in rational coefficients (tight between digits, as in
    // 3/2*x) and in exponents (inside parentheses). A depth-0 '/' that is not
    // squeezed between digits is the fraction bar.
    size_t split = std::string::npos;
    int depth = 0;
    for (size_t i = 0; i < text.size() && split == std::string::npos; ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c != '/' || depth != 0) continue;
        if (m.id == ModelId::SHEPHERDSON) {
            bool digit_left = i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1]));
            bool digit_right =
                i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
            if (digit_left && digit_right) continue;  // rational coefficient literal
        }
        split = i;
    }
    if (split == std::string::npos) return frac_from_elem(parse_elem(m, text));
    RingElem num = parse_elem(m, text.substr(0, split));
    RingElem den = parse_elem(m, text.substr(split + 1));
    return frac_make(num, den);
}

}  // namespace oind
