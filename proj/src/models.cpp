#include "oind/models.hpp"

#include <cctype>

namespace oind {

std::string model_name(ModelId id) {
    switch (id) {
        case ModelId::Z: return "z";
        case ModelId::ZX_LEX: return "zx";
        case ModelId::SHEPHERDSON: return "shep";
    }
    return "?";
}

std::optional<ModelId> model_from_name(const std::string& name) {
    if (name == "z") return ModelId::Z;
    if (name == "zx") return ModelId::ZX_LEX;
    if (name == "shep") return ModelId::SHEPHERDSON;
    return std::nullopt;
}

RingElem RingElem::from_int(ModelId m, const Int& v) {
    switch (m) {
        case ModelId::Z: return RingElem(m, v);
        case ModelId::ZX_LEX: return RingElem(m, QPoly::constant(Rat(v)));
        case ModelId::SHEPHERDSON: return RingElem(m, PuiseuxPoly::constant(RealAlg(v)));
    }
    throw std::logic_error("bad model id");
}

RingElem RingElem::from_poly(const QPoly& p) {
    for (const auto& c : p.c)
        if (!is_integer(c)) throw InvariantError("coefficients must be integers");
    return RingElem(ModelId::ZX_LEX, p);
}

RingElem RingElem::from_puiseux(const PuiseuxPoly& p) {
    for (const auto& t : p.terms()) {
        if (sign(t.exp) < 0) throw InvariantError("exponents must be nonnegative");
        if (sign(t.exp) == 0) {
            if (!t.coef.is_rational() || !is_integer(t.coef.rational_value()))
                throw InvariantError("constant term must be an integer");
        }
    }
    return RingElem(ModelId::SHEPHERDSON, p);
}

bool RingElem::is_zero() const {
    switch (model_) {
        case ModelId::Z: return sign(as_int()) == 0;
        case ModelId::ZX_LEX: return as_poly().is_zero_poly();
        case ModelId::SHEPHERDSON: return as_puiseux().is_zero();
    }
    return false;
}

PuiseuxPoly RingElem::to_puiseux() const {
    switch (model_) {
        case ModelId::Z: return PuiseuxPoly::constant(RealAlg(as_int()));
        case ModelId::ZX_LEX: {
            std::vector<PuiseuxTerm> terms;
            const QPoly& p = as_poly();
            for (size_t i = 0; i < p.c.size(); ++i)
                if (!oind::is_zero(p.c[i])) terms.push_back({Rat(static_cast<long>(i)), RealAlg(p.c[i])});
            return PuiseuxPoly::from_terms(std::move(terms));
        }
        case ModelId::SHEPHERDSON: return as_puiseux();
    }
    throw std::logic_error("bad model id");
}

namespace {

void require_same_model(const RingElem& a, const RingElem& b) {
    if (a.model() != b.model()) throw std::invalid_argument("model mismatch");
}

}  // namespace

RingElem elem_add(const RingElem& a, const RingElem& b) {
    require_same_model(a, b);
    switch (a.model()) {
        case ModelId::Z: return RingElem::from_int(a.model(), a.as_int() + b.as_int());
        case ModelId::ZX_LEX: return RingElem::from_poly(a.as_poly() + b.as_poly());
        case ModelId::SHEPHERDSON: return RingElem::from_puiseux(a.as_puiseux() + b.as_puiseux());
    }
    throw std::logic_error("bad model id");
}

RingElem elem_sub(const RingElem& a, const RingElem& b) { return elem_add(a, elem_neg(b)); }

RingElem elem_mul(const RingElem& a, const RingElem& b) {
    require_same_model(a, b);
    switch (a.model()) {
        case ModelId::Z: return RingElem::from_int(a.model(), a.as_int() * b.as_int());
        case ModelId::ZX_LEX: return RingElem::from_poly(a.as_poly() * b.as_poly());
        case ModelId::SHEPHERDSON: return RingElem::from_puiseux(a.as_puiseux() * b.as_puiseux());
    }
    throw std::logic_error("bad model id");
}

RingElem elem_neg(const RingElem& a) {
    switch (a.model()) {
        case ModelId::Z: return RingElem::from_int(a.model(), -a.as_int());
        case ModelId::ZX_LEX: return RingElem::from_poly(-a.as_poly());
        case ModelId::SHEPHERDSON: return RingElem::from_puiseux(-a.as_puiseux());
    }
    throw std::logic_error("bad model id");
}

int elem_sign(const RingElem& a) {
    switch (a.model()) {
        case ModelId::Z: return sign(a.as_int());
        case ModelId::ZX_LEX: return a.as_poly().is_zero_poly() ? 0 : sign(a.as_poly().leading());
        case ModelId::SHEPHERDSON: return a.as_puiseux().sgn();
    }
    throw std::logic_error("bad model id");
}

Cmp elem_cmp(const RingElem& a, const RingElem& b) {
    require_same_model(a, b);
    return cmp_from_sign(elem_sign(elem_sub(a, b)));
}

bool elem_eq(const RingElem& a, const RingElem& b) { return elem_cmp(a, b) == Cmp::EQ; }

RingElem elem_zero(ModelId m) { return RingElem::from_int(m, 0); }
RingElem elem_one(ModelId m) { return RingElem::from_int(m, 1); }

bool is_nonnegative(const RingElem& a) { return elem_sign(a) >= 0; }

ProbeVerdict discreteness_probe(const ModelContext&, const std::vector<RingElem>& samples) {
    for (const auto& a : samples) {
        if (elem_sign(a) <= 0) continue;
        RingElem one = elem_one(a.model());
        if (elem_cmp(one, a) == Cmp::GT) return {false, a};
    }
    return {true, std::nullopt};
}

void enforce_caps(const ModelContext& m, const RingElem& e) {
    if (e.model() != ModelId::SHEPHERDSON) return;
    const PuiseuxPoly& p = e.as_puiseux();
    if (static_cast<int>(p.terms().size()) > m.max_terms)
        throw ResourceError("term count exceeds the model cap");
    if (p.exponent_den_bound() > m.max_exp_den)
        throw ResourceError("exponent denominator exceeds the model cap");
}

std::string RingElem::to_string() const {
    switch (model_) {
        case ModelId::Z: return as_int().get_str();
        case ModelId::ZX_LEX:
            return as_poly().is_zero_poly() ? "0" : poly_to_string(as_poly(), "X");
        case ModelId::SHEPHERDSON: return as_puiseux().to_string("x");
    }
    return "?";
}

std::string format_elem(const RingElem& e) { return e.to_string(); }

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (s.compare(i, w.size(), w) == 0) {
            i += w.size();
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw ParseError("expected an integer", start);
        return Int(s.substr(start, i - start));
    }

    Rat rational() {
        Int num = integer();
        skip_ws();
        if (eat('/')) {
            Int den = integer();
            if (sign(den) == 0) throw ParseError("zero denominator", i);
            return make_rat(num, den);
        }
        return Rat(num);
    }
};

// integer-coefficient polynomial in the named variable, e.g. "3*X^2 - 5*X + 7"
QPoly parse_int_poly(Cursor& cur, char var_lower, char var_upper) {
    std::vector<std::pair<long, Rat>> monomials;
    bool first = true;
    while (true) {
        cur.skip_ws();
        int sgn_ = 1;
        if (cur.eat('-'))
            sgn_ = -1;
        else if (cur.eat('+'))
            sgn_ = 1;
        else if (!first)
            break;
        first = false;
        cur.skip_ws();
        Rat coef(1);
        bool have_coef = false;
        if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
            coef = cur.rational();
            have_coef = true;
        }
        long exp = 0;
        cur.skip_ws();
        bool star = cur.eat('*');
        cur.skip_ws();
        if (cur.i < cur.s.size() && (cur.s[cur.i] == var_lower || cur.s[cur.i] == var_upper)) {
            ++cur.i;
            exp = 1;
            if (cur.eat('^')) {
                Int e = cur.integer();
                if (sign(e) < 0) throw ParseError("negative exponent", cur.i);
                exp = static_cast<long>(e.get_si());
            }
        } else {
            if (star) throw ParseError("expected variable after '*'", cur.i);
            if (!have_coef) throw ParseError("expected a term", cur.i);
        }
        monomials.emplace_back(exp, sgn_ < 0 ? Rat(-coef) : coef);
    }
    long maxe = 0;
    for (auto& [e, c] : monomials) maxe = std::max(maxe, e);
    std::vector<Rat> coeffs(maxe + 1, Rat(0));
    for (auto& [e, c] : monomials) coeffs[e] += c;
    return QPoly(std::move(coeffs));
}

RealAlg parse_root_coef(Cursor& cur) {
    // after the "root" keyword: ( poly_in_t , index )
    cur.expect('(');
    QPoly p = parse_int_poly(cur, 't', 'T');
    cur.expect(',');
    Int idx = cur.integer();
    cur.expect(')');
    return RealAlg::root_of(p, static_cast<int>(idx.get_si()));
}

PuiseuxPoly parse_shep_body(Cursor& cur) {
    std::vector<PuiseuxTerm> terms;
    bool first = true;
    while (true) {
        cur.skip_ws();
        int sgn_ = 1;
        if (cur.eat('-'))
            sgn_ = -1;
        else if (cur.eat('+'))
            sgn_ = 1;
        else if (!first)
            break;
        first = false;
        cur.skip_ws();
        RealAlg coef(Rat(1));
        bool have_coef = false;
        if (cur.eat_word("root")) {
            coef = parse_root_coef(cur);
            have_coef = true;
        } else if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
            coef = RealAlg(cur.rational());
            have_coef = true;
        }
        Rat exp(0);
        cur.skip_ws();
        bool star = cur.eat('*');
        cur.skip_ws();
        if (cur.i < cur.s.size() && (cur.s[cur.i] == 'x' || cur.s[cur.i] == 'X')) {
            ++cur.i;
            exp = 1;
            if (cur.eat('^')) {
                cur.skip_ws();
                if (cur.eat('(')) {
                    exp = cur.rational();
                    cur.expect(')');
                } else {
                    exp = Rat(cur.integer());
                }
                if (sign(exp) < 0) throw ParseError("negative exponent", cur.i);
            }
        } else {
            if (star) throw ParseError("expected 'x' after '*'", cur.i);
            if (!have_coef) throw ParseError("expected a term", cur.i);
        }
        if (sgn_ < 0) coef = ra_neg(coef);
        terms.push_back({exp, coef});
    }
    return PuiseuxPoly::from_terms(std::move(terms));
}

}  // namespace

RingElem parse_elem(const ModelContext& m, const std::string& text) {
    Cursor cur{text};
    RingElem out = elem_zero(m.id);
    switch (m.id) {
        case ModelId::Z: {
            Int v = cur.integer();
            out = RingElem::from_int(ModelId::Z, v);
            break;
        }
        case ModelId::ZX_LEX: {
            QPoly p = parse_int_poly(cur, 'x', 'X');
            for (const auto& c : p.c)
                if (!is_integer(c)) throw InvariantError("coefficients must be integers");
            out = RingElem::from_poly(p);
            break;
        }
        case ModelId::SHEPHERDSON: {
            PuiseuxPoly p = parse_shep_body(cur);
            out = RingElem::from_puiseux(p);  // integer constant term enforced here
            enforce_caps(m, out);
            break;
        }
    }
    if (!cur.eof()) throw ParseError("trailing input", cur.i);
    return out;
}

}  // namespace oind
