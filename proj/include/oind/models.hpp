#pragma once

#include <optional>
#include <string>
#include <variant>

#include "oind/puiseux.hpp"

namespace oind {

// The three discretely ordered rings exercised by the harness: the integers,
// Z[x] ordered lexicographically with x above every integer, and the ring of
// Puiseux polynomials with nonnegative rational exponents, real algebraic
// coefficients and integer constant term.
enum class ModelId { Z, ZX_LEX, SHEPHERDSON };

std::string model_name(ModelId id);
std::optional<ModelId> model_from_name(const std::string& name);

struct ModelContext {
    ModelId id = ModelId::Z;
    int max_terms = 128;
    long max_exp_den = 64;
    long bisect_cap = 10000;
};

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t p) : std::runtime_error(what), pos(p) {}
};

struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RingElem {
  public:
    RingElem() : model_(ModelId::Z), v_(Int(0)) {}

    static RingElem from_int(ModelId m, const Int& v);
    static RingElem from_int(ModelId m, long v) { return from_int(m, Int(v)); }
    // ZX_LEX element; coefficients must be integers
    static RingElem from_poly(const QPoly& p);
    // SHEPHERDSON element; exponents >= 0 and integer constant term required
    static RingElem from_puiseux(const PuiseuxPoly& p);

    ModelId model() const { return model_; }
    bool is_zero() const;

    const Int& as_int() const { return std::get<Int>(v_); }
    const QPoly& as_poly() const { return std::get<QPoly>(v_); }
    const PuiseuxPoly& as_puiseux() const { return std::get<PuiseuxPoly>(v_); }

    // every element reads as a Puiseux polynomial (x-free for Z)
    PuiseuxPoly to_puiseux() const;

    std::string to_string() const;

  private:
    RingElem(ModelId m, std::variant<Int, QPoly, PuiseuxPoly> v) : model_(m), v_(std::move(v)) {}

    ModelId model_;
    std::variant<Int, QPoly, PuiseuxPoly> v_;
};

RingElem elem_add(const RingElem& a, const RingElem& b);
RingElem elem_sub(const RingElem& a, const RingElem& b);
RingElem elem_mul(const RingElem& a, const RingElem& b);
RingElem elem_neg(const RingElem& a);
Cmp elem_cmp(const RingElem& a, const RingElem& b);
int elem_sign(const RingElem& a);
bool elem_eq(const RingElem& a, const RingElem& b);
RingElem elem_zero(ModelId m);
RingElem elem_one(ModelId m);
bool is_nonnegative(const RingElem& a);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return elem_add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return elem_sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return elem_mul(a, b); }
inline RingElem operator-(const RingElem& a) { return elem_neg(a); }

struct ProbeVerdict {
    bool pass = true;
    std::optional<RingElem> counterexample;
};

// "1 is the least positive element": for each sample a, 0 < a implies 1 <= a
ProbeVerdict discreteness_probe(const ModelContext& m, const std::vector<RingElem>& samples);

RingElem parse_elem(const ModelContext& m, const std::string& text);
std::string format_elem(const RingElem& e);

// resource-cap check on a SHEPHERDSON element
void enforce_caps(const ModelContext& m, const RingElem& e);

}  // namespace oind
