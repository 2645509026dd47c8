#pragma once

#include <variant>

#include "oind/models.hpp"

namespace oind {

// Formal fraction over a model with positive denominator. No gcd reduction;
// order and equality go through cross-multiplication (denominators positive).
struct Frac {
    RingElem num;
    RingElem den;

    std::string to_string() const { return num.to_string() + " / " + den.to_string(); }
};

Frac frac_make(const RingElem& num, const RingElem& den);
Frac frac_from_elem(const RingElem& e);

Cmp frac_cmp(const Frac& a, const Frac& b);
Frac frac_add(const Frac& a, const Frac& b);
Frac frac_sub(const Frac& a, const Frac& b);
Frac frac_mul(const Frac& a, const Frac& b);
Frac frac_neg(const Frac& a);
Frac frac_inv(const Frac& a);
int frac_sign(const Frac& a);
bool frac_is_zero(const Frac& a);

inline Frac operator+(const Frac& a, const Frac& b) { return frac_add(a, b); }
inline Frac operator-(const Frac& a, const Frac& b) { return frac_sub(a, b); }
inline Frac operator*(const Frac& a, const Frac& b) { return frac_mul(a, b); }
inline Frac operator/(const Frac& a, const Frac& b) { return frac_mul(a, frac_inv(b)); }
inline Frac operator-(const Frac& a) { return frac_neg(a); }
inline bool operator==(const Frac& a, const Frac& b) { return frac_cmp(a, b) == Cmp::EQ; }

// field hooks for Poly<Frac> / Sturm over FF(M)
inline bool is_zero(const Frac& a) { return frac_is_zero(a); }
inline int sign_of(const Frac& a) { return frac_sign(a); }
inline Frac zero_like(const Frac& a) { return frac_from_elem(elem_zero(a.num.model())); }
inline Frac one_like(const Frac& a) { return frac_from_elem(elem_one(a.num.model())); }
inline Frac half_point(const Frac& a, const Frac& b) {
    Frac s = frac_add(a, b);
    return frac_make(s.num, elem_add(s.den, s.den));
}

// Division with nonnegative remainder: n = q*k + l with 0 <= l < k. A model
// need not admit it for every pair; NotFound carries the finite obstruction.
struct DivResult {
    RingElem quotient;
    RingElem remainder;
};
struct NotFound {
    std::string witness;
};
using DivOutcome = std::variant<DivResult, NotFound>;

DivOutcome euclid_div(const RingElem& n, const RingElem& k);

// floor of num/den in M ("r-1 < m <= r" convention, rounding toward -inf)
using IntPartOutcome = std::variant<RingElem, NotFound>;
IntPartOutcome frac_integer_part(const Frac& f);

// floor of m/n for a literal natural denominator (embedded as 1+...+1)
IntPartOutcome nat_den_integer_part(const RingElem& m, long n);

Frac parse_frac(const ModelContext& m, const std::string& text);

}  // namespace oind
