#pragma once

#include <map>
#include <vector>

#include "oind/poly.hpp"

namespace oind {

// Small sparse multivariate polynomial over Rat. Only used as scaffolding for
// resultant elimination; no pretense of being fast on large inputs.
struct MPoly {
    unsigned nvars = 0;
    std::map<std::vector<unsigned>, Rat> terms;  // exponent vector -> coefficient

    static MPoly zero(unsigned n) { return MPoly{n, {}}; }
    static MPoly constant(unsigned n, const Rat& v);
    static MPoly var(unsigned n, unsigned i);

    bool is_zero() const { return terms.empty(); }
    int deg_in(unsigned v) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator-(const MPoly& o) const { return *this + (-o); }
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& k) const;

    // substitute variable v := value (exponent slot collapses to 0)
    MPoly subst(unsigned v, const Rat& value) const;

    // view as univariate in v; all other variables must be absent
    QPoly to_qpoly(unsigned v) const;
    static MPoly from_qpoly(unsigned n, unsigned v, const QPoly& p);
};

// Resultant of A and B (univariate over Rat) by the Euclidean recurrence.
Rat resultant_univ(QPoly a, QPoly b);

// Res_v(E, B) where B is univariate over Rat in v; computed by grid
// evaluation and tensor Lagrange interpolation. B's leading coefficient is
// constant, so every specialization is corrected exactly.
MPoly resultant_eliminate(const MPoly& e, unsigned v, const QPoly& b);

}  // namespace oind
