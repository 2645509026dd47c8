#pragma once

#include <memory>

#include "oind/frac.hpp"

namespace oind {

using FPoly = Poly<Frac>;

class RootSystem;

// A named element of RC(M): the root_index-th real root (ascending, 1-based)
// of a square-free polynomial over FF(M), with an isolating interval whose
// endpoints are fractions. Identity is (defining, root_index); the interval
// is refinable metadata backed by the expansion machinery in RootSystem.
struct RootElem {
    FPoly defining;
    Interval<Frac> isolating;
    int root_index;
    ModelId model;
    std::shared_ptr<RootSystem> system;

    std::string to_string() const;
};

// Total number of distinct real roots of p over RC(M).
int real_root_count(const FPoly& p, const ModelContext& ctx);

// Construct the index-th real root. Throws std::domain_error when the index
// is out of range (message carries the real root count), ResourceError when
// caps run out, and DensityError when FF(M) has no fractions separating the
// requested root from a neighbor (a certified failure of density, possible
// over ZX_LEX only).
struct DensityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
RootElem root_elem(const FPoly& p, int index, const ModelContext& ctx);

Cmp cmp_root_frac(const RootElem& r, const Frac& f);
Cmp cmp_roots(const RootElem& r, const RootElem& s);

// sign of q evaluated at the root
int sign_at_root(const FPoly& q, const RootElem& r);

// the root shifted by an element of M (same index structure, defining p(t - d))
RootElem shift_root(const RootElem& r, const RingElem& d);

// 1/r for r with nonzero value
RootElem reciprocal_root(const RootElem& r);

// Truncated fractional-power expansion of a root at x -> infinity: the kept
// head plus the exponent below which terms were dropped. exact means the head
// is the entire root.
struct PuiseuxExpansion {
    PuiseuxPoly head;
    Rat truncation_exponent;
    bool exact = false;

    std::string to_string() const;
};

// Expansion of the root down to (and including) terms with exponent >=
// floor_exponent.
PuiseuxExpansion expand_root(const RootElem& r, const Rat& floor_exponent);

// Module surface for the SHEPHERDSON model: expansion of the index-th real
// root of p. Model restriction enforced.
PuiseuxExpansion newton_puiseux_expand(const FPoly& p, int root_index, const Rat& floor_exponent,
                                       const ModelContext& ctx);

// Fraction view of a finite Puiseux polynomial, when FF(M) can express it:
// always for SHEPHERDSON (after clearing with a power of x), for ZX_LEX only
// with rational coefficients and integer exponents, for Z only constants.
std::optional<Frac> realize_in_ff(ModelId model, const PuiseuxPoly& pp);

// Is pp itself an element of M?
bool realizable_in_m(ModelId model, const PuiseuxPoly& pp);
std::optional<RingElem> realize_in_m(ModelId model, const PuiseuxPoly& pp);

}  // namespace oind
