#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "oind/interval.hpp"
#include "oind/poly.hpp"
#include "oind/sturm.hpp"

namespace oind {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

inline Cmp cmp_from_sign(int s) { return s < 0 ? Cmp::LT : (s > 0 ? Cmp::GT : Cmp::EQ); }

// A real algebraic number: square-free defining polynomial with integer
// coefficients (gcd 1, positive leading coefficient) plus an isolating
// interval holding exactly one of its roots. Rational values carry the
// degenerate interval [r, r].
//
// The defining polynomial need not be minimal; Sturm-based decisions only
// ever need square-freeness. The isolating interval and the Sturm chain of
// the defining polynomial live in shared state that only ever shrinks or
// fills in, guarded by a mutex, so values stay semantically immutable and
// safe to share across threads.
class RealAlg {
  public:
    RealAlg() : RealAlg(Rat(0)) {}
    explicit RealAlg(const Rat& r);
    explicit RealAlg(long v) : RealAlg(Rat(v)) {}
    explicit RealAlg(const Int& v) : RealAlg(Rat(v)) {}

    // k-th real root of p in ascending order, 1-based
    static RealAlg root_of(const QPoly& p, int index, long bisect_cap = 10000);
    // the unique root of p inside iv
    static RealAlg from_poly_interval(const QPoly& p, const Interval<Rat>& iv,
                                      long bisect_cap = 10000);

    const QPoly& defining() const { return defining_; }
    // current isolating interval (snapshot; other operations may shrink it)
    Interval<Rat> isolating() const;

    bool is_rational() const;
    Rat rational_value() const;

    int sgn() const;

    // isolating interval of width <= w (shrinks the shared state)
    Interval<Rat> refined(const Rat& max_width, long cap = 10000) const;

    std::string to_string() const;

  private:
    struct State;
    RealAlg(QPoly defining, Interval<Rat> iso);

    // one guarded bisection step; returns the snapshot after the step
    Interval<Rat> refine_step() const;

    QPoly defining_;
    std::shared_ptr<State> state_;

    friend RealAlg ra_add(const RealAlg&, const RealAlg&);
    friend RealAlg ra_mul(const RealAlg&, const RealAlg&);
    friend RealAlg ra_neg(const RealAlg&);
    friend RealAlg ra_inv(const RealAlg&);
    friend Cmp ra_compare(const RealAlg&, const RealAlg&);
    friend Int ra_floor(const RealAlg&);
};

RealAlg ra_add(const RealAlg& a, const RealAlg& b);
RealAlg ra_mul(const RealAlg& a, const RealAlg& b);
RealAlg ra_neg(const RealAlg& a);
RealAlg ra_inv(const RealAlg& a);
Cmp ra_compare(const RealAlg& a, const RealAlg& b);
Int ra_floor(const RealAlg& a);

inline RealAlg operator+(const RealAlg& a, const RealAlg& b) { return ra_add(a, b); }
inline RealAlg operator-(const RealAlg& a) { return ra_neg(a); }
inline RealAlg operator-(const RealAlg& a, const RealAlg& b) { return ra_add(a, ra_neg(b)); }
inline RealAlg operator*(const RealAlg& a, const RealAlg& b) { return ra_mul(a, b); }
inline RealAlg operator/(const RealAlg& a, const RealAlg& b) { return ra_mul(a, ra_inv(b)); }
inline bool operator==(const RealAlg& a, const RealAlg& b) { return ra_compare(a, b) == Cmp::EQ; }
inline bool operator!=(const RealAlg& a, const RealAlg& b) { return ra_compare(a, b) != Cmp::EQ; }
inline bool operator<(const RealAlg& a, const RealAlg& b) { return ra_compare(a, b) == Cmp::LT; }
inline bool operator>(const RealAlg& a, const RealAlg& b) { return ra_compare(a, b) == Cmp::GT; }
inline bool operator<=(const RealAlg& a, const RealAlg& b) { return ra_compare(a, b) != Cmp::GT; }
inline bool operator>=(const RealAlg& a, const RealAlg& b) { return ra_compare(a, b) != Cmp::LT; }

// field hooks for the Poly/Sturm templates
inline bool is_zero(const RealAlg& a) { return a.sgn() == 0; }
inline int sign_of(const RealAlg& a) { return a.sgn(); }
inline RealAlg zero_like(const RealAlg&) { return RealAlg(Rat(0)); }
inline RealAlg one_like(const RealAlg&) { return RealAlg(Rat(1)); }
inline RealAlg half_point(const RealAlg& a, const RealAlg& b) {
    return ra_mul(ra_add(a, b), RealAlg(make_rat(1, 2)));
}

using RAPoly = Poly<RealAlg>;

// The unique real root of e inside the rational bracket (lo, hi) across which
// e changes sign, collapsed to a plain RealAlg by eliminating the algebraic
// coefficients through iterated resultants. Throws ResourceError on
// degenerate eliminations.
RealAlg algebraic_root(const RAPoly& e, const Rat& lo, const Rat& hi, long cap = 10000);

// Distinct real roots of a polynomial with RealAlg coefficients, ascending.
std::vector<RealAlg> real_roots_of(const RAPoly& p, long cap = 10000);

// sign of e at a rational point, via interval filtering with exact fallback
int rapoly_sign_at(const RAPoly& e, const Rat& x);

}  // namespace oind
