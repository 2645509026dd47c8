#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oind/realalg.hpp"

namespace oind {

// One term c * x^e with c != 0; exponents are rationals of either sign.
struct PuiseuxTerm {
    Rat exp;
    RealAlg coef;
};

// Finite sum of Puiseux terms in the infinite indeterminate x, kept sorted by
// strictly descending exponent with nonzero coefficients. The sign of a
// nonzero value is the sign of its leading coefficient (x dominates).
class PuiseuxPoly {
  public:
    PuiseuxPoly() = default;
    static PuiseuxPoly constant(const RealAlg& c);
    static PuiseuxPoly monomial(const RealAlg& c, const Rat& e);
    static PuiseuxPoly from_terms(std::vector<PuiseuxTerm> terms);

    const std::vector<PuiseuxTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const PuiseuxTerm& leading() const;

    // coefficient at a given exponent (zero if absent)
    RealAlg coeff_at(const Rat& e) const;

    int sgn() const { return terms_.empty() ? 0 : terms_.front().coef.sgn(); }

    PuiseuxPoly operator-() const;
    friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
    friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);

    // multiply by c * x^e
    PuiseuxPoly shifted_scaled(const RealAlg& c, const Rat& e) const;

    // terms with exponent >= cutoff / the rest
    std::pair<PuiseuxPoly, PuiseuxPoly> split_at(const Rat& cutoff) const;

    // largest denominator among exponents (1 for the zero value)
    Int exponent_den_bound() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<PuiseuxTerm> terms_;
};

inline Cmp puiseux_cmp(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    return cmp_from_sign((a - b).sgn());
}

// Long division n = q*k + r where q collects every term with exponent >= 0
// (equivalently: division stops once the remainder's leading exponent drops
// below k's). k must be nonzero.
std::pair<PuiseuxPoly, PuiseuxPoly> puiseux_divide_nonneg(const PuiseuxPoly& n,
                                                          const PuiseuxPoly& k);

// Series division continued while the quotient exponent stays >= min_exp;
// returns (q, r) with n = q*k + r exactly.
std::pair<PuiseuxPoly, PuiseuxPoly> puiseux_series_div(const PuiseuxPoly& n,
                                                       const PuiseuxPoly& k,
                                                       const Rat& min_exp,
                                                       int max_terms = 512);

}  // namespace oind
