#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace oind {

// Exact arbitrary-precision rationals. mpq_class keeps gcd(num, den) = 1 and
// den > 0 after canonicalize(); every constructor below canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Floor toward -inf.
inline Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// Field hooks used by the Poly/Interval/Sturm templates. Counterparts for
// RealAlg and Frac live next to those types; all are visible before the
// templates get instantiated.
inline bool is_zero(const Rat& q) { return sign(q) == 0; }
inline int sign_of(const Rat& q) { return sign(q); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat half_point(const Rat& a, const Rat& b) { return (a + b) / 2; }

// The rational with the smallest denominator (then smallest |numerator|) in
// the open interval (lo, hi). Stern-Brocot descent; used to emit canonical
// witnesses like 3/2 between sqrt(2) and sqrt(3).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);

}  // namespace oind
