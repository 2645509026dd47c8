#include "oind/poly.hpp"

namespace oind {

QPoly normalize_content(const QPoly& p) {
    if (p.is_zero_poly()) return p;
    Int den_lcm = 1;
    for (const auto& q : p.c) {
        Int g;
        mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        den_lcm = g;
    }
    Int content = 0;
    std::vector<Int> ints;
    ints.reserve(p.c.size());
    for (const auto& q : p.c) {
        Int v = q.get_num() * (den_lcm / q.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
        ints.push_back(v);
    }
    if (sign(ints.back()) < 0) content = -content;
    std::vector<Rat> out;
    out.reserve(ints.size());
    for (const auto& v : ints) out.emplace_back(Rat(v / content));
    return QPoly(std::move(out));
}

std::string poly_to_string(const QPoly& p, const std::string& var) {
    if (p.is_zero_poly()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& a = p.c[i];
        if (is_zero(a)) continue;
        Rat mag = a;
        if (s.empty()) {
            if (sign(a) < 0) {
                s += "-";
                mag = -a;
            }
        } else {
            s += sign(a) < 0 ? " - " : " + ";
            if (sign(a) < 0) mag = -a;
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) s += to_string(mag);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

QPoly qpoly_from_int_coeffs(const std::vector<long>& ascending) {
    std::vector<Rat> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(Rat(v));
    return QPoly(std::move(c));
}

}  // namespace oind
