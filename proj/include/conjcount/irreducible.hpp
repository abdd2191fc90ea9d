#pragma once

#include "conjcount/intpoly.hpp"

#include <vector>

namespace conjcount {

namespace irr_detail {

inline std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> out;
    Int a = abs(n);
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        if (d * d != a) out.push_back(a / d);
    }
    return out;
}

inline bool has_rational_root(const IntPoly& p) {
    // candidates r/s with r | a_0, s | lc, tested exactly
    if (p.coeff(0) == 0) return true; // root 0
    for (const auto& r : positive_divisors(p.coeff(0)))
        for (const auto& s : positive_divisors(p.lc())) {
            Rat cand = make_rat(r, s);
            if (p.eval(cand) == 0 || p.eval(-cand) == 0) return true;
        }
    return false;
}

// Landau-Mignotte style coefficient bound for a degree-k factor
inline Int factor_coeff_bound(const IntPoly& p, int k) {
    Int sq(0);
    for (const auto& a : p.c) sq += a * a;
    Int root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    return int_pow(Int(2), static_cast<unsigned long>(k)) * (root + 1);
}

// quadratic * quadratic split of a primitive quartic with no rational root
inline bool splits_into_quadratics(const IntPoly& p) {
    for (const auto& b2 : positive_divisors(p.lc())) {
        Int c2 = p.lc() / b2;
        for (const auto& b0a : positive_divisors(p.coeff(0)))
            for (int sign = 0; sign < 2; ++sign) {
                Int b0 = sign ? -b0a : b0a;
                if (p.coeff(0) % b0 != 0) continue;
                Int c0 = p.coeff(0) / b0;
                // a3 = b2 c1 + b1 c2, a1 = b1 c0 + b0 c1: solve for (b1, c1)
                Int det = b2 * c0 - b0 * c2;
                if (det != 0) {
                    Int b1n = p.coeff(3) * c0 - p.coeff(1) * c2;
                    Int c1n = p.coeff(1) * b2 - p.coeff(3) * b0;
                    if (b1n % det != 0 || c1n % det != 0) continue;
                    IntPoly g(std::vector<Int>{b0, b1n / det, b2});
                    if (p.divide(g)) return true;
                } else {
                    Int bound = factor_coeff_bound(p, 2);
                    for (Int b1 = -bound; b1 <= bound; ++b1) {
                        IntPoly g(std::vector<Int>{b0, b1, b2});
                        if (g.degree() == 2 && p.divide(g)) return true;
                    }
                }
            }
    }
    return false;
}

// quadratic * cubic split of a primitive quintic with no rational root
inline bool splits_quadratic_cubic(const IntPoly& p) {
    Int bound = factor_coeff_bound(p, 2);
    for (const auto& b2 : positive_divisors(p.lc()))
        for (const auto& b0a : positive_divisors(p.coeff(0)))
            for (int sign = 0; sign < 2; ++sign) {
                Int b0 = sign ? -b0a : b0a;
                for (Int b1 = -bound; b1 <= bound; ++b1) {
                    IntPoly g(std::vector<Int>{b0, b1, b2});
                    if (p.divide(g)) return true;
                }
            }
    return false;
}

} // namespace irr_detail

/// Exact irreducibility over Q for degrees up to 5: rational-root test for
/// degrees 2-3, exhaustive factor-pair search with coefficient bounds above.
/// Operates on the primitive part; degree > 5 fails loudly.
inline bool is_irreducible(const IntPoly& poly) {
    IntPoly p = poly.primitive();
    int deg = p.degree();
    if (deg < 1) throw std::invalid_argument("is_irreducible: need degree >= 1");
    if (deg > 5) throw std::invalid_argument("is_irreducible: degree > 5 unsupported");
    if (deg == 1) return true;
    if (irr_detail::has_rational_root(p)) return false;
    if (deg <= 3) return true;
    if (deg == 4) return !irr_detail::splits_into_quadratics(p);
    return !irr_detail::splits_quadratic_cubic(p);
}

} // namespace conjcount
