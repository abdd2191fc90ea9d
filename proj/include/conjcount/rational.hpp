#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjcount {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p" (optionally signed). Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
}

inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int int_pow(Int base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("rat_pow: 0 to negative power");
        return make_rat(int_pow(base.get_den(), static_cast<unsigned long>(-e)),
                        int_pow(base.get_num(), static_cast<unsigned long>(-e)));
    }
    return Rat(int_pow(base.get_num(), static_cast<unsigned long>(e)),
               int_pow(base.get_den(), static_cast<unsigned long>(e)));
}

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

/// Exact k-th root of a rational if it exists.
inline bool exact_root(const Rat& a, unsigned long k, Rat& out) {
    if (a < 0) return false;
    Int rn, rd;
    int num_ok = mpz_root(rn.get_mpz_t(), a.get_num().get_mpz_t(), k);
    int den_ok = mpz_root(rd.get_mpz_t(), a.get_den().get_mpz_t(), k);
    if (!num_ok || !den_ok) return false;
    out = make_rat(rn, rd);
    return true;
}

/// Rational enclosure of a^{1/k} with relative error below 2^-prec_bits.
/// Returns the lower bound; upper = lower * (1 + 2^-prec_bits) is implied by
/// construction (lower <= a^{1/k} < lower + den^-1 scale).
inline Rat root_lower_bound(const Rat& a, unsigned long k, unsigned prec_bits) {
    if (a <= 0) throw std::invalid_argument("root_lower_bound: nonpositive base");
    // a^{1/k} = root_k(num * den^{k-1}) / den; scale by 2^{k*prec} for precision
    Int m = a.get_num() * int_pow(a.get_den(), k - 1);
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), k * prec_bits);
    Int r;
    mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
    Int den = a.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), prec_bits);
    return make_rat(r, den);
}

inline Rat root_upper_bound(const Rat& a, unsigned long k, unsigned prec_bits) {
    if (a <= 0) throw std::invalid_argument("root_upper_bound: nonpositive base");
    Int m = a.get_num() * int_pow(a.get_den(), k - 1);
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), k * prec_bits);
    Int r;
    mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
    r += 1;
    Int den = a.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), prec_bits);
    return make_rat(r, den);
}

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace conjcount
