#pragma once

#include "conjcount/rational.hpp"

#include <string>
#include <vector>

namespace conjcount {

/// Univariate integer polynomial, coefficients by ascending power, no
/// trailing zeros (empty vector = zero polynomial).
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly from_longs(const std::vector<long>& v) {
        std::vector<Int> c(v.size());
        for (size_t i = 0; i < v.size(); ++i) c[i] = v[i];
        return IntPoly(std::move(c));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lc() const { return c.back(); }
    Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Int(0); }

    Int height() const {
        Int h(0);
        for (const auto& a : c) {
            Int v = abs(a);
            if (v > h) h = v;
        }
        return h;
    }

    Int content() const {
        Int g(0);
        for (const auto& a : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        return g;
    }

    /// Primitive part with positive leading coefficient.
    IntPoly primitive() const {
        if (is_zero()) return *this;
        Int g = content();
        if (lc() < 0) g = -g;
        IntPoly out = *this;
        for (auto& a : out.c) a /= g;
        return out;
    }

    Rat eval(const Rat& x) const {
        Rat out(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + Rat(*it);
        return out;
    }
    Int eval_int(const Int& x) const {
        Int out(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + *it;
        return out;
    }
    double eval_double(double x) const {
        double out = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + mpz_get_d(it->get_mpz_t());
        return out;
    }
    int sign_at(const Rat& x) const { return sgn(eval(x)); }

    IntPoly derivative() const {
        if (c.size() <= 1) return IntPoly();
        std::vector<Int> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
        return IntPoly(std::move(d));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> out(std::max(a.c.size(), b.c.size()), Int(0));
        for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
        return IntPoly(std::move(out));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> out(std::max(a.c.size(), b.c.size()), Int(0));
        for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
        return IntPoly(std::move(out));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> out(a.c.size() + b.c.size() - 1, Int(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
        return IntPoly(std::move(out));
    }
    friend IntPoly operator*(const IntPoly& a, const Int& s) {
        IntPoly out = a;
        for (auto& x : out.c) x *= s;
        out.trim();
        return out;
    }
    bool operator==(const IntPoly& o) const { return c == o.c; }

    /// Exact division test; quotient returned when divisible in Z[X].
    bool divide(const IntPoly& divisor, IntPoly* quotient = nullptr) const {
        if (divisor.is_zero()) return false;
        std::vector<Int> rem = c;
        int dd = divisor.degree();
        std::vector<Int> q(degree() >= dd ? degree() - dd + 1 : 0, Int(0));
        for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
            if (rem[i] == 0) continue;
            Int ql, r;
            mpz_tdiv_qr(ql.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(),
                        divisor.lc().get_mpz_t());
            if (r != 0) return false;
            q[i - dd] = ql;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= ql * divisor.c[j];
        }
        for (const auto& r : rem)
            if (r != 0) return false;
        if (quotient) *quotient = IntPoly(std::move(q));
        return true;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c[i] == 0) continue;
            Int a = abs(c[i]);
            std::string body;
            if (i == 0) body = a.get_str();
            else {
                if (a != 1) body = a.get_str() + "*";
                body += i == 1 ? "X" : "X^" + std::to_string(i);
            }
            if (s.empty()) s = (c[i] < 0 ? "-" : "") + body;
            else s += (c[i] < 0 ? " - " : " + ") + body;
        }
        return s;
    }

    /// Space-separated ascending coefficient list, e.g. "2 0 1" for X^2 + 2.
    std::string coeff_string() const {
        std::string s;
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += " ";
            s += c[i].get_str();
        }
        return s.empty() ? "0" : s;
    }
};

} // namespace conjcount
