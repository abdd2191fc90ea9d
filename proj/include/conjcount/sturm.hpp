#pragma once

#include "conjcount/intpoly.hpp"

#include <utility>
#include <vector>

namespace conjcount {

/// Closed rational interval [lo, hi].
struct Interval {
    Rat lo, hi;

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
};

namespace sturm_detail {

using RatPoly = std::vector<Rat>; // ascending coefficients

inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_ratpoly(const IntPoly& p) {
    RatPoly out(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) out[i] = Rat(p.c[i]);
    return out;
}

inline Rat eval(const RatPoly& p, const Rat& x) {
    Rat out(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * x + *it;
    return out;
}

inline RatPoly derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly out(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rat(static_cast<long>(i));
    return out;
}

inline RatPoly rem(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
        if (!a.empty() && a.size() >= b.size() && a.back() == 0) trim(a);
    }
    return a;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace sturm_detail

/// Sturm chain of the squarefree part; sign-variation counts at the
/// endpoints certify root counts exactly.
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& p) {
        using namespace sturm_detail;
        RatPoly p0 = to_ratpoly(p);
        trim(p0);
        if (p0.empty()) throw std::invalid_argument("SturmChain: zero polynomial");
        RatPoly g = gcd(p0, derivative(p0));
        if (g.size() > 1) {
            // squarefree part p / gcd(p, p')
            RatPoly q;
            RatPoly a = p0;
            q.assign(a.size() - g.size() + 1, Rat(0));
            while (a.size() >= g.size() && !a.empty()) {
                Rat f = a.back() / g.back();
                size_t shift = a.size() - g.size();
                q[shift] = f;
                for (size_t i = 0; i < g.size(); ++i) a[shift + i] -= f * g[i];
                trim(a);
            }
            p0 = q;
        }
        chain_.push_back(p0);
        RatPoly p1 = derivative(p0);
        trim(p1);
        if (!p1.empty()) chain_.push_back(p1);
        while (chain_.back().size() > 1) {
            RatPoly r = rem(chain_[chain_.size() - 2], chain_.back());
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            chain_.push_back(std::move(r));
        }
    }

    const sturm_detail::RatPoly& squarefree() const { return chain_[0]; }

    Rat eval_squarefree(const Rat& x) const { return sturm_detail::eval(chain_[0], x); }

    int variations(const Rat& x) const {
        int v = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = sgn(sturm_detail::eval(p, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    /// Number of distinct real roots in (a, b].
    int count_roots(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }

    /// Cauchy bound: all real roots lie in (-B, B).
    Rat root_bound() const {
        const auto& p = chain_[0];
        Rat lead = rat_abs(p.back());
        Rat h(0);
        for (size_t i = 0; i + 1 < p.size(); ++i) h = std::max(h, rat_abs(p[i]));
        return Rat(1) + h / lead;
    }

  private:
    std::vector<sturm_detail::RatPoly> chain_;
};

namespace sturm_detail {

// bisection midpoint that avoids roots of the squarefree part
inline Rat safe_midpoint(const SturmChain& ch, const Rat& a, const Rat& b) {
    Rat m = (a + b) / 2;
    while (ch.eval_squarefree(m) == 0) m = (m + b) / 2;
    return m;
}

inline void isolate_rec(const SturmChain& ch, const Rat& a, const Rat& b,
                        std::vector<Interval>& out) {
    int count = ch.count_roots(a, b);
    if (count == 0) return;
    if (count == 1) {
        out.push_back(Interval{a, b});
        return;
    }
    Rat m = safe_midpoint(ch, a, b);
    isolate_rec(ch, a, m, out);
    isolate_rec(ch, m, b, out);
}

} // namespace sturm_detail

/// One interval per distinct real root (multiplicities collapsed via the
/// squarefree part), sorted ascending, pairwise disjoint, each certified by
/// a Sturm variation count of one. Endpoints are never roots.
inline std::vector<Interval> sturm_isolate(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_isolate: zero polynomial");
    if (p.degree() == 0) return {};
    SturmChain ch(p);
    Rat bound = ch.root_bound();
    std::vector<Interval> out;
    sturm_detail::isolate_rec(ch, -bound, bound, out);

    // shrink until honestly disjoint (closed intervals may share endpoints)
    bool touching = true;
    while (touching) {
        touching = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            if (out[i].hi < out[i + 1].lo) continue;
            touching = true;
            Rat m = sturm_detail::safe_midpoint(ch, out[i].lo, out[i].hi);
            if (ch.count_roots(out[i].lo, m) == 1) out[i].hi = m;
            else out[i].lo = m;
        }
    }
    return out;
}

/// Halves the enclosure until its width is at most the target. The interval
/// must isolate exactly one simple root of the squarefree part.
inline Interval refine_root(const SturmChain& ch, Interval iv, const Rat& target_width) {
    if (iv.is_point()) return iv;
    int slo = sgn(ch.eval_squarefree(iv.lo));
    while (iv.width() > target_width) {
        Rat m = iv.mid();
        Rat vm = ch.eval_squarefree(m);
        if (vm == 0) return Interval{m, m};
        if (sgn(vm) == slo) iv.lo = m;
        else iv.hi = m;
    }
    return iv;
}

inline Interval refine_root(const IntPoly& p, Interval iv, const Rat& target_width) {
    SturmChain ch(p);
    return refine_root(ch, iv, target_width);
}

} // namespace conjcount
