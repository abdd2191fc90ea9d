#pragma once

#include "conjcount/polynomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace conjcount {

/// Block elimination order: the first nx variables dominate (graded
/// reverse-lexicographic), ties are broken on the remaining block by
/// weighted-graded reverse-lexicographic with the given weights. Grading the
/// tail block by its weights makes the minimum weighted degree over a
/// reduced basis equal the minimum over the whole elimination ideal.
struct BlockOrder {
    int arity = 0;
    int nx = 0;
    std::vector<long> tail_weights; // size arity - nx; defaults to all ones

    long x_degree(const ExpVec& e) const {
        long d = 0;
        for (int i = 0; i < nx; ++i) d += e[i];
        return d;
    }
    long tail_degree(const ExpVec& e) const {
        long d = 0;
        for (int i = nx; i < arity; ++i)
            d += e[i] * (tail_weights.empty() ? 1 : tail_weights[i - nx]);
        return d;
    }

    // returns true when a < b
    bool less(const ExpVec& a, const ExpVec& b) const {
        long da = x_degree(a), db = x_degree(b);
        if (da != db) return da < db;
        for (int i = nx - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] > b[i]; // grevlex tie-break
        da = tail_degree(a);
        db = tail_degree(b);
        if (da != db) return da < db;
        for (int i = arity - 1; i >= nx; --i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

inline BlockOrder grevlex_order(int arity) { return BlockOrder{arity, arity, {}}; }

inline BlockOrder elimination_order(int nx, std::vector<long> tail_weights) {
    int arity = nx + static_cast<int>(tail_weights.size());
    return BlockOrder{arity, nx, std::move(tail_weights)};
}

struct GroebnerBudget {
    long max_steps = 200'000'000; // single-term cancellations
};

struct GroebnerBasis {
    std::vector<SparsePolynomial> generators;
    BlockOrder order;
};

namespace gb_detail {

struct OrderLess {
    const BlockOrder* ord;
    bool operator()(const ExpVec& a, const ExpVec& b) const { return ord->less(a, b); }
};

using Poly = std::map<ExpVec, Rat, OrderLess>;

inline Poly to_poly(const SparsePolynomial& p, const BlockOrder& ord) {
    Poly out{OrderLess{&ord}};
    for (const auto& [e, c] : p.terms()) out.emplace(e, c);
    return out;
}

inline SparsePolynomial from_poly(const Poly& p, int arity) {
    SparsePolynomial out(arity);
    for (const auto& [e, c] : p) out.add_term(e, c);
    return out;
}

inline bool divides(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline long total_degree(const ExpVec& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

// f -= c * x^shift * g
inline void submul(Poly& f, const Rat& c, const ExpVec& shift, const Poly& g, long& steps) {
    for (const auto& [e, gc] : g) {
        ExpVec m(e.size());
        for (size_t i = 0; i < e.size(); ++i) m[i] = e[i] + shift[i];
        auto it = f.find(m);
        if (it == f.end()) {
            Rat v = -c * gc;
            if (v != 0) f.emplace(std::move(m), std::move(v));
        } else {
            it->second -= c * gc;
            if (it->second == 0) f.erase(it);
        }
        ++steps;
    }
}

// integer-primitive scaling with positive leading coefficient
inline void normalize(Poly& f) {
    if (f.empty()) return;
    Int den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : f) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat scale = make_rat(den_lcm, num_gcd);
    if (f.rbegin()->second < 0) scale = -scale;
    for (auto& [e, c] : f) c *= scale;
}

/// Full normal form of f modulo basis; deterministic (first divisor in
/// index order wins).
inline Poly reduce_full(Poly f, const std::vector<Poly>& basis, const GroebnerBudget& budget,
                        long& steps) {
    Poly rem{f.key_comp()};
    while (!f.empty()) {
        if (steps > budget.max_steps)
            throw BudgetExceeded("groebner: reduction budget exceeded");
        auto lead = std::prev(f.end());
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            const auto& glt = *g.rbegin();
            if (!divides(glt.first, lead->first)) continue;
            Rat c = lead->second / glt.second;
            submul(f, c, exp_sub(lead->first, glt.first), g, steps);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.emplace(lead->first, lead->second);
            f.erase(lead);
            ++steps;
        }
    }
    return rem;
}

} // namespace gb_detail

/// Classical Buchberger with lcm-degree pair selection, the coprimality and
/// chain criteria, and a hard work budget. Output is the reduced basis,
/// deterministic for a fixed input order. Throws BudgetExceeded rather than
/// ever returning a wrong answer.
inline GroebnerBasis buchberger(const std::vector<SparsePolynomial>& generators,
                                const BlockOrder& order,
                                const GroebnerBudget& budget = GroebnerBudget{}) {
    using namespace gb_detail;
    if (generators.empty()) throw std::invalid_argument("buchberger: empty generator list");
    int arity = generators[0].arity();
    if (order.arity != arity) throw std::invalid_argument("buchberger: order arity mismatch");

    std::vector<Poly> basis;
    long steps = 0;
    for (const auto& g : generators) {
        if (g.arity() != arity) throw std::invalid_argument("buchberger: mixed arities");
        Poly p = to_poly(g, order);
        if (p.empty()) continue;
        normalize(p);
        basis.push_back(std::move(p));
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    struct Pair {
        long deg;
        ExpVec lcm;
        size_t i, j;
    };
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return order.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            ExpVec l = exp_lcm(basis[i].rbegin()->first, basis[j].rbegin()->first);
            queue.push_back(Pair{total_degree(l), std::move(l), i, j});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            ExpVec l = exp_lcm(basis[i].rbegin()->first, basis[j].rbegin()->first);
            queue.push_back(Pair{total_degree(l), std::move(l), i, j});
        }
    std::sort(queue.begin(), queue.end(), pair_less);

    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        handled.insert({pr.i, pr.j});

        const ExpVec& lti = basis[pr.i].rbegin()->first;
        const ExpVec& ltj = basis[pr.j].rbegin()->first;
        // coprime leading terms: S-polynomial reduces to zero
        ExpVec sum(lti.size());
        bool coprime = true;
        for (size_t v = 0; v < lti.size(); ++v)
            if (lti[v] > 0 && ltj[v] > 0) { coprime = false; break; }
        if (coprime) continue;
        // chain criterion
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(basis[k].rbegin()->first, pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (handled.count({key_ik.first, key_ik.second}) &&
                handled.count({key_jk.first, key_jk.second}))
                chained = true;
        }
        if (chained) continue;

        // S-polynomial
        Poly s{OrderLess{&order}};
        submul(s, Rat(-1) / basis[pr.i].rbegin()->second, exp_sub(pr.lcm, lti), basis[pr.i], steps);
        submul(s, Rat(1) / basis[pr.j].rbegin()->second, exp_sub(pr.lcm, ltj), basis[pr.j], steps);
        Poly r = reduce_full(std::move(s), basis, budget, steps);
        if (r.empty()) continue;
        normalize(r);
        basis.push_back(std::move(r));
        push_pairs_for(basis.size() - 1);
        if (steps > budget.max_steps) throw BudgetExceeded("groebner: budget exceeded");
    }

    // interreduce: drop generators whose leading term is divisible by
    // another's, then tail-reduce the survivors
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (divides(basis[j].rbegin()->first, basis[i].rbegin()->first)) {
                // on equal leading terms keep the earlier one
                if (basis[j].rbegin()->first == basis[i].rbegin()->first && j > i) continue;
                keep[i] = false;
            }
        }
    std::vector<Poly> reduced;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) reduced.push_back(basis[i]);
    std::vector<Poly> final_basis;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        Poly r = reduce_full(reduced[i], others, budget, steps);
        if (!r.empty()) {
            normalize(r);
            final_basis.push_back(std::move(r));
        }
    }
    std::sort(final_basis.begin(), final_basis.end(), [&order](const Poly& a, const Poly& b) {
        return order.less(a.rbegin()->first, b.rbegin()->first);
    });

    GroebnerBasis out;
    out.order = order;
    for (const auto& p : final_basis) out.generators.push_back(from_poly(p, arity));
    return out;
}

/// Normal form of p modulo an already-computed basis.
inline SparsePolynomial groebner_reduce(const SparsePolynomial& p, const GroebnerBasis& gb,
                                        const GroebnerBudget& budget = GroebnerBudget{}) {
    using namespace gb_detail;
    std::vector<Poly> basis;
    for (const auto& g : gb.generators) basis.push_back(to_poly(g, gb.order));
    long steps = 0;
    return from_poly(reduce_full(to_poly(p, gb.order), basis, budget, steps), p.arity());
}

} // namespace conjcount
