#pragma once

#include "conjcount/groebner.hpp"
#include "conjcount/matrix.hpp"
#include "conjcount/symmetric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conjcount {

struct SymordResult {
    std::optional<long> value; // nullopt means infinite (algebraic independence)
    GroebnerBasis elimination_basis;
    int input_arity = 0;

    bool infinite() const { return !value.has_value(); }
};

/// Prints a polynomial over the mixed variables (x_0..x_{d-1}, Y_1..Y_tau).
inline std::string poly_to_string_xy(const SparsePolynomial& p, int d) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rat& c = it->second;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        std::string mono;
        for (int v = 0; v < p.arity(); ++v) {
            if (it->first[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v < d ? "x" + std::to_string(v) : "Y" + std::to_string(v - d + 1);
            if (it->first[v] > 1) mono += "^" + std::to_string(it->first[v]);
        }
        std::string body = mono.empty() ? rat_to_string(a)
                         : a == 1       ? mono
                                        : rat_to_string(a) + "*" + mono;
        if (s.empty()) s = (neg ? "-" : "") + body;
        else s += (neg ? " - " : " + ") + body;
    }
    return s;
}

/// Order of symmetric independence via Groebner elimination: build the ideal
/// <Y_k - e_k(p)> in (x, Y), eliminate x, and take the minimum weighted
/// degree (deg Y_k = k) over the elimination-ideal basis. An empty
/// elimination ideal means the components are algebraically independent.
inline SymordResult symord_via_elimination(const PolynomialMap& p,
                                           const GroebnerBudget& budget = GroebnerBudget{}) {
    int d = p.arity();
    int tau = p.size();
    if (d + tau > SparsePolynomial::kMaxArity)
        throw std::invalid_argument("symord_via_elimination: too many variables");

    std::vector<SparsePolynomial> gens;
    for (int k = 1; k <= tau; ++k) {
        SparsePolynomial ek_p = elementary_symmetric(k, tau).compose(p.components).widen(d + tau);
        gens.push_back(SparsePolynomial::variable(d + tau, d + k - 1) - ek_p);
    }
    std::vector<long> weights(tau);
    for (int k = 1; k <= tau; ++k) weights[k - 1] = k;
    BlockOrder order = elimination_order(d, weights);
    GroebnerBasis gb = buchberger(gens, order, budget);

    SymordResult out;
    out.input_arity = d;
    out.elimination_basis.order = order;
    std::optional<long> best;
    for (const auto& g : gb.generators) {
        bool x_free = true;
        for (const auto& [e, c] : g.terms())
            for (int v = 0; v < d && x_free; ++v)
                if (e[v]) x_free = false;
        if (!x_free) continue;
        out.elimination_basis.generators.push_back(g);
        long deg = 0;
        for (const auto& [e, c] : g.terms()) {
            long w = 0;
            for (int k = 1; k <= tau; ++k) w += e[d + k - 1] * k;
            deg = std::max(deg, w);
        }
        if (!best || deg < *best) best = deg;
    }
    out.value = best;
    return out;
}

/// Reference oracle: smallest k <= kmax such that some nonzero rational
/// symmetric polynomial of degree <= k vanishes identically on p, found by
/// exact linear algebra on the monomial-symmetric family. nullopt when no
/// relation of degree <= kmax exists.
inline std::optional<int> symord_bruteforce(const PolynomialMap& p, int kmax) {
    int tau = p.size();
    for (int k = 1; k <= kmax; ++k) {
        auto lambdas = enumerate_partitions(k, tau, IndexMode::Weight);
        std::map<ExpVec, int> mono_index;
        std::vector<SparsePolynomial> composed;
        for (const auto& lam : lambdas) {
            composed.push_back(monomial_symmetric(lam, tau).compose(p.components));
            for (const auto& [e, c] : composed.back().terms())
                mono_index.emplace(e, static_cast<int>(mono_index.size()));
        }
        RatMatrix A(static_cast<int>(mono_index.size()), static_cast<int>(lambdas.size()));
        for (size_t j = 0; j < composed.size(); ++j)
            for (const auto& [e, c] : composed[j].terms())
                A.at(mono_index[e], static_cast<int>(j)) = c;
        if (A.rank() < static_cast<int>(lambdas.size())) return k;
    }
    return std::nullopt;
}

/// True iff the family {s_lambda(p) : |lambda| <= k, len <= tau} is linearly
/// independent over Q, by exact rank computation on coefficient vectors.
inline bool check_nonsymmetric_degree(const PolynomialMap& p, int k) {
    int tau = p.size();
    auto lambdas = enumerate_partitions(k, tau, IndexMode::Weight);
    std::map<ExpVec, int> mono_index;
    std::vector<SparsePolynomial> composed;
    for (const auto& lam : lambdas) {
        composed.push_back(schur(lam, tau).compose(p.components));
        for (const auto& [e, c] : composed.back().terms())
            mono_index.emplace(e, static_cast<int>(mono_index.size()));
    }
    RatMatrix A(static_cast<int>(mono_index.size()), static_cast<int>(lambdas.size()));
    for (size_t j = 0; j < composed.size(); ++j)
        for (const auto& [e, c] : composed[j].terms())
            A.at(mono_index[e], static_cast<int>(j)) = c;
    return A.rank() == static_cast<int>(lambdas.size());
}

/// Generalized Wronskian: det of the N x N matrix whose row s applies the
/// multi-index derivative ops[s] to each component. Requires
/// |ops[s]| <= s (total order).
inline SparsePolynomial generalized_wronskian(const std::vector<SparsePolynomial>& g,
                                              const std::vector<ExpVec>& ops) {
    size_t N = g.size();
    if (ops.size() != N) throw std::invalid_argument("generalized_wronskian: |ops| != |g|");
    if (N == 0) throw std::invalid_argument("generalized_wronskian: empty family");
    int d = g[0].arity();
    for (size_t s = 0; s < N; ++s) {
        if (static_cast<int>(ops[s].size()) != d)
            throw std::invalid_argument("generalized_wronskian: op arity mismatch");
        long total = 0;
        for (int x : ops[s]) total += x;
        if (total > static_cast<long>(s))
            throw std::invalid_argument("generalized_wronskian: op order exceeds row index");
    }
    std::vector<std::vector<SparsePolynomial>> W(N, std::vector<SparsePolynomial>(N));
    for (size_t s = 0; s < N; ++s)
        for (size_t j = 0; j < N; ++j) W[s][j] = g[j].derivative_multi(ops[s]);

    // minor expansion over column subsets, rows processed in order
    std::map<std::vector<int>, SparsePolynomial> minors;
    minors[{}] = SparsePolynomial::constant(d, 1);
    for (size_t r = 0; r < N; ++r) {
        std::map<std::vector<int>, SparsePolynomial> next;
        for (const auto& cols : index_subsets(static_cast<int>(N) - 1, static_cast<int>(r) + 1)) {
            SparsePolynomial acc(d);
            for (size_t t = 0; t < cols.size(); ++t) {
                std::vector<int> rest;
                for (size_t u = 0; u < cols.size(); ++u)
                    if (u != t) rest.push_back(cols[u]);
                auto it = minors.find(rest);
                const SparsePolynomial& sub = it->second;
                if (sub.is_zero() || W[r][cols[t]].is_zero()) continue;
                SparsePolynomial term = W[r][cols[t]] * sub;
                if ((r + t) % 2) acc -= term;
                else acc += term;
            }
            next[cols] = std::move(acc);
        }
        minors = std::move(next);
    }
    std::vector<int> all;
    for (size_t j = 0; j < N; ++j) all.push_back(static_cast<int>(j));
    return minors[all];
}

struct WronskianWitness {
    bool nondegenerate = false;
    std::vector<ExpVec> ops;
};

/// Exhaustive search over admissible derivative op-lists (canonical sorted
/// form); returns the first witness whose Wronskian is a nonzero polynomial.
inline WronskianWitness wronskian_nondegenerate(const std::vector<SparsePolynomial>& g,
                                                long max_dets = 200000) {
    if (g.empty()) throw std::invalid_argument("wronskian_nondegenerate: empty family");
    int d = g[0].arity();
    int N = static_cast<int>(g.size());
    int maxdeg = 0;
    for (const auto& p : g) maxdeg = std::max(maxdeg, p.total_degree());

    // universe of multi-indices with total order <= min(N-1, maxdeg),
    // sorted by (total, lex)
    std::vector<ExpVec> universe;
    int cap = std::min(N - 1, maxdeg);
    std::vector<int> cur(d, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d) {
            universe.push_back(ExpVec(cur.begin(), cur.end()));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, cap);
    std::sort(universe.begin(), universe.end(), [](const ExpVec& a, const ExpVec& b) {
        long ta = 0, tb = 0;
        for (int x : a) ta += x;
        for (int x : b) tb += x;
        if (ta != tb) return ta < tb;
        return a < b;
    });

    auto total = [](const ExpVec& e) {
        long t = 0;
        for (int x : e) t += x;
        return t;
    };

    long dets = 0;
    WronskianWitness out;
    std::vector<int> pick;
    auto search = [&](auto&& self, int slot, int start) -> bool {
        if (slot == N) {
            if (++dets > max_dets)
                throw BudgetExceeded("wronskian_nondegenerate: combinatorial budget exceeded");
            std::vector<ExpVec> ops;
            for (int idx : pick) ops.push_back(universe[idx]);
            if (!generalized_wronskian(g, ops).is_zero()) {
                out.nondegenerate = true;
                out.ops = ops;
                return true;
            }
            return false;
        }
        for (int i = start; i < static_cast<int>(universe.size()); ++i) {
            if (total(universe[i]) > slot) break; // universe sorted by total order
            pick.push_back(i);
            if (self(self, slot + 1, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    search(search, 0, 0);
    return out;
}

/// Degree-ratio lower bound for a pair: symord(p0, p1) >= deg p0 / deg p1.
inline Rat symord_lower_bound_pair(const SparsePolynomial& p0, const SparsePolynomial& p1) {
    int d0 = p0.total_degree(), d1 = p1.total_degree();
    if (!(d0 > d1 && d1 >= 1))
        throw std::invalid_argument("symord_lower_bound_pair: need deg p0 > deg p1 >= 1");
    return make_rat(Int(d0), Int(d1));
}

/// Restriction-based upper bound (tau!/t!) * (symord(p_I) + 1); nullopt when
/// the restricted symord is infinite. The printed form in the source
/// material uses an undefined n; tau is the ambient arity here.
inline std::optional<Int> symord_upper_bound(const PolynomialMap& p, const std::vector<int>& I,
                                             const GroebnerBudget& budget = GroebnerBudget{}) {
    int tau = p.size();
    int t = static_cast<int>(I.size());
    if (t < 2 || t > tau) throw std::invalid_argument("symord_upper_bound: need 2 <= |I| <= tau");
    std::vector<SparsePolynomial> comps;
    for (int i : I) {
        if (i < 0 || i >= tau) throw std::invalid_argument("symord_upper_bound: bad index");
        comps.push_back(p.components[i]);
    }
    SymordResult r = symord_via_elimination(PolynomialMap(comps), budget);
    if (r.infinite()) return std::nullopt;
    Int bound = factorial(static_cast<unsigned long>(tau)) /
                factorial(static_cast<unsigned long>(t)) * Int(*r.value + 1);
    return bound;
}

/// The Veronese map x -> (x, x^2, ..., x^tau).
inline PolynomialMap veronese_map(int tau) {
    std::vector<SparsePolynomial> comps;
    for (int k = 1; k <= tau; ++k)
        comps.push_back(SparsePolynomial::variable(1, 0, k));
    return PolynomialMap(comps);
}

} // namespace conjcount
