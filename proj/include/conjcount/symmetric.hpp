#pragma once

#include "conjcount/partition.hpp"
#include "conjcount/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace conjcount {

namespace detail {

inline int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

inline Rat det_small(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

} // namespace detail

/// Alternant a_{lambda+mu} = det(T_i^{lambda_j + mu_j}) with the staircase
/// mu = (tau-1, ..., 1, 0). For lambda = 0 this is (up to the row/column
/// convention) the Vandermonde determinant a_mu.
inline SparsePolynomial alternant(const Partition& lambda, int tau) {
    if (lambda.length() > tau)
        throw std::invalid_argument("alternant: partition longer than tau");
    std::vector<int> exps(tau);
    for (int j = 0; j < tau; ++j) exps[j] = lambda.part(j) + (tau - 1 - j);
    SparsePolynomial out(tau);
    std::vector<int> perm(tau);
    std::iota(perm.begin(), perm.end(), 0);
    // exponents are strictly decreasing, so each permutation contributes a
    // distinct monomial T_{perm(0)}^{exps[0]} ... T_{perm(tau-1)}^{exps[tau-1]}
    do {
        ExpVec e(tau, 0);
        for (int j = 0; j < tau; ++j) e[perm[j]] = exps[j];
        out.add_term(e, Rat(detail::permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Schur polynomial s_lambda = a_{lambda+mu} / a_mu; zero when the partition
/// is longer than tau. The quotient is exact; a nonzero remainder would be a
/// bug in the alternant construction and throws.
inline SparsePolynomial schur(const Partition& lambda, int tau) {
    if (lambda.length() > tau) return SparsePolynomial(tau);
    if (tau == 1) {
        // single variable: s_(j) = T^j
        ExpVec e{lambda.part(0)};
        return SparsePolynomial::monomial(e, Rat(1));
    }
    return alternant(lambda, tau).divide_exact(alternant(Partition(), tau));
}

/// Monomial symmetric polynomial: sum over distinct permutations of the
/// exponent vector padded with zeros.
inline SparsePolynomial monomial_symmetric(const Partition& lambda, int tau) {
    if (lambda.length() > tau)
        throw std::invalid_argument("monomial_symmetric: partition longer than tau");
    std::vector<int> exps(tau, 0);
    for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda.parts[i];
    std::sort(exps.begin(), exps.end());
    SparsePolynomial out(tau);
    do {
        out.add_term(ExpVec(exps.begin(), exps.end()), Rat(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

/// Elementary symmetric polynomial e_k in tau variables.
inline SparsePolynomial elementary_symmetric(int k, int tau) {
    if (k < 0 || k > tau)
        throw std::invalid_argument("elementary_symmetric: k out of range");
    if (k == 0) return SparsePolynomial::constant(tau, 1);
    SparsePolynomial out(tau);
    for (const auto& subset : index_subsets(tau - 1, k)) {
        ExpVec e(tau, 0);
        for (int i : subset) e[i] = 1;
        out.add_term(e, Rat(1));
    }
    return out;
}

namespace detail {

inline Rat eval_schur_at(const Partition& lambda, int tau, const std::vector<Rat>& point,
                         bool distinct) {
    if (lambda.length() > tau) return Rat(0);
    if (distinct) {
        // bialternant ratio via two small determinants
        auto build = [&](const Partition& lam) {
            std::vector<std::vector<Rat>> a(tau, std::vector<Rat>(tau));
            for (int i = 0; i < tau; ++i)
                for (int j = 0; j < tau; ++j)
                    a[i][j] = rat_pow(point[i], lam.part(j) + (tau - 1 - j));
            return a;
        };
        return det_small(build(lambda)) / det_small(build(Partition()));
    }
    return schur(lambda, tau).eval(point);
}

} // namespace detail

/// Evaluates every s_lambda over the index set at an exact rational point,
/// in the canonical partition order. The first component is always s_0 = 1.
inline std::vector<Rat> schur_map_eval(int n, int tau, const std::vector<Rat>& point,
                                       IndexMode mode) {
    if (static_cast<int>(point.size()) != tau)
        throw std::invalid_argument("schur_map_eval: point arity mismatch");
    bool distinct = true;
    for (int i = 0; i < tau && distinct; ++i)
        for (int j = i + 1; j < tau; ++j)
            if (point[i] == point[j]) { distinct = false; break; }
    SchurIndexSet set = make_schur_index_set(n, tau, mode);
    std::vector<Rat> out;
    out.reserve(set.partitions.size());
    for (const auto& lambda : set.partitions)
        out.push_back(detail::eval_schur_at(lambda, tau, point, distinct && tau > 1));
    return out;
}

/// Expands a symmetric polynomial of degree <= k in the Schur basis
/// indexed by |lambda| <= k, len <= tau. Coefficients are unique; the
/// reconstruction sum c_lambda s_lambda reproduces the input exactly.
inline std::vector<std::pair<Partition, Rat>>
expand_in_schur_basis(const SparsePolynomial& p, int k, int tau) {
    if (p.arity() != tau)
        throw std::invalid_argument("expand_in_schur_basis: arity != tau");
    if (p.total_degree() > k)
        throw std::invalid_argument("expand_in_schur_basis: degree exceeds k");
    if (!p.is_symmetric())
        throw std::invalid_argument("expand_in_schur_basis: input not symmetric");
    if (p.is_zero()) return {};

    auto lambdas = enumerate_partitions(k, tau, IndexMode::Weight);
    std::vector<SparsePolynomial> basis;
    basis.reserve(lambdas.size());
    std::map<ExpVec, int> mono_index;
    for (const auto& lam : lambdas) {
        basis.push_back(schur(lam, tau));
        for (const auto& [e, c] : basis.back().terms())
            mono_index.emplace(e, static_cast<int>(mono_index.size()));
    }
    for (const auto& [e, c] : p.terms())
        mono_index.emplace(e, static_cast<int>(mono_index.size()));

    size_t rows = mono_index.size(), cols = lambdas.size();
    std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t j = 0; j < cols; ++j)
        for (const auto& [e, c] : basis[j].terms())
            aug[mono_index[e]][j] = c;
    for (const auto& [e, c] : p.terms())
        aug[mono_index[e]][cols] = c;

    // Gaussian elimination; the system is consistent with a unique solution
    // because the Schur family is a basis.
    std::vector<int> pivot_col_of_row(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && aug[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(aug[piv], aug[r]);
        Rat inv = aug[r][c];
        for (size_t cc = c; cc <= cols; ++cc) aug[r][cc] /= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || aug[rr][c] == 0) continue;
            Rat f = aug[rr][c];
            for (size_t cc = c; cc <= cols; ++cc) aug[rr][cc] -= f * aug[r][cc];
        }
        pivot_col_of_row[r] = static_cast<int>(c);
        ++r;
    }
    for (size_t rr = r; rr < rows; ++rr)
        if (aug[rr][cols] != 0)
            throw std::runtime_error("expand_in_schur_basis: inconsistent system (internal)");

    std::vector<std::pair<Partition, Rat>> out;
    for (size_t rr = 0; rr < r; ++rr) {
        int c = pivot_col_of_row[rr];
        if (c >= 0 && aug[rr][cols] != 0)
            out.emplace_back(lambdas[c], aug[rr][cols]);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return partition_order_less(a.first, b.first); });
    return out;
}

} // namespace conjcount
