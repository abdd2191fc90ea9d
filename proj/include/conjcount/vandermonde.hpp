#pragma once

#include "conjcount/matrix.hpp"
#include "conjcount/symmetric.hpp"

#include <string>
#include <vector>

namespace conjcount {

/// Rows 0..m are the value rows (1, f_i, ..., f_i^n); the remaining n-m rows
/// are (0 | I_{n-m}) right-aligned.
inline RatMatrix build_M(int n, const std::vector<Rat>& fvals) {
    int m = static_cast<int>(fvals.size()) - 1;
    if (m < 0 || m >= n) throw std::invalid_argument("build_M: need 0 <= m < n");
    RatMatrix M(n + 1, n + 1);
    for (int i = 0; i <= m; ++i) {
        Rat p(1);
        for (int j = 0; j <= n; ++j) {
            M.at(i, j) = p;
            p *= fvals[i];
        }
    }
    for (int i = m + 1; i <= n; ++i) M.at(i, i) = 1;
    return M;
}

/// Rows v_0..v_m, then the derivative row v'_h = (0, 1, 2 f_h, ..., n f_h^{n-1}),
/// then (0 | I_{n-m-1}) right-aligned.
inline RatMatrix build_U(int n, int h, const std::vector<Rat>& fvals) {
    int m = static_cast<int>(fvals.size()) - 1;
    if (m < 0 || m + 1 >= n + 1) throw std::invalid_argument("build_U: need m+1 < n+1");
    if (h < 0 || h > m) throw std::invalid_argument("build_U: h out of range");
    RatMatrix U(n + 1, n + 1);
    for (int i = 0; i <= m; ++i) {
        Rat p(1);
        for (int j = 0; j <= n; ++j) {
            U.at(i, j) = p;
            p *= fvals[i];
        }
    }
    Rat p(1);
    for (int j = 1; j <= n; ++j) {
        U.at(m + 1, j) = Rat(j) * p;
        p *= fvals[h];
    }
    for (int i = m + 2; i <= n; ++i) U.at(i, i) = 1;
    return U;
}

/// Vandermonde polynomial prod_{i<j} (f_j - f_i); 1 for a single entry.
inline Rat vandermonde(const std::vector<Rat>& fvals) {
    Rat out(1);
    for (size_t i = 0; i < fvals.size(); ++i)
        for (size_t j = i + 1; j < fvals.size(); ++j) out *= fvals[j] - fvals[i];
    return out;
}

struct FactorizationDiff {
    std::vector<int> J;
    Rat grass_value;
    Rat schur_value;
};

/// Verifies grass_I(M_f) = V(f_I) * s_lambda(f_I) componentwise under the
/// box-mode bijection J <-> lambda. Exact rational comparison; on mismatch
/// fills the optional diff report.
inline bool schur_factorization_check(int n, const std::vector<Rat>& fvals,
                                      const std::vector<int>& I,
                                      std::vector<FactorizationDiff>* diff = nullptr) {
    RatMatrix M = build_M(n, fvals);
    PluckerVector g = grass(M, I);
    int tau = static_cast<int>(I.size());
    std::vector<Rat> fI;
    for (int i : I) fI.push_back(fvals[i]);
    Rat V = vandermonde(fI);

    SchurIndexSet set = make_schur_index_set(n, tau, IndexMode::Box);
    std::vector<Rat> svals;
    if (V != 0) svals = schur_map_eval(n, tau, fI, IndexMode::Box);

    bool ok = true;
    for (const auto& [J, gv] : g.components) {
        Rat expected(0);
        if (V != 0) {
            int idx = set.find(partition_from_columns(J));
            expected = V * svals[idx];
        }
        if (gv != expected) {
            ok = false;
            if (diff) diff->push_back({J, gv, expected});
        }
    }
    return ok;
}

} // namespace conjcount
