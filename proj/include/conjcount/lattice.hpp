#pragma once

#include "conjcount/manifold.hpp"
#include "conjcount/matrix.hpp"
#include "conjcount/profile.hpp"
#include "conjcount/rng.hpp"
#include "conjcount/vandermonde.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace conjcount {

/// Axis-aligned symmetric convex body: |y_k| < or <= half_widths[k], with a
/// per-axis strictness flag.
struct ConvexBody {
    std::vector<Rat> half_widths;
    std::vector<bool> strict; // true: open constraint on that axis

    static ConvexBody cube(int dim, const Rat& r, bool strict_flag = false) {
        ConvexBody b;
        b.half_widths.assign(dim, r);
        b.strict.assign(dim, strict_flag);
        return b;
    }

    int dim() const { return static_cast<int>(half_widths.size()); }

    void validate() const {
        if (half_widths.empty()) throw std::invalid_argument("ConvexBody: empty");
        if (strict.size() != half_widths.size())
            throw std::invalid_argument("ConvexBody: flag count mismatch");
        for (const auto& w : half_widths)
            if (w <= 0) throw std::invalid_argument("ConvexBody: nonpositive half-width");
    }

    Rat volume() const {
        Rat v(1);
        for (const auto& w : half_widths) v *= 2 * w;
        return v;
    }

    /// Gauge of v: max_k |v_k| / w_k.
    Rat norm(const std::vector<Rat>& v) const {
        Rat out(0);
        for (size_t k = 0; k < half_widths.size(); ++k)
            out = std::max(out, Rat(rat_abs(v[k]) / half_widths[k]));
        return out;
    }

    /// Membership in the dilated body, honoring strictness flags.
    bool contains(const std::vector<Rat>& v, const Rat& dilation) const {
        for (size_t k = 0; k < half_widths.size(); ++k) {
            Rat bound = dilation * half_widths[k];
            Rat a = rat_abs(v[k]);
            if (strict[k] ? !(a < bound) : !(a <= bound)) return false;
        }
        return true;
    }
};

struct EnumerationBudget {
    long max_nodes = 200'000'000;
};

namespace lat_detail {

// integer upper bound for sqrt(num/den)
inline Int sqrt_upper(const Rat& r) {
    if (r < 0) return Int(-1);
    Int prod = r.get_num() * r.get_den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
    root += 1;
    return ceil_rat(make_rat(root, r.get_den()));
}

/// Unimodular column transform T making the width-scaled basis LLL-reduced
/// (delta = 3/4), computed in exact rational arithmetic. Preprocessing only:
/// every enumeration stays exhaustive, just over a better-conditioned form.
inline std::vector<std::vector<Int>> lll_transform(const RatMatrix& B,
                                                   const std::vector<Rat>& widths) {
    int dim = B.rows();
    // scaled column vectors
    std::vector<std::vector<Rat>> w(dim, std::vector<Rat>(dim));
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) w[j][i] = B.at(i, j) / widths[i];
    std::vector<std::vector<Int>> T(dim, std::vector<Int>(dim, Int(0)));
    for (int j = 0; j < dim; ++j) T[j][j] = 1;

    auto dot = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        Rat s(0);
        for (int i = 0; i < dim; ++i) s += x[i] * y[i];
        return s;
    };
    std::vector<std::vector<Rat>> mu(dim, std::vector<Rat>(dim, Rat(0)));
    std::vector<Rat> bstar(dim, Rat(0));
    auto gso = [&]() {
        std::vector<std::vector<Rat>> star = w;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < i; ++j) {
                mu[i][j] = dot(w[i], star[j]) / bstar[j];
                for (int k = 0; k < dim; ++k) star[i][k] -= mu[i][j] * star[j][k];
            }
            bstar[i] = dot(star[i], star[i]);
            if (bstar[i] == 0)
                throw std::invalid_argument("lattice enumeration: singular basis");
        }
    };
    gso();
    int k = 1;
    long iterations = 0;
    while (k < dim) {
        if (++iterations > 200000)
            throw std::runtime_error("lll_transform: failed to converge");
        for (int j = k - 1; j >= 0; --j) {
            Int q = floor_rat(Rat(mu[k][j] + make_rat(1, 2)));
            if (q == 0) continue;
            for (int i = 0; i < dim; ++i) {
                w[k][i] -= Rat(q) * w[j][i];
                T[k][i] -= q * T[j][i];
            }
            for (int jj = 0; jj < j; ++jj) mu[k][jj] -= Rat(q) * mu[j][jj];
            mu[k][j] -= Rat(q);
        }
        if (bstar[k] >= (make_rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
            ++k;
        } else {
            std::swap(w[k], w[k - 1]);
            std::swap(T[k], T[k - 1]);
            gso();
            k = std::max(1, k - 1);
        }
    }
    return T; // T[j] holds the coefficients of new column j in the old basis
}

/// Exact enumeration of all nonzero integer vectors a with
/// ||diag(1/w) B a||_2^2 <= l2_bound, by depth-first search on the LDL^T
/// quadratic form after LLL preconditioning. The visitor receives
/// coefficients in the original basis and returns false to stop early.
inline void enumerate_quadratic(const RatMatrix& B, const std::vector<Rat>& widths,
                                const Rat& l2_bound, const EnumerationBudget& budget,
                                const std::function<bool(const std::vector<Int>&)>& visit) {
    int dim = B.rows();
    if (B.cols() != dim) throw std::invalid_argument("lattice enumeration: non-square basis");
    std::vector<std::vector<Int>> T = lll_transform(B, widths);
    RatMatrix BT(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) {
            Rat s(0);
            for (int kk = 0; kk < dim; ++kk) s += B.at(i, kk) * Rat(T[j][kk]);
            BT.at(i, j) = s;
        }
    // Gram matrix of the width-scaled transformed basis
    RatMatrix G(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rat s(0);
            for (int k = 0; k < dim; ++k) s += BT.at(k, i) * BT.at(k, j) / (widths[k] * widths[k]);
            G.at(i, j) = s;
        }
    // G = U^T D U with U unit upper triangular
    std::vector<Rat> D(dim);
    std::vector<std::vector<Rat>> U(dim, std::vector<Rat>(dim, Rat(0)));
    for (int i = 0; i < dim; ++i) {
        Rat di = G.at(i, i);
        for (int k = 0; k < i; ++k) di -= D[k] * U[k][i] * U[k][i];
        if (di <= 0) throw std::invalid_argument("lattice enumeration: singular basis");
        D[i] = di;
        U[i][i] = 1;
        for (int j = i + 1; j < dim; ++j) {
            Rat u = G.at(i, j);
            for (int k = 0; k < i; ++k) u -= D[k] * U[k][i] * U[k][j];
            U[i][j] = u / di;
        }
    }

    std::vector<Int> a(dim, Int(0));
    std::vector<Rat> center(dim, Rat(0));
    long nodes = 0;
    bool stop = false;

    auto dfs = [&](auto&& self, int level, const Rat& rem) -> void {
        if (stop) return;
        if (++nodes > budget.max_nodes)
            throw BudgetExceeded("lattice enumeration: node budget exceeded");
        if (level < 0) {
            bool nonzero = false;
            for (const auto& x : a)
                if (x != 0) { nonzero = true; break; }
            if (!nonzero) return;
            // back to coefficients in the original basis
            std::vector<Int> orig(dim, Int(0));
            for (int j = 0; j < dim; ++j) {
                if (a[j] == 0) continue;
                for (int k = 0; k < dim; ++k) orig[k] += T[j][k] * a[j];
            }
            if (!visit(orig)) stop = true;
            return;
        }
        Rat c(0);
        for (int j = level + 1; j < dim; ++j)
            if (a[j] != 0) c += U[level][j] * Rat(a[j]);
        Int radius = sqrt_upper(rem / D[level]);
        Int lo = ceil_rat(-c - Rat(radius));
        Int hi = floor_rat(-c + Rat(radius));
        for (Int v = lo; v <= hi && !stop; ++v) {
            Rat off = Rat(v) + c;
            Rat used = D[level] * off * off;
            if (used > rem) continue;
            a[level] = v;
            self(self, level - 1, rem - used);
        }
        a[level] = 0;
    };
    dfs(dfs, dim - 1, l2_bound);
}

inline std::vector<Int> canonical_sign(std::vector<Int> a) {
    for (const auto& x : a) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : a) y = -y;
            break;
        }
    }
    return a;
}

} // namespace lat_detail

struct ShortestVectorResult {
    std::vector<Int> coeffs;
    std::vector<Rat> vec;
    Rat norm; // sup norm
};

/// Shortest nonzero lattice vector of B Z^dim in the sup norm, if shorter
/// than the bound. Exhaustive exact enumeration; ties resolved by the
/// lexicographically smallest coefficient vector with positive leading
/// entry. Dimension capped at 10.
inline std::optional<ShortestVectorResult>
shortest_vector(const RatMatrix& B, const Rat& bound,
                const EnumerationBudget& budget = EnumerationBudget{}) {
    int dim = B.rows();
    if (dim > 10) throw std::invalid_argument("shortest_vector: dimension > 10");
    if (B.det() == 0) throw std::invalid_argument("shortest_vector: singular basis");
    if (bound <= 0) return std::nullopt;

    // a basis column bounds the optimum, so the search radius never needs to
    // exceed the smallest column norm
    Rat min_col = bound;
    for (int j = 0; j < dim; ++j) {
        Rat norm(0);
        for (int i = 0; i < dim; ++i) norm = std::max(norm, rat_abs(B.at(i, j)));
        min_col = std::min(min_col, norm);
    }
    std::vector<Rat> widths(dim, Rat(1));
    Rat l2 = min_col * min_col * dim;
    std::optional<ShortestVectorResult> best;
    lat_detail::enumerate_quadratic(B, widths, l2, budget, [&](const std::vector<Int>& a) {
        std::vector<Rat> v = B.apply_int(a);
        Rat norm(0);
        for (const auto& x : v) norm = std::max(norm, rat_abs(x));
        if (norm >= bound) return true;
        std::vector<Int> canon = lat_detail::canonical_sign(a);
        if (!best || norm < best->norm || (norm == best->norm && canon < best->coeffs)) {
            best = ShortestVectorResult{canon, B.apply_int(canon), norm};
        }
        return true;
    });
    return best;
}

struct SuccessiveMinima {
    std::vector<Rat> lambda;                 // lambda_0 <= ... <= lambda_dim-1
    std::vector<std::vector<Int>> witnesses; // linearly independent coefficient vectors
};

/// Exact successive minima of the body with respect to B Z^dim, with
/// linearly independent witness vectors. Dimension capped at 8.
inline SuccessiveMinima successive_minima(const RatMatrix& B, const ConvexBody& body,
                                          const EnumerationBudget& budget = EnumerationBudget{}) {
    int dim = B.rows();
    body.validate();
    if (body.dim() != dim) throw std::invalid_argument("successive_minima: body dim mismatch");
    if (dim > 8) throw std::invalid_argument("successive_minima: dimension > 8");
    if (B.det() == 0) throw std::invalid_argument("successive_minima: singular basis");

    // the LLL-reduced basis gives dim independent vectors, so the largest of
    // their gauges bounds every lambda_i; one enumeration at that radius is
    // complete (skew lattices may exhaust the node budget, which is loud)
    std::vector<std::vector<Int>> T = lat_detail::lll_transform(B, body.half_widths);
    Rat R(0);
    for (int j = 0; j < dim; ++j) {
        std::vector<Int> coeffs(T[j].begin(), T[j].end());
        R = std::max(R, body.norm(B.apply_int(coeffs)));
    }

    struct Cand {
        Rat norm;
        std::vector<Int> coeffs;
    };
    std::vector<Cand> cands;
    lat_detail::enumerate_quadratic(B, body.half_widths, R * R * dim, budget,
                                    [&](const std::vector<Int>& a) {
                                        std::vector<Rat> v = B.apply_int(a);
                                        Rat norm = body.norm(v);
                                        if (norm <= R)
                                            cands.push_back({norm, lat_detail::canonical_sign(a)});
                                        return true;
                                    });
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.norm != y.norm) return x.norm < y.norm;
        return x.coeffs < y.coeffs;
    });

    SuccessiveMinima out;
    std::vector<std::vector<Rat>> echelon; // row-reduced picked directions
    for (const auto& cand : cands) {
        if (static_cast<int>(out.witnesses.size()) == dim) break;
        std::vector<Rat> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = Rat(cand.coeffs[i]);
        for (const auto& row : echelon) {
            int piv = 0;
            while (piv < dim && row[piv] == 0) ++piv;
            if (piv < dim && v[piv] != 0) {
                Rat f = v[piv] / row[piv];
                for (int i = piv; i < dim; ++i) v[i] -= f * row[i];
            }
        }
        bool zero = true;
        for (const auto& x : v)
            if (x != 0) { zero = false; break; }
        if (zero) continue;
        echelon.push_back(v);
        out.lambda.push_back(cand.norm);
        out.witnesses.push_back(cand.coeffs);
    }
    if (static_cast<int>(out.witnesses.size()) != dim)
        throw std::runtime_error("successive_minima: internal: radius missed witnesses");
    return out;
}

/// Existence of a nonzero lattice point of B Z^dim inside the body
/// (per-axis strictness honored).
inline bool lattice_point_in_body_exists(const RatMatrix& B, const ConvexBody& body,
                                         const EnumerationBudget& budget = EnumerationBudget{}) {
    int dim = B.rows();
    body.validate();
    if (body.dim() != dim) throw std::invalid_argument("lattice_point_in_body_exists: dim mismatch");
    if (B.det() == 0) throw std::invalid_argument("lattice_point_in_body_exists: singular basis");

    // cheap pre-pass over small coefficient vectors; dense lattices almost
    // always resolve here without touching the full enumeration
    {
        std::vector<Int> a(dim, Int(0));
        auto scan = [&](auto&& self, int lvl) -> bool {
            if (lvl == dim) {
                for (const auto& x : a)
                    if (x != 0) return body.contains(B.apply_int(a), Rat(1));
                return false;
            }
            for (long v = -1; v <= 1; ++v) {
                a[lvl] = v;
                if (self(self, lvl + 1)) return true;
            }
            a[lvl] = 0;
            return false;
        };
        if (scan(scan, 0)) return true;
    }

    bool found = false;
    lat_detail::enumerate_quadratic(B, body.half_widths, Rat(dim), budget,
                                    [&](const std::vector<Int>& a) {
                                        if (body.contains(B.apply_int(a), Rat(1))) {
                                            found = true;
                                            return false;
                                        }
                                        return true;
                                    });
    return found;
}

struct BadSetError : std::runtime_error {
    int h;
    explicit BadSetError(int h_) : std::runtime_error("singular U^h at h = " + std::to_string(h_)), h(h_) {}
};

/// True iff for every 0 <= h <= m the lattice U^h_f(x) Z^{n+1} has a nonzero
/// point in the unscaled box (psi strict, phi non-strict): the shortest-
/// vector reformulation of the solvability of the inequality system.
/// Thresholds are the rationalized power-law values, so membership is exact.
inline bool bad_set_indicator(const std::vector<Rat>& fvals, const ApproximationProfile& profile,
                              const Rat& Q, const EnumerationBudget& budget = EnumerationBudget{}) {
    profile.validate();
    if (static_cast<int>(fvals.size()) != profile.m + 1)
        throw std::invalid_argument("bad_set_indicator: fvals size != m+1");
    ConvexBody body;
    body.half_widths = profile.box_widths(Q);
    body.strict.assign(profile.n + 1, false);
    for (int k = 0; k <= profile.m; ++k) body.strict[k] = true;

    for (int h = 0; h <= profile.m; ++h) {
        RatMatrix U = build_U(profile.n, h, fvals);
        if (U.det() == 0) throw BadSetError(h);
        if (!lattice_point_in_body_exists(U, body, budget)) return false;
    }
    return true;
}

struct MeasureEstimate {
    double fraction = 0;
    long bad = 0;
    long samples = 0;
    long rejected = 0; // sample points with a singular U^h, resampled
};

/// Deterministic-seed Monte-Carlo estimate of the bad-set fraction over the
/// chart domain. Samples are dyadic rationals from a counter RNG, so the
/// result is independent of the worker count.
inline MeasureEstimate measure_estimate(const ManifoldChart& chart,
                                        const ApproximationProfile& profile, const Rat& Q,
                                        long samples, std::uint64_t seed, int jobs = 1,
                                        const EnumerationBudget& budget = EnumerationBudget{}) {
    chart.validate();
    profile.validate();
    if (samples < 1) throw std::invalid_argument("measure_estimate: samples >= 1");
    if (chart.m != profile.m || chart.n != profile.n)
        throw std::invalid_argument("measure_estimate: chart/profile mismatch");

    CounterRng rng{seed};
    std::atomic<long> bad{0}, rejected{0};
    auto worker = [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            // counter layout: sample i retries at i + k * samples
            for (long attempt = 0;; ++attempt) {
                std::uint64_t ctr = static_cast<std::uint64_t>(i + attempt * samples);
                std::vector<Rat> x(chart.d);
                for (int v = 0; v < chart.d; ++v) {
                    Rat u = rng.unit_rat(ctr * chart.d + v);
                    x[v] = chart.domain[v].first +
                           u * (chart.domain[v].second - chart.domain[v].first);
                }
                try {
                    if (bad_set_indicator(chart.eval(x), profile, Q, budget)) bad.fetch_add(1);
                    break;
                } catch (const BadSetError&) {
                    rejected.fetch_add(1);
                    if (attempt > 64)
                        throw std::runtime_error("measure_estimate: persistent singular U^h");
                }
            }
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker(0, samples);
    } else {
        std::vector<std::thread> threads;
        long chunk = (samples + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            long lo = t * chunk, hi = std::min<long>(samples, lo + chunk);
            if (lo < hi) threads.emplace_back(worker, lo, hi);
        }
        for (auto& th : threads) th.join();
    }

    MeasureEstimate out;
    out.bad = bad.load();
    out.samples = samples;
    out.rejected = rejected.load();
    out.fraction = static_cast<double>(out.bad) / static_cast<double>(samples);
    return out;
}

} // namespace conjcount
