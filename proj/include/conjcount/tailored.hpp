#pragma once

#include "conjcount/intpoly.hpp"
#include "conjcount/lattice.hpp"
#include "conjcount/sturm.hpp"

#include <string>
#include <vector>

namespace conjcount {

/// Constants of the tailored construction. delta_min/delta_max bound the
/// volume product, delta0 is the lambda_0 floor, c_f the derivative filter;
/// the rest are derived per point from the local det(M).
struct TailoredConstants {
    Rat delta_min{1};
    Rat delta_max{1};
    Rat delta0{1, 2};
    Rat c_f{1};

    Rat det_m{0};
    Rat deltaN{0};    // det(M) / (delta_min * delta0^n)
    Rat c_prime{0};   // 2^{n+1} delta_max deltaN^{n+1}
    Rat c_y{0};       // 4(n+1) deltaN c_prime^2
    Rat c_y_alt{0};   // 2^{2n+4}(n+1) delta_max^2 deltaN^{2n+3}
    Rat kappa{0};     // c_y / c_f

    void derive(int n, const Rat& det_m_abs) {
        det_m = det_m_abs;
        deltaN = det_m_abs / (delta_min * rat_pow(delta0, n));
        c_prime = rat_pow(Rat(2), n + 1) * delta_max * rat_pow(deltaN, n + 1);
        c_y = Rat(4 * (n + 1)) * deltaN * c_prime * c_prime;
        c_y_alt = rat_pow(Rat(2), 2 * n + 4) * Rat(n + 1) * delta_max * delta_max *
                  rat_pow(deltaN, 2 * n + 3);
        kappa = c_y / c_f;
    }
};

/// Smallest prime strictly greater than c_prime; lies below 2 c_prime by
/// Bertrand whenever the interval is nondegenerate (c_prime >= 2 suffices).
inline Int bertrand_prime(const Rat& c_prime) {
    if (c_prime < 1) throw std::invalid_argument("bertrand_prime: need c_prime >= 1");
    Int p = floor_rat(c_prime);
    while (true) {
        Int next;
        mpz_nextprime(next.get_mpz_t(), p.get_mpz_t());
        p = next;
        if (Rat(p) > c_prime) return p;
    }
}

inline Int next_prime(const Int& p) {
    Int out;
    mpz_nextprime(out.get_mpz_t(), p.get_mpz_t());
    return out;
}

/// Eisenstein test at p: p does not divide a_n, p divides every lower
/// coefficient, p^2 does not divide a_0.
inline bool is_eisenstein(const IntPoly& poly, const Int& p) {
    if (poly.is_zero() || poly.lc() == 0)
        throw std::invalid_argument("is_eisenstein: zero polynomial");
    if (poly.lc() % p == 0) return false;
    for (int i = 0; i < poly.degree(); ++i)
        if (poly.coeff(i) % p != 0) return false;
    return poly.coeff(0) % (p * p) != 0;
}

namespace tailored_detail {

// solve A x = b over Z/p, representatives in [0, p); A must be invertible mod p
inline std::vector<Int> solve_mod_p(std::vector<std::vector<Int>> a, std::vector<Int> b,
                                    const Int& p) {
    int n = static_cast<int>(b.size());
    auto mod = [&](const Int& x) {
        Int r;
        mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    for (auto& row : a)
        for (auto& x : row) x = mod(x);
    for (auto& x : b) x = mod(x);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("solve_mod_p: singular modulo p");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), a[col][col].get_mpz_t(), p.get_mpz_t()))
            throw std::runtime_error("solve_mod_p: noninvertible pivot");
        for (int c = col; c < n; ++c) a[col][c] = mod(a[col][c] * inv);
        b[col] = mod(b[col] * inv);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Int f = a[r][col];
            for (int c = col; c < n; ++c) a[r][c] = mod(a[r][c] - f * a[col][c]);
            b[r] = mod(b[r] - f * b[col]);
        }
    }
    return b;
}

inline Int det_int(std::vector<std::vector<Int>> a) {
    int n = static_cast<int>(a.size());
    // fraction-free Bareiss
    Int det(1), prev(1);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Int(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r)
            for (int c = col + 1; c < n; ++c) {
                a[r][c] = a[col][col] * a[r][c] - a[r][col] * a[col][c];
                if (col > 0) a[r][c] /= prev;
            }
        prev = a[col][col];
    }
    det = a[n - 1][n - 1];
    return sign < 0 ? Int(-det) : det;
}

} // namespace tailored_detail

struct EisensteinTwist {
    std::vector<std::vector<Int>> eta;    // n+1 twist coefficient vectors
    std::vector<IntPoly> polys;           // twisted polynomials P~_l
};

/// The mod-p twist: choose t with A t = b = (0,..,0,1) mod p, correct each
/// residue with r_l = (1,..,1,0,..,0) (l trailing zeros) so the coefficient
/// vectors s = A eta_l satisfy s = b + p r_l mod p^2, which is Eisenstein at
/// p by construction. Throws when det A vanishes mod p (caller picks the
/// next prime).
inline EisensteinTwist eisenstein_twist(const std::vector<std::vector<Int>>& columns,
                                        const Int& p) {
    int n1 = static_cast<int>(columns.size()); // n+1 column vectors
    std::vector<std::vector<Int>> a(n1, std::vector<Int>(n1));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) a[i][j] = columns[j][i];
    Int det = tailored_detail::det_int(a);
    if (det == 0) throw std::invalid_argument("eisenstein_twist: singular A");
    if (det % p == 0) throw std::runtime_error("eisenstein_twist: det A divisible by p");

    std::vector<Int> b(n1, Int(0));
    b[n1 - 1] = 1;
    std::vector<Int> t = tailored_detail::solve_mod_p(a, b, p);

    // w = (A t - b) / p, exact
    std::vector<Int> w(n1, Int(0));
    for (int i = 0; i < n1; ++i) {
        Int s(0);
        for (int j = 0; j < n1; ++j) s += a[i][j] * t[j];
        s -= b[i];
        if (s % p != 0) throw std::runtime_error("eisenstein_twist: internal residue");
        w[i] = s / p;
    }

    EisensteinTwist out;
    for (int l = 0; l < n1; ++l) {
        std::vector<Int> rhs(n1);
        for (int i = 0; i < n1; ++i) {
            Int r_li = i < n1 - l ? 1 : 0; // l trailing zeros
            rhs[i] = r_li - w[i];
        }
        std::vector<Int> gamma = tailored_detail::solve_mod_p(a, rhs, p);
        std::vector<Int> eta(n1);
        for (int i = 0; i < n1; ++i) eta[i] = t[i] + p * gamma[i];
        std::vector<Int> s(n1, Int(0));
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j) s[i] += a[i][j] * eta[j];
        out.eta.push_back(std::move(eta));
        out.polys.push_back(IntPoly(std::move(s)));
    }
    return out;
}

struct BoundCheck {
    std::string kind; // "value", "coeff", "derivative"
    int index;
    Rat lhs, rhs;
    bool strict;
    bool ok;
};

struct PolyCertificate {
    IntPoly poly;
    Int prime{0};
    bool eisenstein_ok = false;
    bool bounds_ok = false;     // value and coefficient inequalities
    bool derivative_ok = false; // reported, not guaranteed by the construction
    std::vector<BoundCheck> checks;
};

struct TailoredResult {
    enum class Status { Ok, SingularM, MinimaTooLarge, Budget, BoundViolated, DependentOutputs };
    Status status = Status::Ok;
    std::string stage;
    TailoredConstants constants;
    Int prime{0};
    int prime_retries = 0;
    std::vector<std::vector<Int>> witness_columns;
    std::vector<PolyCertificate> certificates;

    bool ok() const { return status == Status::Ok; }
};

/// n+1 linearly independent integer coefficient vectors a_i with
/// M a_i in deltaN * K, via successive-minima witnesses. Lattices too skew
/// for the minima enumeration fall back to the LLL-reduced basis columns;
/// the membership postcondition is checked exactly either way.
inline std::vector<std::vector<Int>> minkowski_solutions(const std::vector<Rat>& fvals,
                                                         const ApproximationProfile& profile,
                                                         const Rat& Q, const Rat& deltaN,
                                                         const EnumerationBudget& budget = {}) {
    RatMatrix M = build_M(profile.n, fvals);
    if (M.det() == 0) throw std::invalid_argument("minkowski_solutions: singular M");
    ConvexBody body;
    body.half_widths = profile.box_widths(Q);
    body.strict.assign(profile.n + 1, false);
    for (int k = 0; k <= profile.m; ++k) body.strict[k] = true;

    std::vector<std::vector<Int>> witnesses;
    try {
        EnumerationBudget trial = budget;
        trial.max_nodes = std::min(trial.max_nodes, 2'000'000L);
        witnesses = successive_minima(M, body, trial).witnesses;
    } catch (const BudgetExceeded&) {
        for (auto& row : lat_detail::lll_transform(M, body.half_widths))
            witnesses.push_back(std::vector<Int>(row.begin(), row.end()));
    }
    for (size_t i = 0; i < witnesses.size(); ++i)
        if (!body.contains(M.apply_int(witnesses[i]), deltaN))
            throw std::runtime_error("minkowski_solutions: witness outside deltaN K (lambda_0 <= delta0)");
    return witnesses;
}

/// Full pipeline at one manifold point: Minkowski solutions, Bertrand prime,
/// Eisenstein twist, certificate. The value/coefficient bounds and
/// irreducibility are guaranteed; the derivative lower bound is checked and
/// reported per polynomial.
inline TailoredResult construct_tailored(const std::vector<Rat>& fvals,
                                         const ApproximationProfile& profile, const Rat& Q,
                                         TailoredConstants constants,
                                         const EnumerationBudget& budget = {}) {
    profile.validate();
    int n = profile.n, m = profile.m;
    TailoredResult out;

    RatMatrix M = build_M(n, fvals);
    Rat detM = M.det();
    if (detM == 0) {
        out.status = TailoredResult::Status::SingularM;
        out.stage = "M singular at sample point";
        return out;
    }
    constants.derive(n, rat_abs(detM));
    out.constants = constants;

    try {
        out.witness_columns = minkowski_solutions(fvals, profile, Q, constants.deltaN, budget);
    } catch (const BudgetExceeded& e) {
        out.status = TailoredResult::Status::Budget;
        out.stage = std::string("minima: ") + e.what();
        return out;
    } catch (const std::runtime_error& e) {
        out.status = TailoredResult::Status::MinimaTooLarge;
        out.stage = e.what();
        return out;
    }

    Int p = bertrand_prime(constants.c_prime);
    EisensteinTwist twist;
    while (true) {
        try {
            twist = eisenstein_twist(out.witness_columns, p);
            break;
        } catch (const std::runtime_error&) {
            p = next_prime(p);
            if (++out.prime_retries > 64) {
                out.status = TailoredResult::Status::Budget;
                out.stage = "prime search: too many retries";
                return out;
            }
        }
    }
    out.prime = p;

    std::vector<Rat> widths = profile.box_widths(Q);
    Rat phi_m1 = widths[m + 1];
    bool all_bounds = true;
    for (int l = 0; l <= n; ++l) {
        PolyCertificate cert;
        cert.poly = twist.polys[l];
        cert.prime = p;
        cert.eisenstein_ok = is_eisenstein(cert.poly, p);

        bool bounds = true;
        for (int k = 0; k <= m; ++k) {
            BoundCheck c{"value", k, rat_abs(cert.poly.eval(fvals[k])), constants.c_y * widths[k],
                         true, false};
            c.ok = c.lhs < c.rhs;
            bounds &= c.ok;
            cert.checks.push_back(c);
        }
        for (int k = m + 1; k <= n; ++k) {
            BoundCheck c{"coeff", k, Rat(abs(cert.poly.coeff(k))), constants.c_y * widths[k],
                         false, false};
            c.ok = c.lhs <= c.rhs;
            bounds &= c.ok;
            cert.checks.push_back(c);
        }
        cert.bounds_ok = bounds;
        all_bounds &= bounds;

        IntPoly deriv = cert.poly.derivative();
        bool dok = true;
        for (int k = 0; k <= m; ++k) {
            BoundCheck c{"derivative", k, rat_abs(deriv.eval(fvals[k])), constants.c_f * phi_m1,
                         true, false};
            c.ok = c.lhs > c.rhs;
            dok &= c.ok;
            cert.checks.push_back(c);
        }
        cert.derivative_ok = dok;
        out.certificates.push_back(std::move(cert));
    }

    // exact independence of the n+1 outputs
    RatMatrix S(n + 1, n + 1);
    for (int l = 0; l <= n; ++l)
        for (int i = 0; i <= n; ++i) S.at(i, l) = Rat(twist.polys[l].coeff(i));
    if (S.rank() != n + 1) {
        out.status = TailoredResult::Status::DependentOutputs;
        out.stage = "twist outputs linearly dependent";
        return out;
    }
    bool all_eis = true;
    for (const auto& c : out.certificates) all_eis &= c.eisenstein_ok;
    if (!all_bounds || !all_eis) {
        out.status = TailoredResult::Status::BoundViolated;
        out.stage = !all_eis ? "eisenstein check failed" : "value/coefficient bound violated";
        return out;
    }
    return out;
}

struct RootEnclosure {
    enum class Status { Ok, NoSignChange };
    Status status = Status::NoSignChange;
    Interval iv;
};

/// Per coordinate: bisection enclosure of a root of P inside
/// [y_k - r_k, y_k + r_k], from the sign change at the endpoints, refined to
/// width <= 2^-precision * r_k. Exact sign evaluation throughout.
inline std::vector<RootEnclosure> conjugate_points_from_polynomial(
    const IntPoly& P, const std::vector<Rat>& targets, const std::vector<Rat>& radii,
    unsigned precision = 40) {
    if (targets.size() != radii.size())
        throw std::invalid_argument("conjugate_points: targets/radii size mismatch");
    std::vector<RootEnclosure> out;
    for (size_t k = 0; k < targets.size(); ++k) {
        RootEnclosure enc;
        Rat lo = targets[k] - radii[k], hi = targets[k] + radii[k];
        int slo = P.sign_at(lo), shi = P.sign_at(hi);
        if (slo == 0) {
            enc.status = RootEnclosure::Status::Ok;
            enc.iv = Interval{lo, lo};
        } else if (shi == 0) {
            enc.status = RootEnclosure::Status::Ok;
            enc.iv = Interval{hi, hi};
        } else if (slo * shi > 0) {
            enc.status = RootEnclosure::Status::NoSignChange;
        } else {
            Rat target = radii[k] / rat_pow(Rat(2), static_cast<long>(precision));
            while (hi - lo > target) {
                Rat mid = (lo + hi) / 2;
                int sm = P.sign_at(mid);
                if (sm == 0) {
                    lo = hi = mid;
                    break;
                }
                if (sm == slo) lo = mid;
                else hi = mid;
            }
            enc.status = RootEnclosure::Status::Ok;
            enc.iv = Interval{lo, hi};
        }
        out.push_back(enc);
    }
    return out;
}

} // namespace conjcount
