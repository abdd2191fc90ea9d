#pragma once

#include "conjcount/rational.hpp"

#include <cmath>
#include <vector>

namespace conjcount {

/// Power law Q -> coeff * Q^exponent with positive rational coefficient and
/// rational exponent.
struct PowerLaw {
    Rat coeff{1};
    Rat exponent{0};

    double eval_double(double Q) const {
        return coeff.get_d() * std::pow(Q, exponent.get_d());
    }
    double log_eval(double Q) const {
        return std::log(coeff.get_d()) + exponent.get_d() * std::log(Q);
    }

    /// Exact rational value when Q^exponent is rational; otherwise a
    /// deterministic directed rounding with relative error below 2^-prec.
    Rat eval_rat(const Rat& Q, bool round_up = false, unsigned prec = 64) const {
        if (Q <= 0) throw std::invalid_argument("PowerLaw: Q must be positive");
        long num = static_cast<long>(exponent.get_num().get_si());
        long den = static_cast<long>(exponent.get_den().get_si());
        bool neg = num < 0;
        unsigned long k = static_cast<unsigned long>(den);
        Rat base = rat_pow(Q, neg ? -num : num);
        Rat root;
        if (k == 1) root = base;
        else if (!exact_root(base, k, root))
            root = round_up != neg ? root_upper_bound(base, k, prec)
                                   : root_lower_bound(base, k, prec);
        return neg ? Rat(coeff / root) : Rat(coeff * root);
    }
};

/// The approximation functions psi_0..psi_m (value bounds) and
/// phi_{m+1}..phi_n (derivative and coefficient bounds) as power laws.
struct ApproximationProfile {
    int n = 1;
    int m = 0;
    std::vector<PowerLaw> psi; // size m+1
    std::vector<PowerLaw> phi; // size n-m, phi[j] is phi_{m+1+j}

    void validate() const {
        if (!(n > m && m >= 0)) throw std::invalid_argument("profile: need n > m >= 0");
        if (static_cast<int>(psi.size()) != m + 1)
            throw std::invalid_argument("profile: psi count must be m+1");
        if (static_cast<int>(phi.size()) != n - m)
            throw std::invalid_argument("profile: phi count must be n-m");
        for (const auto& p : psi)
            if (p.coeff <= 0) throw std::invalid_argument("profile: nonpositive psi coefficient");
        for (const auto& p : phi)
            if (p.coeff <= 0) throw std::invalid_argument("profile: nonpositive phi coefficient");
    }

    /// Symbolic product law of all psi and phi (coefficients multiply,
    /// exponents add).
    PowerLaw product_law() const {
        PowerLaw out;
        for (const auto& p : psi) {
            out.coeff *= p.coeff;
            out.exponent += p.exponent;
        }
        for (const auto& p : phi) {
            out.coeff *= p.coeff;
            out.exponent += p.exponent;
        }
        return out;
    }

    /// Box half-widths (psi_0..psi_m, phi_{m+1}..phi_n) at Q, rationalized
    /// by directed rounding toward smaller widths when inexact.
    std::vector<Rat> box_widths(const Rat& Q, unsigned prec = 64) const {
        std::vector<Rat> w;
        for (const auto& p : psi) w.push_back(p.eval_rat(Q, false, prec));
        for (const auto& p : phi) w.push_back(p.eval_rat(Q, false, prec));
        return w;
    }
};

/// Logarithmic scaling parameters of the diagonal flow: t entries and the
/// short-vector threshold delta.
struct ScalingParameters {
    std::vector<double> t; // size n+1
    double delta = 0;
};

/// delta = (prod psi * prod phi)^{1/(n+1)}; t_k = log delta - log psi_k for
/// k <= m and t_k = log phi_k - log delta above.
inline ScalingParameters scaling_parameters(const ApproximationProfile& profile, const Rat& Q) {
    profile.validate();
    if (Q < 1) throw std::invalid_argument("scaling_parameters: Q >= 1 required");
    double q = Q.get_d();
    double log_prod = 0;
    for (const auto& p : profile.psi) log_prod += p.log_eval(q);
    for (const auto& p : profile.phi) log_prod += p.log_eval(q);
    double log_delta = log_prod / (profile.n + 1);

    ScalingParameters out;
    out.delta = std::exp(log_delta);
    out.t.resize(profile.n + 1);
    for (int k = 0; k <= profile.m; ++k) out.t[k] = log_delta - profile.psi[k].log_eval(q);
    for (int k = profile.m + 1; k <= profile.n; ++k)
        out.t[k] = profile.phi[k - profile.m - 1].log_eval(q) - log_delta;
    return out;
}

} // namespace conjcount
