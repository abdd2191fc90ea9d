#pragma once

#include "conjcount/polynomial.hpp"

#include <vector>

namespace conjcount {

/// Polynomial chart of a d-dimensional manifold in R^{m+1}: the first d
/// components are the coordinates themselves, the remaining m+1-d are
/// polynomials in x_0..x_{d-1} with rational coefficients.
struct ManifoldChart {
    int n = 1;
    int m = 0;
    int d = 1;
    std::vector<SparsePolynomial> dependent; // f_d..f_m
    std::vector<std::pair<Rat, Rat>> domain; // per-axis [lo, hi]

    void validate() const {
        if (!(n > m && m >= d - 1 && d >= 1))
            throw std::invalid_argument("chart: need n > m >= d-1 >= 0");
        if (static_cast<int>(dependent.size()) != m + 1 - d)
            throw std::invalid_argument("chart: need m+1-d dependent components");
        for (const auto& f : dependent)
            if (f.arity() != d) throw std::invalid_argument("chart: component arity != d");
        if (static_cast<int>(domain.size()) != d)
            throw std::invalid_argument("chart: need d domain intervals");
        for (const auto& [lo, hi] : domain)
            if (!(lo < hi)) throw std::invalid_argument("chart: empty domain axis");
    }

    std::vector<Rat> eval(const std::vector<Rat>& x) const {
        if (static_cast<int>(x.size()) != d)
            throw std::invalid_argument("chart eval: wrong point dimension");
        std::vector<Rat> f = x;
        for (const auto& comp : dependent) f.push_back(comp.eval(x));
        return f;
    }
};

} // namespace conjcount
