#include <catch2/catch_amalgamated.hpp>

#include "conjcount/lattice.hpp"

#include <random>

using namespace conjcount;

namespace {

RatMatrix diag(const std::vector<long>& d) {
    RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = Rat(d[i]);
    return m;
}

RatMatrix random_unimodular(std::mt19937& rng, int n) {
    // product of random elementary integer operations on the identity
    RatMatrix m = RatMatrix::identity(n);
    for (int step = 0; step < 12; ++step) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (i == j) continue;
        long f = static_cast<long>(rng() % 5) - 2;
        for (int r = 0; r < n; ++r) m.at(r, j) += Rat(f) * m.at(r, i);
    }
    return m;
}

// full pullback-box enumeration oracle for the shortest vector, dims <= 4;
// near-singular bases give pullback boxes too large to scan, flagged via
// the skipped flag
std::optional<Rat> shortest_norm_oracle(const RatMatrix& B, const Rat& bound, bool* skipped) {
    int dim = B.rows();
    RatMatrix inv = B.inverse();
    std::vector<long> maxc(dim, 0);
    double size = 1;
    for (int i = 0; i < dim; ++i) {
        Rat s(0);
        for (int j = 0; j < dim; ++j) s += rat_abs(inv.at(i, j)) * bound;
        maxc[i] = mpz_get_si(ceil_rat(s).get_mpz_t());
        size *= 2.0 * static_cast<double>(maxc[i]) + 1;
    }
    *skipped = size > 3e6;
    if (*skipped) return std::nullopt;
    std::optional<Rat> best;
    std::vector<Int> a(dim);
    auto rec = [&](auto&& self, int lvl) -> void {
        if (lvl == dim) {
            bool zero = true;
            for (const auto& x : a)
                if (x != 0) zero = false;
            if (zero) return;
            auto v = B.apply_int(a);
            Rat norm(0);
            for (const auto& x : v) norm = std::max(norm, rat_abs(x));
            if (norm < bound && (!best || norm < *best)) best = norm;
            return;
        }
        for (long c = -maxc[lvl]; c <= maxc[lvl]; ++c) {
            a[lvl] = c;
            self(self, lvl + 1);
        }
    };
    rec(rec, 0);
    return best;
}

} // namespace

TEST_CASE("shortest vector examples") {
    auto r = shortest_vector(diag({2, 3}), Rat(10));
    REQUIRE(r.has_value());
    CHECK(r->norm == 2);
    CHECK(r->coeffs == std::vector<Int>{1, 0});
    CHECK(r->vec == std::vector<Rat>{Rat(2), Rat(0)});

    CHECK(!shortest_vector(RatMatrix::identity(3), make_rat(1, 2)).has_value());

    RatMatrix sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(1, 0) = 1;
    CHECK_THROWS_AS(shortest_vector(sing, Rat(1)), std::invalid_argument);
}

TEST_CASE("unimodular lattices have shortest vector 1") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto B = random_unimodular(rng, 3);
        auto r = shortest_vector(B, Rat(2));
        REQUIRE(r.has_value());
        CHECK(r->norm == 1);
    }
}

TEST_CASE("shortest vector matches full enumeration, dims <= 4") {
    std::mt19937 rng(9);
    int done = 0;
    while (done < 100) {
        int dim = 2 + static_cast<int>(rng() % 3);
        RatMatrix B(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                B.at(i, j) = Rat(static_cast<long>(rng() % 9) - 4);
        if (B.det() == 0) continue;
        ++done;
        Rat bound(5);
        bool skipped = false;
        auto slow = shortest_norm_oracle(B, bound, &skipped);
        if (skipped) continue;
        auto fast = shortest_vector(B, bound);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) CHECK(fast->norm == *slow);
    }
}

TEST_CASE("shortest vector is below random lattice vectors") {
    std::mt19937 rng(13);
    RatMatrix B(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) B.at(i, j) = Rat(static_cast<long>(rng() % 15) - 7);
    if (B.det() == 0) B.at(0, 0) += 1;
    auto r = shortest_vector(B, Rat(1000));
    REQUIRE(r.has_value());
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Int> a(4);
        bool zero = true;
        for (auto& x : a) {
            long v = static_cast<long>(rng() % 21) - 10;
            x = v;
            if (v) zero = false;
        }
        if (zero) continue;
        auto v = B.apply_int(a);
        Rat norm(0);
        for (const auto& c : v) norm = std::max(norm, rat_abs(c));
        CHECK(norm >= r->norm);
    }
}

TEST_CASE("successive minima basics") {
    auto sm = successive_minima(RatMatrix::identity(3), ConvexBody::cube(3, Rat(1)));
    REQUIRE(sm.lambda.size() == 3);
    for (const auto& l : sm.lambda) CHECK(l == 1);

    auto sm2 = successive_minima(diag({1, 4}), ConvexBody::cube(2, Rat(1)));
    CHECK(sm2.lambda[0] == 1);
    CHECK(sm2.lambda[1] == 4);
}

TEST_CASE("minkowski sandwich on random integer lattices") {
    std::mt19937 rng(21);
    int done = 0;
    while (done < 60) {
        int dim = 2 + static_cast<int>(rng() % 2);
        RatMatrix B(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                B.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
        Rat det = rat_abs(B.det());
        if (det == 0) continue;
        ++done;
        ConvexBody body;
        for (int i = 0; i < dim; ++i) {
            body.half_widths.push_back(make_rat(Int(1 + static_cast<long>(rng() % 4)),
                                                Int(1 + static_cast<long>(rng() % 3))));
            body.strict.push_back(false);
        }
        auto sm = successive_minima(B, body);
        Rat prod(1);
        for (const auto& l : sm.lambda) prod *= l;
        Rat vol = body.volume();
        Rat pow2 = rat_pow(Rat(2), dim);
        Rat fact(factorial(static_cast<unsigned long>(dim)));
        CHECK(prod * vol >= pow2 * det / fact);
        CHECK(prod * vol <= pow2 * det);
        // witnesses actually achieve their minima
        for (size_t i = 0; i < sm.witnesses.size(); ++i)
            CHECK(body.norm(B.apply_int(sm.witnesses[i])) == sm.lambda[i]);
    }
}

TEST_CASE("bad set indicator trivial cases") {
    // generous profile: the constant polynomial P = 1 solves the system
    ApproximationProfile prof;
    prof.n = 3;
    prof.m = 1;
    prof.psi = {PowerLaw{Rat(10), Rat(0)}, PowerLaw{Rat(10), Rat(0)}};
    prof.phi = {PowerLaw{Rat(2), Rat(0)}, PowerLaw{Rat(2), Rat(0)}};
    CHECK(bad_set_indicator({make_rat(1, 3), make_rat(1, 2)}, prof, Rat(4)));

    // tiny delta: no nonzero lattice vector fits
    ApproximationProfile tiny;
    tiny.n = 3;
    tiny.m = 1;
    tiny.psi = {PowerLaw{make_rat(1, 1000), Rat(0)}, PowerLaw{make_rat(1, 1000), Rat(0)}};
    tiny.phi = {PowerLaw{make_rat(1, 2), Rat(0)}, PowerLaw{make_rat(1, 2), Rat(0)}};
    CHECK(!bad_set_indicator({make_rat(1, 3), make_rat(1, 2)}, tiny, Rat(4)));
}

TEST_CASE("bad set indicator agrees with direct polynomial enumeration") {
    // n=2, m=1: 3x3 U matrices; direct oracle enumerates integer polynomials
    // a_0 + a_1 X + a_2 X^2 in the pullback box of the value constraints
    ApproximationProfile prof;
    prof.n = 2;
    prof.m = 1;
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        prof.psi = {PowerLaw{make_rat(1 + static_cast<long>(rng() % 6), 4), Rat(0)},
                    PowerLaw{make_rat(1 + static_cast<long>(rng() % 6), 4), Rat(0)}};
        prof.phi = {PowerLaw{Rat(1 + static_cast<long>(rng() % 3)), Rat(0)}};
        std::vector<Rat> f = {make_rat(static_cast<long>(rng() % 9) - 4, 3),
                              make_rat(static_cast<long>(rng() % 9) - 4, 5)};
        RatMatrix U0 = build_U(2, 0, f), U1 = build_U(2, 1, f);
        if (U0.det() == 0 || U1.det() == 0) continue;

        // direct system: |P(f_k)| < psi_k, |P'(f_h)| <= phi_2 for each h
        Rat psi0 = prof.psi[0].coeff, psi1 = prof.psi[1].coeff, phi2 = prof.phi[0].coeff;
        bool oracle_all_h = true;
        for (int h = 0; h <= 1 && oracle_all_h; ++h) {
            bool exists = false;
            for (long a2 = -12; a2 <= 12 && !exists; ++a2)
                for (long a1 = -12; a1 <= 12 && !exists; ++a1)
                    for (long a0 = -12; a0 <= 12 && !exists; ++a0) {
                        if (!a0 && !a1 && !a2) continue;
                        Rat p0 = Rat(a0) + Rat(a1) * f[0] + Rat(a2) * f[0] * f[0];
                        Rat p1 = Rat(a0) + Rat(a1) * f[1] + Rat(a2) * f[1] * f[1];
                        Rat dh = Rat(a1) + Rat(2 * a2) * f[h];
                        if (rat_abs(p0) < psi0 && rat_abs(p1) < psi1 && rat_abs(dh) <= phi2)
                            exists = true;
                    }
            oracle_all_h &= exists;
        }
        CHECK(bad_set_indicator(f, prof, Rat(2)) == oracle_all_h);
    }
}

TEST_CASE("measure estimate endpoints") {
    ManifoldChart chart;
    chart.n = 3;
    chart.m = 1;
    chart.d = 1;
    auto x = SparsePolynomial::variable(1, 0);
    chart.dependent = {x.pow(2) + SparsePolynomial::constant(1, Rat(2))};
    chart.domain = {{Rat(0), Rat(1)}};

    ApproximationProfile generous;
    generous.n = 3;
    generous.m = 1;
    generous.psi = {PowerLaw{Rat(50), Rat(0)}, PowerLaw{Rat(50), Rat(0)}};
    generous.phi = {PowerLaw{Rat(4), Rat(0)}, PowerLaw{Rat(4), Rat(0)}};
    auto est = measure_estimate(chart, generous, Rat(4), 50, 42, 2);
    CHECK(est.fraction == 1.0);

    ApproximationProfile tiny;
    tiny.n = 3;
    tiny.m = 1;
    tiny.psi = {PowerLaw{make_rat(1, 10000), Rat(0)}, PowerLaw{make_rat(1, 10000), Rat(0)}};
    tiny.phi = {PowerLaw{make_rat(1, 4), Rat(0)}, PowerLaw{make_rat(1, 4), Rat(0)}};
    auto est2 = measure_estimate(chart, tiny, Rat(4), 50, 42, 2);
    CHECK(est2.fraction == 0.0);
}

TEST_CASE("measure estimate is independent of worker count") {
    ManifoldChart chart;
    chart.n = 2;
    chart.m = 1;
    chart.d = 1;
    chart.dependent = {SparsePolynomial::variable(1, 0).pow(2) +
                       SparsePolynomial::constant(1, Rat(2))};
    chart.domain = {{Rat(0), Rat(1)}};
    ApproximationProfile prof;
    prof.n = 2;
    prof.m = 1;
    prof.psi = {PowerLaw{make_rat(1, 2), Rat(0)}, PowerLaw{make_rat(1, 2), Rat(0)}};
    prof.phi = {PowerLaw{Rat(2), Rat(0)}};
    auto a = measure_estimate(chart, prof, Rat(4), 64, 7, 1);
    auto b = measure_estimate(chart, prof, Rat(4), 64, 7, 2);
    CHECK(a.bad == b.bad);
}
