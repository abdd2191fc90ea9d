#include <catch2/catch_amalgamated.hpp>

#include "conjcount/irreducible.hpp"
#include "conjcount/tailored.hpp"

using namespace conjcount;

namespace {

// the acceptance profile family at gamma: psi_0 = Q^{gamma-n-1+...}, built
// for the curve (x, x^2+2) with n = 3, m = 1, d = 1
ApproximationProfile curve_profile(const Rat& gamma) {
    ApproximationProfile p;
    p.n = 3;
    p.m = 1;
    p.psi = {PowerLaw{Rat(1), Rat(gamma - 3)}, PowerLaw{Rat(1), Rat(1 - gamma)}};
    p.phi = {PowerLaw{Rat(1), Rat(1)}, PowerLaw{Rat(1), Rat(1)}};
    return p;
}

std::vector<Rat> curve_point(const Rat& x) { return {x, x * x + 2}; }

} // namespace

TEST_CASE("bertrand prime") {
    CHECK(bertrand_prime(Rat(10)) == 11);
    CHECK(bertrand_prime(Rat(100)) == 101);
    CHECK(bertrand_prime(Rat(1)) == 2); // degenerate interval widens
    CHECK(bertrand_prime(make_rat(5, 2)) == 3);
    Int p = bertrand_prime(Rat(1000000));
    CHECK(Rat(p) > 1000000);
    CHECK(Rat(p) < 2000000);
}

TEST_CASE("eisenstein checks") {
    CHECK(is_eisenstein(IntPoly::from_longs({2, 2, 0, 1}), Int(2)));  // X^3+2X+2
    CHECK(!is_eisenstein(IntPoly::from_longs({4, 0, 1}), Int(2)));    // p^2 | a_0
    CHECK(!is_eisenstein(IntPoly::from_longs({2, 2, 2}), Int(2)));    // p | a_n
}

TEST_CASE("eisenstein twist on the identity basis") {
    // A = identity, p = 2: s_l = b + 2 r_l mod 4, Eisenstein at 2
    int n1 = 4;
    std::vector<std::vector<Int>> cols(n1, std::vector<Int>(n1, Int(0)));
    for (int i = 0; i < n1; ++i) cols[i][i] = 1;
    auto tw = eisenstein_twist(cols, Int(2));
    REQUIRE(tw.polys.size() == 4);
    for (const auto& p : tw.polys) {
        CHECK(p.degree() == 3);
        CHECK(is_eisenstein(p, Int(2)));
    }
    // eta entries bounded by p^2
    for (const auto& eta : tw.eta)
        for (const auto& e : eta) CHECK(abs(e) <= 4);
    // outputs independent over Q
    RatMatrix S(n1, n1);
    for (int l = 0; l < n1; ++l)
        for (int i = 0; i < n1; ++i) S.at(i, l) = Rat(tw.polys[l].coeff(i));
    CHECK(S.rank() == n1);
}

TEST_CASE("minkowski solutions on a toy instance") {
    // generous constant profile: standard basis vectors land inside the box
    ApproximationProfile prof;
    prof.n = 2;
    prof.m = 0;
    prof.psi = {PowerLaw{Rat(4), Rat(0)}};
    prof.phi = {PowerLaw{Rat(4), Rat(0)}, PowerLaw{Rat(4), Rat(0)}};
    auto cols = minkowski_solutions({make_rat(1, 2)}, prof, Rat(2), Rat(2));
    REQUIRE(cols.size() == 3);
    // integer, independent, inside deltaN K
    std::vector<std::vector<Int>> as = cols;
    RatMatrix A(3, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) A.at(i, j) = Rat(as[j][i]);
    CHECK(rat_abs(A.det()) >= 1);

    // brute-force box oracle: witnesses must match the best attainable norms
    RatMatrix M = build_M(2, {make_rat(1, 2)});
    ConvexBody body;
    body.half_widths = prof.box_widths(Rat(2));
    body.strict = {true, false, false};
    auto sm = successive_minima(M, body);
    std::vector<Rat> oracle_norms;
    for (long a0 = -8; a0 <= 8; ++a0)
        for (long a1 = -8; a1 <= 8; ++a1)
            for (long a2 = -8; a2 <= 8; ++a2) {
                if (!a0 && !a1 && !a2) continue;
                auto v = M.apply_int({Int(a0), Int(a1), Int(a2)});
                oracle_norms.push_back(body.norm(v));
            }
    std::sort(oracle_norms.begin(), oracle_norms.end());
    CHECK(sm.lambda[0] == oracle_norms[0]);
}

TEST_CASE("construct_tailored on the acceptance curve") {
    auto prof = curve_profile(make_rat(1, 2));
    TailoredConstants driver;
    driver.delta_min = 1;
    driver.delta_max = 1;
    driver.delta0 = make_rat(1, 4);
    driver.c_f = 1;

    auto res = construct_tailored(curve_point(make_rat(229, 512)), prof, Rat(1000), driver);
    REQUIRE(res.ok());
    REQUIRE(res.certificates.size() == 4);
    for (const auto& cert : res.certificates) {
        CHECK(cert.eisenstein_ok);
        CHECK(cert.bounds_ok);
        CHECK(cert.poly.degree() == 3);
        CHECK(is_irreducible(cert.poly)); // independent of the Eisenstein route
    }
    // certified height bound H(P) <= c_y * phi(Q)
    auto widths = prof.box_widths(Rat(1000));
    for (const auto& cert : res.certificates)
        CHECK(Rat(cert.poly.height()) <= res.constants.c_y * widths[3]);
}

TEST_CASE("tailored constants formulas") {
    TailoredConstants c;
    c.delta_min = 1;
    c.delta_max = 1;
    c.delta0 = make_rat(1, 2);
    c.c_f = 2;
    c.derive(3, Rat(2));
    CHECK(c.deltaN == 16);                    // 2 / (1/2)^3
    CHECK(c.c_prime == Rat(16) * rat_pow(Rat(16), 4));
    CHECK(c.c_y == Rat(16) * c.deltaN * c.c_prime * c.c_prime / 4); // 4(n+1) = 16
    // the two printed forms of c_y agree identically
    CHECK(c.c_y == c.c_y_alt);
    CHECK(c.kappa == c.c_y / 2);
}

TEST_CASE("conjugate point extraction") {
    IntPoly p = IntPoly::from_longs({-2, 0, 1}); // X^2 - 2
    auto enc = conjugate_points_from_polynomial(p, {make_rat(14, 10)}, {make_rat(1, 10)}, 12);
    REQUIRE(enc.size() == 1);
    REQUIRE(enc[0].status == RootEnclosure::Status::Ok);
    CHECK(enc[0].iv.lo * enc[0].iv.lo <= 2);
    CHECK(enc[0].iv.hi * enc[0].iv.hi >= 2);
    CHECK(enc[0].iv.width() <= make_rat(1, 10) / rat_pow(Rat(2), 12));

    IntPoly noreal = IntPoly::from_longs({1, 0, 1}); // X^2 + 1
    auto enc2 = conjugate_points_from_polynomial(noreal, {Rat(0)}, {Rat(5)});
    CHECK(enc2[0].status == RootEnclosure::Status::NoSignChange);

    IntPoly ident = IntPoly::from_longs({0, 1}); // X
    auto enc3 = conjugate_points_from_polynomial(ident, {make_rat(1, 100)}, {make_rat(1, 10)});
    REQUIRE(enc3[0].status == RootEnclosure::Status::Ok);
    CHECK(enc3[0].iv.contains(Rat(0)));
}

TEST_CASE("distinct disjoint targets give distinct roots") {
    auto prof = curve_profile(make_rat(1, 2));
    TailoredConstants driver;
    driver.delta0 = make_rat(1, 4);
    auto res = construct_tailored(curve_point(make_rat(311, 1024)), prof, Rat(1000), driver);
    REQUIRE(res.ok());
    auto f = curve_point(make_rat(311, 1024));
    // small disjoint radii around the two target values
    Rat r = make_rat(1, 4);
    REQUIRE(f[1] - f[0] > 2 * r);
    for (const auto& cert : res.certificates) {
        auto enc = conjugate_points_from_polynomial(cert.poly, f, {r, r}, 20);
        if (enc[0].status == RootEnclosure::Status::Ok &&
            enc[1].status == RootEnclosure::Status::Ok)
            CHECK(enc[0].iv.disjoint(enc[1].iv));
    }
}
