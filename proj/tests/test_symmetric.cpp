#include <catch2/catch_amalgamated.hpp>

#include "conjcount/symmetric.hpp"

#include <random>

using namespace conjcount;

namespace {
SparsePolynomial T(int arity, int i) { return SparsePolynomial::variable(arity, i); }
} // namespace

TEST_CASE("alternant examples") {
    // empty partition: the Vandermonde-type determinant
    CHECK(alternant(Partition(), 2) == T(2, 0) - T(2, 1));
    // (2,1) at tau=2: T0^3 T1 - T0 T1^3
    auto a = alternant(Partition({2, 1}), 2);
    CHECK(a == T(2, 0).pow(3) * T(2, 1) - T(2, 0) * T(2, 1).pow(3));
    // 1x1 case
    CHECK(alternant(Partition({1}), 1) == T(1, 0));
    CHECK_THROWS_AS(alternant(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("alternant is antisymmetric") {
    auto a = alternant(Partition({3, 1}), 3);
    for (int i = 0; i + 1 < 3; ++i) CHECK(a.swap_vars(i, i + 1) == -a);
}

TEST_CASE("schur examples") {
    CHECK(schur(Partition({1}), 2) == T(2, 0) + T(2, 1));
    CHECK(schur(Partition({2, 1}), 2) == T(2, 0).pow(2) * T(2, 1) + T(2, 0) * T(2, 1).pow(2));
    CHECK(schur(Partition({1, 1, 1}), 2).is_zero());
    CHECK(schur(Partition(), 3) == SparsePolynomial::constant(3, 1));
}

TEST_CASE("schur is symmetric and homogeneous") {
    for (int tau = 1; tau <= 3; ++tau)
        for (const auto& lam : enumerate_partitions(4, tau, IndexMode::Weight)) {
            auto s = schur(lam, tau);
            if (lam.weight() == 0) continue;
            CHECK(s.is_symmetric());
            int d = -2;
            CHECK(s.is_homogeneous(&d));
            CHECK(d == lam.weight());
        }
}

TEST_CASE("schur stability under trailing zeros") {
    for (const auto& lam : enumerate_partitions(4, 2, IndexMode::Weight)) {
        if (lam.length() > 2) continue;
        auto s3 = schur(lam, 3);
        auto s2 = schur(lam, std::max(lam.length(), 1));
        CHECK(s3.restrict_prefix(std::max(lam.length(), 1)) == s2);
    }
}

TEST_CASE("monomial symmetric examples") {
    CHECK(monomial_symmetric(Partition({2, 1}), 2) ==
          T(2, 0).pow(2) * T(2, 1) + T(2, 0) * T(2, 1).pow(2));
    CHECK(monomial_symmetric(Partition({1}), 3) == T(3, 0) + T(3, 1) + T(3, 2));
    CHECK(monomial_symmetric(Partition({1, 1}), 2) == T(2, 0) * T(2, 1));
}

TEST_CASE("elementary symmetric examples") {
    CHECK(elementary_symmetric(2, 3) ==
          T(3, 0) * T(3, 1) + T(3, 0) * T(3, 2) + T(3, 1) * T(3, 2));
    CHECK(elementary_symmetric(0, 2) == SparsePolynomial::constant(2, 1));
    CHECK(elementary_symmetric(2, 2) == T(2, 0) * T(2, 1));
    CHECK_THROWS_AS(elementary_symmetric(3, 2), std::invalid_argument);
}

TEST_CASE("schur map evaluation") {
    auto v = schur_map_eval(2, 2, {Rat(0), Rat(1)}, IndexMode::Box);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1);
    CHECK(v[1] == 1);
    CHECK(v[2] == 0);

    auto z = schur_map_eval(3, 2, {Rat(0), Rat(0)}, IndexMode::Weight);
    CHECK(z[0] == 1);
    for (size_t i = 1; i < z.size(); ++i) CHECK(z[i] == 0);

    auto w = schur_map_eval(3, 1, {Rat(2)}, IndexMode::Weight);
    REQUIRE(w.size() == 4);
    CHECK(w[0] == 1);
    CHECK(w[1] == 2);
    CHECK(w[2] == 4);
    CHECK(w[3] == 8);
}

TEST_CASE("schur map first component is one") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int tau = 1 + trial % 3;
        int n = tau + rng() % 3;
        std::vector<Rat> pt;
        for (int i = 0; i < tau; ++i)
            pt.push_back(make_rat(Int(static_cast<long>(rng() % 19) - 9),
                                  Int(static_cast<long>(1 + rng() % 7))));
        auto v = schur_map_eval(n, tau, pt, trial % 2 ? IndexMode::Box : IndexMode::Weight);
        CHECK(v[0] == 1);
    }
}

TEST_CASE("schur basis expansion examples") {
    auto e2 = elementary_symmetric(2, 2);
    auto c = expand_in_schur_basis(e2, 2, 2);
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == Partition({1, 1}));
    CHECK(c[0].second == 1);

    CHECK(expand_in_schur_basis(SparsePolynomial(2), 2, 2).empty());

    auto m2 = monomial_symmetric(Partition({2}), 2);
    auto cm = expand_in_schur_basis(m2, 2, 2);
    REQUIRE(cm.size() == 2);
    CHECK(cm[0].first == Partition({2}));
    CHECK(cm[0].second == 1);
    CHECK(cm[1].first == Partition({1, 1}));
    CHECK(cm[1].second == -1);

    CHECK_THROWS_AS(expand_in_schur_basis(T(2, 0), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(expand_in_schur_basis(e2, 1, 2), std::invalid_argument);
}

TEST_CASE("schur expansion round-trips random symmetric polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int tau = 2 + trial % 2;
        int k = 3 + trial % 2;
        // random symmetric input built from monomial symmetric polynomials
        SparsePolynomial p(tau);
        for (const auto& lam : enumerate_partitions(k, tau, IndexMode::Weight)) {
            long num = static_cast<long>(rng() % 7) - 3;
            if (num) p += monomial_symmetric(lam, tau) * Rat(num);
        }
        auto coeffs = expand_in_schur_basis(p, k, tau);
        SparsePolynomial back(tau);
        for (const auto& [lam, c] : coeffs) back += schur(lam, tau) * c;
        CHECK(back == p);
    }
}
