#include <catch2/catch_amalgamated.hpp>

#include "conjcount/partition.hpp"

using namespace conjcount;

TEST_CASE("partition invariants") {
    Partition p({3, 2, 2});
    CHECK(p.weight() == 7);
    CHECK(p.length() == 3);
    CHECK(p.part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition().weight() == 0);
}

TEST_CASE("enumerate_partitions weight mode") {
    auto zero = enumerate_partitions(0, 3, IndexMode::Weight);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Partition());

    auto ps = enumerate_partitions(2, 2, IndexMode::Weight);
    REQUIRE(ps.size() == 4);
    CHECK(ps[0] == Partition());
    CHECK(ps[1] == Partition({1}));
    CHECK(ps[2] == Partition({2}));
    CHECK(ps[3] == Partition({1, 1}));
}

TEST_CASE("enumerate_partitions box mode") {
    auto ps = enumerate_partitions(1, 2, IndexMode::Box);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0] == Partition());
    CHECK(ps[1] == Partition({1}));
    CHECK(ps[2] == Partition({1, 1}));
}

TEST_CASE("box index set cardinality is C(n+1, tau)") {
    for (int n = 1; n <= 6; ++n)
        for (int tau = 1; tau <= n + 1; ++tau) {
            auto s = make_schur_index_set(n, tau, IndexMode::Box);
            CHECK(Int(static_cast<long>(s.partitions.size())) ==
                  binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(tau)));
        }
}

TEST_CASE("column set bijection round-trips") {
    int n = 5, tau = 3;
    for (const auto& J : index_subsets(n, tau)) {
        Partition lam = partition_from_columns(J);
        CHECK(lam.part(0) <= n + 1 - tau);
        CHECK(columns_from_partition(lam, tau) == J);
    }
}

TEST_CASE("canonical order is graded then lex descending") {
    auto ps = enumerate_partitions(3, 3, IndexMode::Weight);
    for (size_t i = 0; i + 1 < ps.size(); ++i) {
        CHECK(partition_order_less(ps[i], ps[i + 1]));
        CHECK(ps[i].weight() <= ps[i + 1].weight());
    }
    // weight-3 block: (3) before (2,1) before (1,1,1)
    auto w3 = std::vector<Partition>(ps.end() - 3, ps.end());
    CHECK(w3[0] == Partition({3}));
    CHECK(w3[1] == Partition({2, 1}));
    CHECK(w3[2] == Partition({1, 1, 1}));
}
