#include <gtest/gtest.h>

#include <random>

#include <majority/rational_construct.hpp>
#include <majority/zonemap.hpp>

#include "support/oracles.hpp"

using namespace majority;

namespace {

zone_map zones(int n, std::initializer_list<std::pair<subset, int>> entries) {
    zone_map z(n);
    for (auto [s, v] : entries) z.set(s, v);
    return z;
}

// The three-set family with one-way cycle under the (1/2, 99/100) interval condition.
set_family interval_cycle_family() {
    set_family f;
    f.n = 3;
    f.universe_size = 10;
    f.members = {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 6, 7, 8, 9}, {0, 1, 2, 6, 7}};
    return f;
}

}  // namespace

TEST(ZoneMap, SparseStorageDropsZeros) {
    zone_map z(3);
    z.set(make_subset({1, 2}), 4);
    z.set(make_subset({1, 2}), 0);
    EXPECT_TRUE(z.empty());
    EXPECT_THROW(z.set(0, 1), error);
    EXPECT_THROW(z.set(make_subset({4}), 1), error);
    EXPECT_THROW(z.set(make_subset({1}), -1), error);
}

TEST(SetSize, BaseSetsAllOnes) {
    auto z = base_zones(4, 1, 2);
    EXPECT_EQ(set_size(z, 1), 8);  // p q^(n-1)
}

TEST(SetSize, SingletonAndMissing) {
    auto z = zones(2, {{make_subset({1}), 5}});
    EXPECT_EQ(set_size(z, 1), 5);
    EXPECT_EQ(set_size(z, 2), 0);
    EXPECT_THROW(set_size(z, 3), error);
    EXPECT_THROW(set_size(z, 0), error);
}

TEST(SetSize, SumsSupersets) {
    auto z = zones(2, {{make_subset({1, 2}), 3}, {make_subset({1}), 2}});
    EXPECT_EQ(set_size(z, 1), 5);
}

TEST(PairIntersection, Basics) {
    EXPECT_EQ(pair_intersection(base_zones(4, 1, 2), 1, 2), 4);  // p^2 q^(n-2)
    EXPECT_EQ(pair_intersection(zones(2, {{make_subset({1}), 3}, {make_subset({2}), 3}}), 1, 2), 0);
    EXPECT_EQ(pair_intersection(zones(3, {{make_subset({1, 2, 3}), 7}}), 1, 3), 7);
    EXPECT_THROW(pair_intersection(base_zones(2, 1, 2), 1, 1), error);
    EXPECT_THROW(pair_intersection(base_zones(2, 1, 2), 1, 3), error);
}

TEST(TransferPrivate, EmptiesWholeZone) {
    auto z = zones(4, {{make_subset({1, 2}), 13}, {make_subset({1}), 2}, {make_subset({2}), 4}});
    auto t = transfer_private(z, 1, 2, 13);
    EXPECT_EQ(t[make_subset({1, 2})], 0);
    EXPECT_EQ(t[make_subset({1})], 15);
    EXPECT_EQ(t[make_subset({2})], 17);
    EXPECT_EQ(z[make_subset({1, 2})], 13);  // input untouched
}

TEST(TransferPrivate, ZeroIsIdentity) {
    auto z = base_zones(3, 1, 2);
    EXPECT_EQ(transfer_private(z, 1, 3, 0), z);
}

TEST(TransferPrivate, PartialMove) {
    auto z = zones(4, {{make_subset({1, 3}), 13}});
    EXPECT_EQ(transfer_private(z, 1, 3, 4)[make_subset({1, 3})], 9);
}

TEST(TransferPrivate, InsufficientZone) {
    auto z = zones(3, {{make_subset({1, 3}), 2}});
    try {
        transfer_private(z, 1, 3, 3);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), error_code::insufficient_zone);
    }
}

TEST(TransferPrivate, PreservesSizesAndShiftsOnlyThatPair) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto z = oracle::random_zone_map(rng, 4, 20);
        z.add(make_subset({2, 4}), 5);
        big_int c = std::uniform_int_distribution<int>(0, 5)(rng);
        auto t = transfer_private(z, 2, 4, c);
        for (int k = 1; k <= 4; ++k) EXPECT_EQ(set_size(t, k), set_size(z, k));
        EXPECT_EQ(total_points(t), total_points(z) + c);
        for (int i = 1; i <= 4; ++i) {
            for (int j = i + 1; j <= 4; ++j) {
                big_int expected = pair_intersection(z, i, j) - ((i == 2 && j == 4) ? c : big_int(0));
                EXPECT_EQ(pair_intersection(t, i, j), expected);
            }
        }
    }
}

TEST(InducedDigraph, TwoSetExampleMatchesCounting) {
    auto z = zones(2, {{make_subset({1, 2}), 3}, {make_subset({1}), 1}, {make_subset({2}), 5}});
    auto g = induced_digraph(z, rational(1, 2));
    EXPECT_EQ(g, digraph(2, {{1, 2}}));
    EXPECT_EQ(oracle::count_induced(materialize(z), 1, 2), g);
}

TEST(InducedDigraph, EmptySetsHaveNoEdges) {
    auto z = zones(3, {{make_subset({1, 2}), 3}});
    auto g = induced_digraph(z, rational(1, 3));
    EXPECT_FALSE(g.has_edge(3, 1));
    EXPECT_FALSE(g.has_edge(1, 3));
    EXPECT_TRUE(g.has_edge(1, 2));
    EXPECT_TRUE(g.has_edge(2, 1));
}

TEST(InducedDigraph, StrictAtBoundary) {
    // |A_1| = 2, |A_1 ∩ A_2| = 1: exactly half, so no edge 1 -> 2.
    auto z = zones(2, {{make_subset({1, 2}), 1}, {make_subset({1}), 1}});
    EXPECT_FALSE(induced_digraph(z, rational(1, 2)).has_edge(1, 2));
    EXPECT_TRUE(induced_digraph(z, rational(1, 2)).has_edge(2, 1));
}

TEST(InducedDigraph, AgreesWithPointCountingOnRandomMaps) {
    std::mt19937 rng(2024);
    const std::pair<int, int> thresholds[] = {{1, 2}, {1, 3}, {2, 3}, {3, 5}, {7, 10}};
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 5)(rng);
        auto z = oracle::random_zone_map(rng, n, 20);
        auto [p, q] = thresholds[trial % 5];
        ASSERT_EQ(induced_digraph(z, rational(p, q)), oracle::count_induced(materialize(z), p, q));
    }
}

TEST(InducedDigraph, ScaleInvariant) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto z = oracle::random_zone_map(rng, 4, 20);
        zone_map scaled(4);
        int k = std::uniform_int_distribution<int>(2, 9)(rng);
        for (const auto& [s, v] : z.entries()) scaled.set(s, v * k);
        EXPECT_EQ(induced_digraph(z, rational(3, 5)), induced_digraph(scaled, rational(3, 5)));
    }
}

TEST(InducedDigraph, NeverHasOneWayCycle) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        auto z = oracle::random_zone_map(rng, 5, 20);
        rational alpha(std::uniform_int_distribution<int>(1, 9)(rng), 10);
        EXPECT_FALSE(find_one_way_cycle(induced_digraph(z, alpha)));
    }
}

TEST(InducedIntervalDigraph, ThreeSetOneWayCycle) {
    auto z = from_set_family(interval_cycle_family());
    auto g = induced_interval_digraph(z, rational(1, 2), rational(99, 100));
    EXPECT_EQ(g, digraph(3, {{1, 2}, {2, 3}, {3, 1}}));
    EXPECT_TRUE(find_one_way_cycle(g));
}

TEST(InducedIntervalDigraph, IdenticalSetsHaveNoEdges) {
    auto z = zones(3, {{make_subset({1, 2, 3}), 6}});
    EXPECT_EQ(induced_interval_digraph(z, rational(1, 2), rational(9, 10)).edge_count(), 0u);
}

TEST(InducedIntervalDigraph, DisjointSetsHaveNoEdges) {
    auto z = zones(2, {{make_subset({1}), 4}, {make_subset({2}), 4}});
    EXPECT_EQ(induced_interval_digraph(z, rational(1, 2), rational(999, 1000)).edge_count(), 0u);
}

TEST(InducedIntervalDigraph, RejectsEmptyInterval) {
    auto z = base_zones(2, 1, 2);
    EXPECT_THROW(induced_interval_digraph(z, rational(1, 2), rational(1, 2)), error);
    EXPECT_THROW(induced_interval_digraph(z, rational(2, 3), rational(1, 2)), error);
}

TEST(Materialize, SingleZone) {
    auto f = materialize(zones(1, {{make_subset({1}), 2}}));
    EXPECT_EQ(f.universe_size, 2u);
    EXPECT_EQ(f.members[0], (std::vector<std::uint64_t>{0, 1}));
}

TEST(Materialize, BaseSetsForTwo) {
    auto f = materialize(base_zones(2, 1, 2));
    EXPECT_EQ(f.members[0].size(), 2u);
    EXPECT_EQ(f.members[1].size(), 2u);
    EXPECT_EQ(oracle::common_points(f.members[0], f.members[1]), 1u);
}

TEST(Materialize, RoundTripsThroughPointSets) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 5)(rng);
        auto z = n == 0 ? zone_map(0) : oracle::random_zone_map(rng, n, 20);
        auto f = materialize(z);
        EXPECT_EQ(f.universe_size, total_points(z).convert_to<std::uint64_t>());
        EXPECT_EQ(from_set_family(f), z);
    }
}

TEST(FromSetFamily, IntervalCycleZones) {
    // Hand count: 0,1,2 in all three; 3 in u,v; 4,5 only u; 6,7 in v,w; 8,9 only v.
    auto z = from_set_family(interval_cycle_family());
    EXPECT_EQ(z[make_subset({1, 2, 3})], 3);
    EXPECT_EQ(z[make_subset({1, 2})], 1);
    EXPECT_EQ(z[make_subset({2, 3})], 2);
    EXPECT_EQ(z[make_subset({1})], 2);
    EXPECT_EQ(z[make_subset({2})], 2);
    EXPECT_EQ(z[make_subset({3})], 0);
    EXPECT_EQ(z[make_subset({1, 3})], 0);
    EXPECT_EQ(total_points(z), 10);
}

TEST(FromSetFamily, DisjointAndEmpty) {
    set_family f{2, 3, {{0}, {1, 2}}};
    auto z = from_set_family(f);
    EXPECT_EQ(z.entries().size(), 2u);
    EXPECT_EQ(z[make_subset({2})], 2);
    EXPECT_TRUE(from_set_family(set_family{}).empty());
}
