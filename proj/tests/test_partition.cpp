#include <catch2/catch_amalgamated.hpp>

#include "kcross/partition.hpp"
#include "oracle.hpp"

using kcross::Arc;
using kcross::ArcSet;
using kcross::Indexing;
using kcross::SetPartition;

namespace {
SetPartition one_based(int n, std::vector<std::vector<int>> blocks) {
    return kcross::make_partition(n, std::move(blocks), Indexing::one_based);
}
SetPartition zero_based(int n, std::vector<std::vector<int>> blocks) {
    return kcross::make_partition(n, std::move(blocks), Indexing::zero_based);
}
}  // namespace

TEST_CASE("make_partition canonicalizes and counts blocks") {
    SetPartition p = one_based(6, {{4}, {2, 5, 6}, {3, 1}});
    CHECK(p.block_count() == 3);
    CHECK(p.blocks == std::vector<std::vector<int>>{{1, 3}, {2, 5, 6}, {4}});
}

TEST_CASE("empty partition") {
    SetPartition p = one_based(0, {});
    CHECK(p.n == 0);
    CHECK(p.block_count() == 0);
    CHECK(kcross::arcs_of(p).arcs.empty());
}

TEST_CASE("make_partition rejects malformed input") {
    CHECK_THROWS_AS(one_based(3, {{1, 2}, {2, 3}}), kcross::validation_error);
    CHECK_THROWS_AS(one_based(3, {{1, 1, 2}, {3}}), kcross::validation_error);
    CHECK_THROWS_AS(one_based(3, {{1, 2}}), kcross::validation_error);       // gap
    CHECK_THROWS_AS(one_based(2, {{1, 2, 3}}), kcross::validation_error);    // out of range
    CHECK_THROWS_AS(one_based(2, {{1, 2}, {}}), kcross::validation_error);   // empty block
    CHECK_THROWS_AS(zero_based(2, {{1, 2}}), kcross::validation_error);      // wrong convention
    CHECK_THROWS_WITH(one_based(3, {{1, 2}, {2, 3}}),
                      Catch::Matchers::ContainsSubstring("element 2"));
}

TEST_CASE("arc diagram of a partition") {
    SetPartition p = one_based(6, {{1, 3}, {2, 5, 6}, {4}});
    CHECK(kcross::arcs_of(p).arcs ==
          std::vector<Arc>{{1, 3}, {2, 5}, {4, 4}, {5, 6}});

    SetPartition loops = one_based(3, {{1}, {2}, {3}});
    CHECK(kcross::arcs_of(loops).arcs == std::vector<Arc>{{1, 1}, {2, 2}, {3, 3}});

    SetPartition big = zero_based(
        17, {{0, 4, 8, 15}, {1, 3, 10}, {2, 11}, {5, 16}, {6, 13}, {7, 9, 12, 14}});
    CHECK(kcross::arcs_of(big).arcs ==
          std::vector<Arc>{{0, 4}, {1, 3}, {2, 11}, {3, 10}, {4, 8}, {5, 16},
                           {6, 13}, {7, 9}, {8, 15}, {9, 12}, {12, 14}});
}

TEST_CASE("partition_from_arcs inverts arcs_of") {
    ArcSet a{6, Indexing::one_based, {{1, 3}, {2, 5}, {5, 6}, {4, 4}}};
    CHECK(kcross::partition_from_arcs(a) == one_based(6, {{1, 3}, {2, 5, 6}, {4}}));

    ArcSet empty{3, Indexing::one_based, {}};
    CHECK(kcross::partition_from_arcs(empty) == one_based(3, {{1}, {2}, {3}}));
}

TEST_CASE("partition_from_arcs rejects invalid arc sets") {
    CHECK_THROWS_AS(kcross::partition_from_arcs(
                        ArcSet{3, Indexing::one_based, {{1, 3}, {2, 3}}}),
                    kcross::validation_error);
    CHECK_THROWS_AS(kcross::partition_from_arcs(
                        ArcSet{3, Indexing::one_based, {{1, 2}, {2, 2}}}),
                    kcross::validation_error);
    CHECK_THROWS_AS(kcross::partition_from_arcs(
                        ArcSet{3, Indexing::one_based, {{1, 2}, {1, 3}}}),
                    kcross::validation_error);
    CHECK_THROWS_AS(kcross::partition_from_arcs(
                        ArcSet{3, Indexing::one_based, {{2, 1}}}),
                    kcross::validation_error);
    CHECK_THROWS_AS(kcross::partition_from_arcs(
                        ArcSet{2, Indexing::one_based, {{1, 3}}}),
                    kcross::validation_error);
}

TEST_CASE("round trip over all partitions up to n = 9") {
    for (int n = 0; n <= 9; ++n) {
        for (const auto& p : oracle::all_partitions(n, Indexing::one_based)) {
            CHECK(kcross::partition_from_arcs(kcross::arcs_of(p)) == p);
        }
    }
    // spot-check the zero-based convention as well
    for (const auto& p : oracle::all_partitions(5, Indexing::zero_based))
        CHECK(kcross::partition_from_arcs(kcross::arcs_of(p)) == p);
}

TEST_CASE("arc count identities") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& p : oracle::all_partitions(n, Indexing::one_based)) {
            ArcSet a = kcross::arcs_of(p);
            int singletons = 0;
            for (const auto& b : p.blocks)
                if (b.size() == 1) ++singletons;
            CHECK(kcross::non_loop_arc_count(a) == n - p.block_count());
            CHECK(static_cast<int>(a.arcs.size()) ==
                  kcross::non_loop_arc_count(a) + singletons);
        }
    }
}

TEST_CASE("convention conversion shifts by one") {
    SetPartition p = one_based(4, {{1, 3}, {2}, {4}});
    SetPartition z = kcross::to_zero_based(p);
    CHECK(z.convention == Indexing::zero_based);
    CHECK(z.blocks == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
    CHECK(kcross::to_one_based(z) == p);
    CHECK(kcross::to_zero_based(z) == z);
}

TEST_CASE("reflection") {
    SetPartition p = one_based(5, {{1, 4}, {2}, {3, 5}});
    CHECK(kcross::reflected(p) == one_based(5, {{1, 3}, {2, 5}, {4}}));
    CHECK(kcross::reflected(kcross::reflected(p)) == p);
}
