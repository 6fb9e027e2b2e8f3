#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kcross/enumerate.hpp"
#include "oracle.hpp"

using kcross::BigNat;
using kcross::Indexing;
using kcross::MotzkinPath;
using kcross::PartitionClass;
using kcross::Polynomial;
using kcross::SetPartition;

namespace {
Polynomial poly(std::vector<BigNat> coeffs) { return Polynomial(std::move(coeffs)); }
}  // namespace

TEST_CASE("partition enumeration counts and order") {
    long count = 0;
    kcross::for_each_partition(0, Indexing::one_based, [&](const SetPartition& p) {
        CHECK(p.n == 0);
        ++count;
    });
    CHECK(count == 1);

    std::vector<std::vector<std::vector<int>>> seen;
    kcross::for_each_partition(3, Indexing::one_based,
                               [&](const SetPartition& p) { seen.push_back(p.blocks); });
    // lexicographic order of the growth strings 000,001,010,011,012
    CHECK(seen == std::vector<std::vector<std::vector<int>>>{{{1, 2, 3}},
                                                             {{1, 2}, {3}},
                                                             {{1, 3}, {2}},
                                                             {{1}, {2, 3}},
                                                             {{1}, {2}, {3}}});

    for (int n = 0; n <= 10; ++n) {
        long c = 0;
        kcross::for_each_partition(n, Indexing::one_based, [&](const SetPartition&) { ++c; });
        CHECK(BigNat(static_cast<std::uint64_t>(c)) == kcross::bell(n));
    }
}

TEST_CASE("enumeration agrees with the insertion oracle") {
    for (int n = 0; n <= 7; ++n) {
        std::set<std::vector<std::vector<int>>> rgs, ins;
        kcross::for_each_partition(n, Indexing::one_based,
                                   [&](const SetPartition& p) { rgs.insert(p.blocks); });
        for (const auto& p : oracle::all_partitions(n, Indexing::one_based))
            ins.insert(p.blocks);
        CHECK(rgs == ins);
    }
}

TEST_CASE("sharded enumeration is exact and deterministic") {
    for (int jobs : {2, 3, 4, 7}) {
        for (int n : {0, 1, 5, 8}) {
            CHECK(kcross::class_poly(n, 3, PartitionClass::nc, jobs) ==
                  kcross::class_poly(n, 3, PartitionClass::nc));
        }
        CHECK(kcross::class_poly(9, 2, PartitionClass::nonnest_enh, jobs) ==
              kcross::class_poly(9, 2, PartitionClass::nonnest_enh));
    }
}

TEST_CASE("class polynomials on pinned values") {
    CHECK(kcross::class_poly(5, 2, PartitionClass::nc) ==
          poly({0, 1, 10, 20, 10, 1}));  // the Narayana row for n = 5
    CHECK(kcross::class_poly(3, 2, PartitionClass::nw) == poly({0, 0, 3, 1}));
    for (int k = 2; k <= 4; ++k) {
        CHECK(kcross::class_poly(0, k, PartitionClass::nc) == poly({1}));
        CHECK(kcross::class_poly(0, k, PartitionClass::nw) == poly({1}));
        CHECK(kcross::class_poly(0, k, PartitionClass::bnw) == poly({1}));
        CHECK(kcross::class_poly(0, k, PartitionClass::nonnest_enh) == poly({1}));
    }
    CHECK_THROWS_AS(kcross::class_poly(3, 1, PartitionClass::nc), kcross::validation_error);
}

TEST_CASE("catalan and motzkin cardinalities") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(kcross::class_poly(n, 2, PartitionClass::nc).value_at_one() ==
              kcross::catalan(n));
        CHECK(kcross::class_poly(n, 2, PartitionClass::nw).value_at_one() ==
              kcross::motzkin(n));
    }
}

TEST_CASE("narayana polynomials are palindromic and count arcs") {
    for (int n = 1; n <= 9; ++n) {
        Polynomial narayana = kcross::class_poly(n, 2, PartitionClass::nc);
        CHECK(narayana.palindromic());
        // sum of t^{|P|} equals sum of t^{arc_2(P)+1} over the same class
        Polynomial by_arcs;
        kcross::for_each_partition(n, Indexing::one_based, [&](const SetPartition& p) {
            if (!kcross::in_class(p, 2, PartitionClass::nc)) return;
            by_arcs.add_term(kcross::non_loop_arc_count(kcross::arcs_of(p)) + 1, 1);
        });
        CHECK(by_arcs == narayana);
    }
}

TEST_CASE("euler transform on the hand-checked case") {
    kcross::IdentityReport r = kcross::verify_euler(3, 2);
    CHECK(r.equal);
    CHECK(r.lhs == poly({0, 1, 6, 6, 1}));
    CHECK(r.rhs == r.lhs);
    CHECK_FALSE(r.first_mismatch.has_value());
}

TEST_CASE("euler transform across the desk-scale grid") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 2; k <= 6; ++k) {
            kcross::IdentityReport r = kcross::verify_euler(n, k);
            INFO("n=" << n << " k=" << k);
            CHECK(r.equal);
        }
}

TEST_CASE("euler transform via the bijection double count") {
    // NC_{n+1}^{(k)}(t) recomputed as sum over BNW of t^{|phi(P)|}
    for (int n = 1; n <= 7; ++n)
        for (int k = 2; k <= 4; ++k) {
            Polynomial direct = kcross::class_poly(n + 1, k, PartitionClass::nc);
            Polynomial via_phi;
            kcross::for_each_partition(n + 1, Indexing::zero_based,
                                       [&](const SetPartition& p) {
                                           if (!kcross::in_class(p, k, PartitionClass::bnw))
                                               return;
                                           via_phi.add_term(
                                               kcross::phi(p, k).partition.block_count(), 1);
                                       });
            CHECK(via_phi == direct);
        }
}

TEST_CASE("gamma checks") {
    kcross::IdentityReport r4 = kcross::verify_gamma(4);
    CHECK(r4.equal);
    CHECK(r4.lhs == poly({0, 1, 10, 20, 10, 1}));

    kcross::IdentityReport r0 = kcross::verify_gamma(0);
    CHECK(r0.equal);
    CHECK(r0.lhs == poly({0, 1}));

    kcross::IdentityReport r3 = kcross::verify_gamma(3);
    CHECK(r3.equal);

    for (int n = 0; n <= 10; ++n) CHECK(kcross::verify_gamma(n).equal);
}

TEST_CASE("stirling degenerate case") {
    CHECK(kcross::stirling2(4, 2) == BigNat(7));
    for (int n = 1; n <= 8; ++n) CHECK(kcross::verify_stirling(n).equal);
}

TEST_CASE("donaghey identity") {
    kcross::IdentityReport r3 = kcross::verify_donaghey(3);
    CHECK(r3.equal);
    CHECK(r3.lhs == poly({14}));

    CHECK(kcross::verify_donaghey(0).equal);
    for (int n = 0; n <= 14; ++n) CHECK(kcross::verify_donaghey(n).equal);
}

TEST_CASE("nesting counterexample search") {
    // Independent route to the expected witness polynomials: enumerate by
    // insertion, test nestings by subset brute force.
    Polynomial lhs_expected, rhs_expected;
    for (const auto& p : oracle::all_partitions(4, Indexing::one_based)) {
        if (kcross::max_chain_exhaustive(kcross::arcs_of(p), kcross::ChainMode::crossing,
                                         kcross::ChainKind::strict)
                .size < 2)
            lhs_expected.add_term(p.block_count(), 1);
    }
    for (int i = 0; i <= 3; ++i) {
        Polynomial nne;
        for (const auto& p : oracle::all_partitions(i, Indexing::one_based)) {
            if (kcross::max_chain_exhaustive(kcross::arcs_of(p), kcross::ChainMode::nesting,
                                             kcross::ChainKind::enhanced)
                    .size < 2)
                nne.add_term(p.block_count(), 1);
        }
        rhs_expected += nne.scaled(kcross::binomial(3, i));
    }
    rhs_expected = rhs_expected.shifted(1);
    CHECK(lhs_expected == poly({0, 1, 6, 6, 1}));
    CHECK(rhs_expected == poly({0, 1, 7, 5, 1}));

    kcross::NestingGapResult gap = kcross::search_nesting_counterexample(4);
    REQUIRE(gap.witness.has_value());
    CHECK(gap.witness->n == 3);
    CHECK(gap.witness->k == 2);
    CHECK(gap.witness->lhs == lhs_expected);
    CHECK(gap.witness->rhs == rhs_expected);
    CHECK(gap.t1_agree_everywhere);

    CHECK_FALSE(kcross::search_nesting_counterexample(1).witness.has_value());
    CHECK(kcross::search_nesting_counterexample(2).t1_agree_everywhere);
}

TEST_CASE("motzkin path of the figure matching") {
    SetPartition p = kcross::make_partition(
        12, {{1, 9}, {2, 3}, {4, 8}, {5, 6}, {7}, {10, 12}, {11}}, Indexing::one_based);
    MotzkinPath m = kcross::matching_to_motzkin(p);
    CHECK(m.steps == "UUDUUDHDDUHD");
    CHECK(kcross::motzkin_to_matching(m) == p);
}

TEST_CASE("motzkin path edge cases") {
    CHECK(kcross::matching_to_motzkin(
              kcross::make_partition(3, {{1}, {2}, {3}}, Indexing::one_based))
              .steps == "HHH");
    CHECK(kcross::motzkin_to_matching(MotzkinPath{"UUDD"}) ==
          kcross::make_partition(4, {{1, 4}, {2, 3}}, Indexing::one_based));
    CHECK(kcross::motzkin_to_matching(MotzkinPath{""}).n == 0);
    CHECK_THROWS_AS(kcross::motzkin_to_matching(MotzkinPath{"UDX"}),
                    kcross::validation_error);
    CHECK_THROWS_AS(kcross::motzkin_to_matching(MotzkinPath{"DU"}),
                    kcross::validation_error);
    CHECK_THROWS_AS(kcross::motzkin_to_matching(MotzkinPath{"UUD"}),
                    kcross::validation_error);
    CHECK_THROWS_AS(kcross::matching_to_motzkin(kcross::make_partition(
                        3, {{1, 2, 3}}, Indexing::one_based)),
                    kcross::domain_error);
    CHECK_THROWS_AS(kcross::matching_to_motzkin(kcross::make_partition(
                        4, {{1, 3}, {2, 4}}, Indexing::one_based)),
                    kcross::domain_error);
}

TEST_CASE("motzkin correspondence round trips exhaustively") {
    for (int n = 0; n <= 8; ++n) {
        long matchings = 0;
        kcross::for_each_partition(n, Indexing::one_based, [&](const SetPartition& p) {
            if (!kcross::in_class(p, 2, PartitionClass::nw)) return;
            ++matchings;
            // partial matchings carry exactly one arc per block
            CHECK(static_cast<int>(kcross::arcs_of(p).arcs.size()) == p.block_count());
            MotzkinPath m = kcross::matching_to_motzkin(p);
            int ups = 0, hs = 0;
            for (char c : m.steps) {
                ups += c == 'U';
                hs += c == 'H';
            }
            int loops = 0;
            for (const auto& b : p.blocks) loops += b.size() == 1;
            CHECK(hs == loops);
            CHECK(ups == p.block_count() - loops);
            CHECK(kcross::motzkin_to_matching(m) == p);
        });
        CHECK(BigNat(static_cast<std::uint64_t>(matchings)) == kcross::motzkin(n));
    }
}
