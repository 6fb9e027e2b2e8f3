// Acceptance suite: every criterion is exact (tolerance zero on integer
// and polynomial comparisons) and prints one pass/fail line. The binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kcross/bijections.hpp"
#include "kcross/enumerate.hpp"
#include "kcross/filling.hpp"
#include "kcross/selftest.hpp"

using namespace kcross;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail = {}) {
    if (!pass) ++failures;
    std::printf("[%s] %d. %s%s%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SetPartition zp(int n, std::vector<std::vector<int>> blocks) {
    return make_partition(n, std::move(blocks), Indexing::zero_based);
}

// 1. Coefficient-exact Euler transform over 1 <= n <= 9, 2 <= k <= 6,
//    within the stated runtime budgets, single-threaded and sharded.
void criterion_euler_grid() {
    auto start = std::chrono::steady_clock::now();
    bool equal = true;
    for (int n = 1; n <= 9; ++n)
        for (int k = 2; k <= 6; ++k) equal = equal && verify_euler(n, k).equal;
    double serial = seconds_since(start);

    start = std::chrono::steady_clock::now();
    bool sharded_equal = true;
    for (int n = 1; n <= 9; ++n)
        for (int k = 2; k <= 6; ++k) {
            IdentityReport r = verify_euler(n, k, 4);
            sharded_equal = sharded_equal && r.equal;
        }
    double sharded = seconds_since(start);

    std::ostringstream detail;
    detail.precision(2);
    detail << std::fixed << "serial " << serial << "s (budget 120s), 4 shards " << sharded
           << "s (budget 60s)";
    report(1, "Euler transform grid n<=9, k<=6, exact coefficients",
           equal && sharded_equal && serial < 120.0 && sharded < 60.0, detail.str());
}

// 2. The worked examples reproduce exactly.
void criterion_worked_examples() {
    bool ok = true;

    SetPartition phi_in = zp(
        17, {{0, 4, 8, 15}, {1, 3, 10}, {2, 11}, {5, 16}, {6, 13}, {7, 9, 12, 14}});
    SetPartition phi_out = zp(
        17, {{0, 4, 8, 13}, {1, 3, 11}, {2, 15}, {5, 16}, {6, 10}, {7, 9, 12, 14}});
    ok = ok && phi(phi_in, 3).partition == phi_out;

    SetPartition inv_in =
        zp(17, {{0, 3, 5, 10, 13}, {1, 6, 8, 12}, {2, 9, 15}, {4, 11, 16}, {7, 14}});
    SetPartition inv_out =
        zp(17, {{0, 3, 9, 11, 15}, {1, 5, 10, 16}, {2, 6, 8, 13}, {4, 12}, {7, 14}});
    ok = ok && phi_inv(inv_in, 4).partition == inv_out;

    SetPartition psi_in = zp(11, {{0, 8, 10}, {1, 2, 7}, {3, 5, 6}, {4}, {9}});
    MatchingPair pair = psi(psi_in);
    ok = ok && pair.A == std::vector<int>{1, 3, 4, 6, 7, 9};
    ok = ok && pair.mu == std::vector<std::vector<int>>{{1, 7}, {3, 6}, {4}, {9}};
    ok = ok && psi_inv(pair) == psi_in;

    auto [comp, compressed] = map_f(make_filling(10, {{5, 2}, {6, 5}, {7, 7}, {9, 9}}));
    ok = ok && comp.parts == std::vector<int>{2, 3, 1, 1, 2, 2};
    ok = ok && compressed == make_filling(5, {{2, 1}, {3, 2}, {4, 4}, {5, 5}});

    SetPartition matching = make_partition(
        12, {{1, 9}, {2, 3}, {4, 8}, {5, 6}, {7}, {10, 12}, {11}}, Indexing::one_based);
    ok = ok && matching_to_motzkin(matching).steps == "UUDUUDHDDUHD";

    report(2, "worked examples (phi, phi-inv, psi, psi-inv, f, Motzkin path)", ok);
}

// 3. phi is a weight-preserving bijection BNW -> NC with both round
//    trips, for all ground sizes n+1 <= 9 and k in {2,3,4}.
void criterion_bijection_suite() {
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= 9 && ok; ++m)
        for (int k = 2; k <= 4 && ok; ++k) {
            long domain = 0, codomain = 0;
            std::set<std::vector<std::vector<int>>> images;
            try {
                for_each_partition(m, Indexing::zero_based, [&](const SetPartition& p) {
                    if (in_class(p, k, PartitionClass::nc)) ++codomain;
                    if (!in_class(p, k, PartitionClass::bnw)) return;
                    ++domain;
                    BijectionResult r = phi(p, k);
                    check_internal(in_class(r.partition, k, PartitionClass::nc),
                                   "image outside NC");
                    check_internal(r.partition.block_count() == p.block_count(),
                                   "weight changed");
                    check_internal(phi_inv(r.partition, k).partition == p,
                                   "phi_inv(phi(P)) != P");
                    images.insert(r.partition.blocks);
                });
                for_each_partition(m, Indexing::zero_based, [&](const SetPartition& q) {
                    if (!in_class(q, k, PartitionClass::nc)) return;
                    check_internal(phi(phi_inv(q, k).partition, k).partition == q,
                                   "phi(phi_inv(Q)) != Q");
                });
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
            ok = ok && static_cast<long>(images.size()) == domain && domain == codomain;
        }
    report(3, "bijection suite: round trips, weight, lemma assertions (n+1<=9, k<=4)", ok,
           detail);
}

// 4. phi at k = 2 agrees with the psi_inv route on all of BNW, n <= 8.
void criterion_k2_coherence() {
    bool ok = true;
    for (int m = 1; m <= 9; ++m)
        for_each_partition(m, Indexing::zero_based, [&](const SetPartition& p) {
            if (!in_class(p, 2, PartitionClass::bnw)) return;
            std::vector<std::vector<int>> mu;
            for (const auto& b : p.blocks)
                if (b.front() != 0) mu.push_back(b);
            if (phi(p, 2).partition != psi_inv(make_matching_pair(m - 1, mu))) ok = false;
        });
    report(4, "k=2 coherence of phi with psi_inv after decomposition (n<=8)", ok);
}

// 5. Filling suite: chain equivalences, f round trips, hook cardinality.
void criterion_filling_suite() {
    bool equivalences = true;
    for (int n = 1; n <= 8; ++n)
        for_each_partition(n + 1, Indexing::one_based, [&](const SetPartition& p) {
            ArcSet a = arcs_of(p);
            int strict = max_chain_size(a, ChainMode::crossing, ChainKind::strict);
            int chain_c = max_proper_se_chain(map_C(p));
            for (int k = 2; k <= 4; ++k)
                if ((strict >= k) != (chain_c >= k)) equivalences = false;
        });
    for (int n = 1; n <= 8; ++n)
        for_each_partition(n, Indexing::one_based, [&](const SetPartition& p) {
            int enh = max_chain_size(arcs_of(p), ChainMode::crossing, ChainKind::enhanced);
            int chain_e = max_proper_se_chain(map_E(p));
            for (int k = 2; k <= 4; ++k)
                if ((enh >= k) != (chain_e >= k)) equivalences = false;
        });

    bool round_trips = true;
    for (int order = 0; order <= 7; ++order)
        for_each_simple_filling(order, [&](const TriangularFilling& f) {
            auto [comp, compressed] = map_f(f);
            if (one_count(compressed) != one_count(f)) round_trips = false;
            if (inv_f(comp, compressed) != f) round_trips = false;
        });

    bool cardinality = true;
    for (int k = 2; k <= 3; ++k) {
        std::vector<long> e_count(8, 0);
        for (int order = 0; order <= 7; ++order)
            for_each_simple_filling(order, [&](const TriangularFilling& f) {
                if (filling_class(f, k).in_e_class) ++e_count[static_cast<std::size_t>(order)];
            });
        for (int n = 0; n <= 7; ++n) {
            long c_count = 0;
            for_each_simple_filling(n, [&](const TriangularFilling& f) {
                if (max_proper_se_chain(f) < k) ++c_count;
            });
            BigNat rhs;
            for (int i = 0; i <= n; ++i)
                rhs += binomial(n, i) *
                       BigNat(static_cast<std::uint64_t>(e_count[static_cast<std::size_t>(i)]));
            if (BigNat(static_cast<std::uint64_t>(c_count)) != rhs) cardinality = false;
        }
    }
    report(5, "filling suite: chain equivalences (n<=8), f round trips and hook "
              "cardinality (n<=7)",
           equivalences && round_trips && cardinality);
}

// 6. Number-theoretic checks at their stated ranges.
void criterion_numbers() {
    bool ok = true;
    for (int n = 0; n <= 10; ++n) {
        ok = ok && class_poly(n, 2, PartitionClass::nc).value_at_one() == catalan(n);
        ok = ok && class_poly(n, 2, PartitionClass::nw).value_at_one() == motzkin(n);
    }
    ok = ok && class_poly(5, 2, PartitionClass::nc) ==
                   Polynomial(std::vector<BigNat>{0, 1, 10, 20, 10, 1});
    for (int n = 0; n <= 10; ++n) ok = ok && verify_gamma(n).equal;
    for (int n = 0; n <= 14; ++n) ok = ok && verify_donaghey(n).equal;  // enumerates n<=9
    for (int n = 1; n <= 8; ++n) ok = ok && verify_stirling(n).equal;
    report(6, "Catalan/Motzkin cardinalities (n<=10), C_5(t), gamma (n<=10), Donaghey "
              "(n<=14), Stirling (n<=8)",
           ok);
}

// 7. Negative control: the transform fails for enhanced nonnesting
//    partitions at (n,k) = (3,2) while the t = 1 totals agree.
void criterion_negative_control() {
    NestingGapResult gap = search_nesting_counterexample(4);
    bool ok = gap.witness.has_value() && gap.t1_agree_everywhere;
    if (ok) {
        const IdentityReport& w = *gap.witness;
        ok = w.n == 3 && w.k == 2 && !w.equal &&
             w.lhs == Polynomial(std::vector<BigNat>{0, 1, 6, 6, 1}) &&
             w.rhs == Polynomial(std::vector<BigNat>{0, 1, 7, 5, 1}) &&
             w.lhs.value_at_one() == BigNat(14) && w.rhs.value_at_one() == BigNat(14);
    }
    report(7, "negative control: nesting witness at (n,k)=(3,2) with t=1 agreement", ok);
}

// 8. Determinism: repeated selftests and sharded selftests are
//    byte-identical.
void criterion_determinism() {
    SelfTestResult a = run_selftest(8, 4, 1);
    SelfTestResult b = run_selftest(8, 4, 1);
    SelfTestResult c = run_selftest(8, 4, 4);
    bool ok = a.passed && b.passed && c.passed && a.report == b.report &&
              a.report == c.report;
    report(8, "determinism: selftest reports byte-identical across runs and --jobs 4", ok);
}

}  // namespace

int main() {
    criterion_euler_grid();
    criterion_worked_examples();
    criterion_bijection_suite();
    criterion_k2_coherence();
    criterion_filling_suite();
    criterion_numbers();
    criterion_negative_control();
    criterion_determinism();
    if (failures)
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    else
        std::printf("acceptance: all 8 criteria passed\n");
    return failures ? 1 : 0;
}
