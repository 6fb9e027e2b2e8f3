#pragma once

#include <set>
#include <sstream>
#include <string>

#include "kcross/bijections.hpp"
#include "kcross/enumerate.hpp"
#include "kcross/filling.hpp"

namespace kcross {

struct SelfTestResult {
    std::string report;
    bool passed = true;
    int checks = 0;
};

// Exhaustive property suite at desk scale. The report depends only on
// (nmax, kmax): results are exact and shard merges are exact sums, so
// reruns and sharded runs print identical bytes.
inline SelfTestResult run_selftest(int nmax, int kmax, int jobs = 1) {
    if (nmax < 1 || kmax < 2) throw validation_error("selftest: need nmax >= 1, kmax >= 2");
    SelfTestResult result;
    std::ostringstream out;
    auto check = [&](const std::string& label, bool ok, const std::string& detail = {}) {
        ++result.checks;
        if (ok) {
            out << "ok " << label << "\n";
        } else {
            result.passed = false;
            out << "FAIL " << label << (detail.empty() ? "" : ": " + detail) << "\n";
        }
    };
    const int kcap = std::min(kmax, 4);

    {
        bool ok = true;
        long cases = 0;
        for (int n = 0; n <= std::min(nmax, 9) && ok; ++n)
            for_each_partition(n, Indexing::one_based, [&](const SetPartition& p) {
                ArcSet a = arcs_of(p);
                if (partition_from_arcs(a) != p) ok = false;
                for (auto mode : {ChainMode::crossing, ChainMode::nesting})
                    for (auto kind : {ChainKind::strict, ChainKind::enhanced})
                        if (max_chain(a, mode, kind).size !=
                            max_chain_exhaustive(a, mode, kind).size)
                            ok = false;
                ++cases;
            });
        check("chain-programs-and-arc-round-trips n<=" +
                  std::to_string(std::min(nmax, 9)),
              ok);
    }

    {
        bool ok = true;
        for (int n = 1; n <= nmax; ++n)
            for_each_partition(n, Indexing::zero_based, [&](const SetPartition& p) {
                ArcSet a = arcs_of(p);
                int strict = max_chain_size(a, ChainMode::crossing, ChainKind::strict);
                int enh = max_chain_size(a, ChainMode::crossing, ChainKind::enhanced);
                int black = max_chain_size(ColoredDiagram::of(p).black_arc_set(),
                                           ChainMode::crossing, ChainKind::enhanced);
                for (int k = 2; k <= kmax; ++k) {
                    if (strict < k - 1 && enh >= k) ok = false;
                    if (enh < k && strict >= k) ok = false;
                    if (enh < k && black >= k) ok = false;
                }
            });
        check("class-containments n<=" + std::to_string(nmax), ok);
    }

    {
        bool ok = true;
        for (int n = 0; n <= nmax; ++n)
            for (int k = 2; k <= kcap; ++k) {
                long cross = 0, nest = 0;
                for_each_partition(n, Indexing::one_based, [&](const SetPartition& p) {
                    ArcSet a = arcs_of(p);
                    cross += max_chain_size(a, ChainMode::crossing, ChainKind::strict) < k;
                    nest += max_chain_size(a, ChainMode::nesting, ChainKind::strict) < k;
                });
                if (cross != nest) ok = false;
            }
        check("crossing-nesting-symmetry n<=" + std::to_string(nmax), ok);
    }

    {
        bool ok = true;
        std::ostringstream detail;
        for (int n = 1; n <= nmax; ++n)
            for (int k = 2; k <= kmax; ++k) {
                IdentityReport r = verify_euler(n, k, jobs);
                if (!r.equal) {
                    ok = false;
                    detail << " n=" << n << ",k=" << k;
                }
            }
        check("euler-transform n<=" + std::to_string(nmax) + " k<=" + std::to_string(kmax),
              ok, detail.str());
    }

    {
        bool ok = true;
        for (int n = 0; n <= nmax; ++n) ok = ok && verify_gamma(n).equal;
        check("gamma-expansion n<=" + std::to_string(nmax), ok);
        ok = true;
        for (int n = 1; n <= nmax; ++n) ok = ok && verify_stirling(n).equal;
        check("stirling-degenerate n<=" + std::to_string(nmax), ok);
        ok = true;
        for (int n = 0; n <= nmax; ++n) ok = ok && verify_donaghey(n).equal;
        check("donaghey n<=" + std::to_string(nmax), ok);
    }

    {
        NestingGapResult gap = search_nesting_counterexample(std::min(nmax, 4));
        bool ok = gap.t1_agree_everywhere;
        if (nmax >= 3)
            ok = ok && gap.witness && gap.witness->n == 3 && gap.witness->k == 2;
        check("nesting-gap-witness", ok);
    }

    {
        bool ok = true;
        for (int n = 0; n <= nmax + 1; ++n) {
            ok = ok && class_poly(n, 2, PartitionClass::nc, jobs).value_at_one() == catalan(n);
            ok = ok && class_poly(n, 2, PartitionClass::nw, jobs).value_at_one() == motzkin(n);
            ok = ok && class_poly(n, 2, PartitionClass::nc).palindromic();
        }
        check("catalan-motzkin-cardinalities n<=" + std::to_string(nmax + 1), ok);
    }

    {
        bool ok = true;
        for (int m = 1; m <= nmax + 1 && ok; ++m)
            for (int k = 2; k <= kcap && ok; ++k) {
                long domain = 0, codomain = 0;
                std::set<std::vector<std::vector<int>>> images;
                bool inner = true;
                for_each_partition(m, Indexing::zero_based, [&](const SetPartition& p) {
                    if (in_class(p, k, PartitionClass::nc)) ++codomain;
                    if (!in_class(p, k, PartitionClass::bnw)) return;
                    ++domain;
                    BijectionResult r = phi(p, k);
                    if (!in_class(r.partition, k, PartitionClass::nc)) inner = false;
                    if (r.partition.block_count() != p.block_count()) inner = false;
                    if (phi_inv(r.partition, k).partition != p) inner = false;
                    images.insert(r.partition.blocks);
                });
                ok = inner && static_cast<long>(images.size()) == domain &&
                     domain == codomain;
            }
        check("phi-bijection ground<=" + std::to_string(nmax + 1), ok);
    }

    {
        bool ok = true;
        for (int m = 1; m <= nmax + 1; ++m)
            for_each_partition(m, Indexing::zero_based, [&](const SetPartition& p) {
                if (!in_class(p, 2, PartitionClass::nc)) return;
                if (psi_inv(psi(p)) != p) ok = false;
            });
        check("psi-round-trip ground<=" + std::to_string(nmax + 1), ok);
    }

    {
        bool ok = true;
        for (int m = 1; m <= nmax + 1; ++m)
            for_each_partition(m, Indexing::zero_based, [&](const SetPartition& p) {
                if (!in_class(p, 2, PartitionClass::bnw)) return;
                std::vector<std::vector<int>> mu;
                for (const auto& b : p.blocks)
                    if (b.front() != 0) mu.push_back(b);
                if (phi(p, 2).partition != psi_inv(make_matching_pair(m - 1, mu)))
                    ok = false;
            });
        check("phi-psi-coherence-at-k-2 ground<=" + std::to_string(nmax + 1), ok);
    }

    {
        bool ok = true;
        for (int n = 1; n <= nmax; ++n)
            for_each_partition(n, Indexing::one_based, [&](const SetPartition& p) {
                ArcSet a = arcs_of(p);
                int strict = max_chain_size(a, ChainMode::crossing, ChainKind::strict);
                int enh = max_chain_size(a, ChainMode::crossing, ChainKind::enhanced);
                int chain_c = p.n >= 1 ? max_proper_se_chain(map_C(p)) : 0;
                int chain_e = max_proper_se_chain(map_E(p));
                for (int k = 2; k <= kcap; ++k) {
                    if ((strict >= k) != (chain_c >= k)) ok = false;
                    if ((enh >= k) != (chain_e >= k)) ok = false;
                }
            });
        check("chain-equivalence-under-fillings n<=" + std::to_string(nmax), ok);
    }

    {
        bool ok = true;
        for (int order = 0; order <= std::min(nmax, 7); ++order)
            for_each_simple_filling(order, [&](const TriangularFilling& f) {
                auto [comp, compressed] = map_f(f);
                if (one_count(compressed) != one_count(f)) ok = false;
                if (inv_f(comp, compressed) != f) ok = false;
            });
        check("f-round-trip order<=" + std::to_string(std::min(nmax, 7)), ok);
    }

    {
        bool ok = true;
        for (int k = 2; k <= 3; ++k) {
            std::vector<long> e_count(static_cast<std::size_t>(std::min(nmax, 7)) + 1, 0);
            for (int order = 0; order <= std::min(nmax, 7); ++order)
                for_each_simple_filling(order, [&](const TriangularFilling& f) {
                    if (filling_class(f, k).in_e_class)
                        ++e_count[static_cast<std::size_t>(order)];
                });
            for (int n = 0; n <= std::min(nmax, 7); ++n) {
                long c_count = 0;
                for_each_simple_filling(n, [&](const TriangularFilling& f) {
                    if (max_proper_se_chain(f) < k) ++c_count;
                });
                BigNat rhs;
                for (int i = 0; i <= n; ++i)
                    rhs += binomial(n, i) *
                           BigNat(static_cast<std::uint64_t>(
                               e_count[static_cast<std::size_t>(i)]));
                if (BigNat(static_cast<std::uint64_t>(c_count)) != rhs) ok = false;
            }
        }
        check("hook-cardinality order<=" + std::to_string(std::min(nmax, 7)), ok);
    }

    {
        bool ok = true;
        for (int n = 0; n <= nmax; ++n)
            for_each_partition(n, Indexing::one_based, [&](const SetPartition& p) {
                if (!in_class(p, 2, PartitionClass::nw)) return;
                if (motzkin_to_matching(matching_to_motzkin(p)) != p) ok = false;
            });
        check("motzkin-path-round-trip n<=" + std::to_string(nmax), ok);
    }

    {
        bool ok = true;
        for (PartitionClass cls :
             {PartitionClass::nc, PartitionClass::nw, PartitionClass::nonnest_enh})
            ok = ok && class_poly(std::min(nmax + 1, 9), 3, cls, 4) ==
                           class_poly(std::min(nmax + 1, 9), 3, cls, 1);
        check("sharded-equals-serial", ok);
    }

    out << (result.passed ? "selftest: PASS" : "selftest: FAIL") << " (" << result.checks
        << " checks, nmax=" << nmax << ", kmax=" << kmax << ")\n";
    result.report = out.str();
    return result;
}

}  // namespace kcross
