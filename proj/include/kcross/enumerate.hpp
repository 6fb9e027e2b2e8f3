#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kcross/bijections.hpp"
#include "kcross/chains.hpp"
#include "kcross/colored.hpp"
#include "kcross/numbers.hpp"
#include "kcross/partition.hpp"
#include "kcross/polynomial.hpp"

namespace kcross {

// ---------------------------------------------------------------------------
// Exhaustive enumeration by restricted growth strings
// ---------------------------------------------------------------------------

namespace detail {

inline SetPartition partition_from_rgs(const std::vector<int>& word, Indexing conv) {
    const int lo = ground_min(conv);
    int blocks = 0;
    for (int w : word) blocks = std::max(blocks, w + 1);
    std::vector<std::vector<int>> bl(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < word.size(); ++i)
        bl[static_cast<std::size_t>(word[i])].push_back(static_cast<int>(i) + lo);
    return SetPartition{static_cast<int>(word.size()), conv, std::move(bl)};
}

template <class F>
void rgs_continue(std::vector<int>& word, std::size_t pos, int used, Indexing conv, F&& fn) {
    if (pos == word.size()) {
        fn(partition_from_rgs(word, conv));
        return;
    }
    for (int v = 0; v <= used; ++v) {
        word[pos] = v;
        rgs_continue(word, pos + 1, std::max(used, v + 1), conv, fn);
    }
}

}  // namespace detail

// Calls fn with every partition of the ground set exactly once, in
// lexicographic order of the restricted growth strings (w_1 = 0,
// w_{i+1} <= 1 + max of the prefix).
template <class F>
void for_each_partition(int n, Indexing conv, F&& fn) {
    if (n < 0) throw validation_error("for_each_partition: negative ground-set size");
    if (n == 0) {
        fn(SetPartition{0, conv, {}});
        return;
    }
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    detail::rgs_continue(word, 1, 1, conv, fn);
}

namespace detail {

// All valid RGS prefixes of the given length, in lexicographic order,
// paired with the number of distinct values used.
inline std::vector<std::pair<std::vector<int>, int>> rgs_prefixes(int n, int len) {
    std::vector<std::pair<std::vector<int>, int>> out;
    std::vector<int> word(static_cast<std::size_t>(std::min(n, len)), 0);
    auto rec = [&](auto&& self, std::size_t pos, int used) -> void {
        if (pos == word.size()) {
            out.emplace_back(word, used);
            return;
        }
        for (int v = 0; v <= used; ++v) {
            word[pos] = v;
            self(self, pos + 1, std::max(used, v + 1));
        }
    };
    if (!word.empty()) rec(rec, 1, 1);
    return out;
}

}  // namespace detail

// Sharded enumeration: the RGS tree is split below a fixed prefix depth
// and the prefixes are dealt round-robin onto `jobs` workers. `fn` runs
// concurrently on distinct shards, so it must only touch shard-local
// state; merging shard results is the caller's business.
template <class F>
void for_each_partition_sharded(int n, Indexing conv, int jobs, F&& fn_for_shard) {
    if (jobs < 1) throw validation_error("for_each_partition_sharded: jobs must be positive");
    const int depth = std::min(n, 5);
    auto prefixes = detail::rgs_prefixes(n, depth);
    std::vector<std::thread> workers;
    for (int shard = 0; shard < jobs; ++shard) {
        workers.emplace_back([&, shard] {
            auto fn = fn_for_shard(shard);
            if (n == 0) {
                if (shard == 0) fn(SetPartition{0, conv, {}});
                return;
            }
            for (std::size_t i = static_cast<std::size_t>(shard); i < prefixes.size();
                 i += static_cast<std::size_t>(jobs)) {
                std::vector<int> word = prefixes[i].first;
                word.resize(static_cast<std::size_t>(n), 0);
                detail::rgs_continue(word, static_cast<std::size_t>(depth),
                                     prefixes[i].second, conv, fn);
            }
        });
    }
    for (auto& w : workers) w.join();
}

// ---------------------------------------------------------------------------
// Class polynomials and identity checks
// ---------------------------------------------------------------------------

enum class PartitionClass { nc, nw, bnw, nonnest_enh };

inline std::string to_string(PartitionClass c) {
    switch (c) {
        case PartitionClass::nc: return "nc";
        case PartitionClass::nw: return "nw";
        case PartitionClass::bnw: return "bnw";
        case PartitionClass::nonnest_enh: return "nonnest-enh";
    }
    return "?";
}

inline bool in_class(const SetPartition& p, int k, PartitionClass cls) {
    switch (cls) {
        case PartitionClass::nc:
            return max_chain_size(arcs_of(p), ChainMode::crossing, ChainKind::strict) < k;
        case PartitionClass::nw:
            return max_chain_size(arcs_of(p), ChainMode::crossing, ChainKind::enhanced) < k;
        case PartitionClass::bnw: {
            if (p.n == 0) return true;
            SetPartition z = p.convention == Indexing::zero_based ? p : to_zero_based(p);
            return in_bnw(ColoredDiagram::of(z), k);
        }
        case PartitionClass::nonnest_enh:
            return max_chain_size(arcs_of(p), ChainMode::nesting, ChainKind::enhanced) < k;
    }
    return false;
}

// Sum of t^{number of blocks} over the partitions of an n-set avoiding
// the class's pattern at level k. The black classes read their coloring
// off the zero-based ground set.
inline Polynomial class_poly(int n, int k, PartitionClass cls, int jobs = 1) {
    if (n < 0) throw validation_error("class_poly: negative ground-set size");
    if (k < 2) throw validation_error("class_poly: k must be at least 2");
    Indexing conv =
        cls == PartitionClass::bnw ? Indexing::zero_based : Indexing::one_based;
    if (jobs <= 1) {
        Polynomial acc;
        for_each_partition(n, conv, [&](const SetPartition& p) {
            if (in_class(p, k, cls)) acc.add_term(p.block_count(), 1);
        });
        return acc;
    }
    std::vector<Polynomial> shard_acc(static_cast<std::size_t>(jobs));
    for_each_partition_sharded(n, conv, jobs, [&](int shard) {
        Polynomial* acc = &shard_acc[static_cast<std::size_t>(shard)];
        return [acc, k, cls](const SetPartition& p) {
            if (in_class(p, k, cls)) acc->add_term(p.block_count(), 1);
        };
    });
    Polynomial total;
    for (const Polynomial& s : shard_acc) total += s;
    return total;
}

// Outcome of one identity check: both sides as polynomials, coefficient
// by coefficient. `millis` is informative only and never serialized.
struct IdentityReport {
    std::string identity;
    int n = 0;
    int k = -1;  // -1 when the identity has no k parameter
    Polynomial lhs;
    Polynomial rhs;
    bool equal = false;
    std::optional<int> first_mismatch;
    double millis = 0.0;
    std::string notes;
};

namespace detail {

inline IdentityReport make_report(std::string identity, int n, int k, Polynomial lhs,
                                  Polynomial rhs, std::string notes = {}) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.n = n;
    r.k = k;
    r.equal = lhs == rhs;
    r.first_mismatch = Polynomial::first_mismatch(lhs, rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.notes = std::move(notes);
    return r;
}

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// NC_{n+1}^{(k)}(t) = t * sum_i C(n,i) NW_i^{(k)}(t), the Euler
// (binomial) transform between the two avoidance classes.
inline IdentityReport verify_euler(int n, int k, int jobs = 1) {
    if (n < 1) throw validation_error("verify_euler: n must be at least 1");
    detail::StopWatch watch;
    Polynomial lhs = class_poly(n + 1, k, PartitionClass::nc, jobs);
    Polynomial rhs;
    for (int i = 0; i <= n; ++i)
        rhs += class_poly(i, k, PartitionClass::nw, jobs).scaled(binomial(n, i));
    rhs = rhs.shifted(1);
    IdentityReport r = detail::make_report("euler", n, k, std::move(lhs), std::move(rhs));
    r.millis = watch.millis();
    return r;
}

// Two gamma-positivity checks: the Narayana polynomial C_{n+1}(t) equals
// its gamma expansion, and the block distribution over noncrossing
// partial matchings of [n] reads off the same gamma coefficients.
inline IdentityReport verify_gamma(int n) {
    if (n < 0) throw validation_error("verify_gamma: negative n");
    detail::StopWatch watch;
    Polynomial narayana = class_poly(n + 1, 2, PartitionClass::nc);
    Polynomial expansion;
    for (int i = 0; 2 * i <= n; ++i) {
        Polynomial term = Polynomial::one_plus_t_pow(n - 2 * i).shifted(i + 1);
        expansion += term.scaled(gamma_coeff(n + 1, i));
    }
    IdentityReport expand =
        detail::make_report("gamma", n, -1, std::move(narayana), std::move(expansion),
                            "gamma-expansion of the Narayana polynomial");

    Polynomial matchings = class_poly(n, 2, PartitionClass::nw);
    Polynomial via_gamma;
    for (int i = (n + 1) / 2; i <= n; ++i) via_gamma.add_term(i, gamma_coeff(n + 1, n - i));
    IdentityReport match =
        detail::make_report("gamma", n, -1, std::move(matchings), std::move(via_gamma),
                            "matching blocks against gamma coefficients");

    IdentityReport out = expand.equal ? (match.equal ? std::move(expand) : std::move(match))
                                      : std::move(expand);
    out.equal = expand.equal && match.equal;
    out.notes = "checks: gamma-expansion of C_{n+1}; block counts of NW_n^(2)";
    out.millis = watch.millis();
    return out;
}

// For k = n+1 every partition avoids the patterns, so the transform
// degenerates to the Stirling identity S(n+1,m+1) = sum_i C(n,i) S(i,m),
// checked both through the enumerated class polynomials and through the
// exact Stirling numbers for every m.
inline IdentityReport verify_stirling(int n) {
    if (n < 1) throw validation_error("verify_stirling: n must be at least 1");
    detail::StopWatch watch;
    const int k = n + 1;
    Polynomial nc = class_poly(n + 1, k, PartitionClass::nc);
    Polynomial nw = class_poly(n + 1, k, PartitionClass::nw);
    Polynomial bell_poly;
    for (int b = 0; b <= n + 1; ++b) bell_poly.add_term(b, stirling2(n + 1, b));
    IdentityReport whole = detail::make_report("stirling", n, k, std::move(nc), nw,
                                               "degenerate classes fill all partitions");
    bool classes_full = whole.equal && nw == bell_poly;

    Polynomial lhs, rhs;
    for (int m = 0; m <= n; ++m) {
        lhs.add_term(m, stirling2(n + 1, m + 1));
        BigNat sum;
        for (int i = 0; i <= n; ++i) sum += binomial(n, i) * stirling2(i, m);
        rhs.add_term(m, sum);
    }
    IdentityReport numbers =
        detail::make_report("stirling", n, -1, std::move(lhs), std::move(rhs),
                            "S(n+1,m+1) = sum_i C(n,i) S(i,m) for all m");

    IdentityReport out = classes_full ? std::move(numbers) : std::move(whole);
    out.equal = classes_full && numbers.equal;
    out.notes = "checks: NC = NW = Bell polynomial at k = n+1; Stirling recurrence for all m";
    out.millis = watch.millis();
    return out;
}

// Donaghey's identity C_{n+1} = sum_i C(n,i) M_i via the closed forms,
// with an independent enumeration route at desk scale.
inline IdentityReport verify_donaghey(int n) {
    if (n < 0) throw validation_error("verify_donaghey: negative n");
    detail::StopWatch watch;
    Polynomial lhs = Polynomial::constant(catalan(n + 1));
    BigNat sum;
    for (int i = 0; i <= n; ++i) sum += binomial(n, i) * motzkin(i);
    Polynomial rhs = Polynomial::constant(sum);
    IdentityReport out = detail::make_report("donaghey", n, -1, std::move(lhs),
                                             std::move(rhs), "closed forms");
    if (out.equal && n <= 9) {
        BigNat nc = class_poly(n + 1, 2, PartitionClass::nc).value_at_one();
        BigNat nw_sum;
        for (int i = 0; i <= n; ++i)
            nw_sum += binomial(n, i) * class_poly(i, 2, PartitionClass::nw).value_at_one();
        if (nc != catalan(n + 1) || nw_sum != sum) {
            out.equal = false;
            out.lhs = Polynomial::constant(nc);
            out.rhs = Polynomial::constant(nw_sum);
            out.notes = "enumeration route disagrees with the closed forms";
        }
    }
    out.millis = watch.millis();
    return out;
}

// The transform fails for enhanced nonnesting partitions at t != 1: scan
// for the first (n,k) where the polynomials differ while the t = 1
// counts still agree.
struct NestingGapResult {
    std::optional<IdentityReport> witness;  // first mismatch found, if any
    bool t1_agree_everywhere = true;
    int scanned_nmax = 0;
};

inline NestingGapResult search_nesting_counterexample(int n_max) {
    if (n_max < 1) throw validation_error("search_nesting_counterexample: n_max < 1");
    NestingGapResult result;
    result.scanned_nmax = n_max;
    for (int n = 1; n <= n_max; ++n) {
        // beyond k = floor((n+2)/2)+1 both sides see every partition
        for (int k = 2; 2 * k <= n + 3; ++k) {
            Polynomial lhs = class_poly(n + 1, k, PartitionClass::nc);
            Polynomial rhs;
            for (int i = 0; i <= n; ++i)
                rhs += class_poly(i, k, PartitionClass::nonnest_enh).scaled(binomial(n, i));
            rhs = rhs.shifted(1);
            if (lhs.value_at_one() != rhs.value_at_one()) result.t1_agree_everywhere = false;
            if (lhs != rhs && !result.witness) {
                result.witness = detail::make_report(
                    "nesting-gap", n, k, std::move(lhs), std::move(rhs),
                    "enhanced nonnesting classes break the transform");
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Noncrossing partial matchings <-> Motzkin paths
// ---------------------------------------------------------------------------

struct MotzkinPath {
    std::string steps;  // word over U, D, H

    friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
};

inline void validate_motzkin_path(const MotzkinPath& m) {
    int height = 0;
    for (char c : m.steps) {
        if (c == 'U') ++height;
        else if (c == 'D') --height;
        else if (c != 'H')
            throw validation_error("motzkin path: invalid step '" + std::string(1, c) + "'");
        if (height < 0) throw validation_error("motzkin path: height drops below zero");
    }
    if (height != 0) throw validation_error("motzkin path: does not end at height zero");
}

// Node i maps to U when it starts a non-loop arc, D when it ends one,
// and H when it carries a loop.
inline MotzkinPath matching_to_motzkin(const SetPartition& p) {
    if (p.convention != Indexing::one_based)
        throw validation_error("matching_to_motzkin: partition must be one-based");
    for (const auto& b : p.blocks)
        if (b.size() > 2)
            throw domain_error("matching_to_motzkin: block " + detail::block_to_string(b) +
                               " has more than two elements");
    if (max_chain_size(arcs_of(p), ChainMode::crossing, ChainKind::strict) >= 2)
        throw domain_error("matching_to_motzkin: matching has a 2-crossing");
    std::string steps(static_cast<std::size_t>(p.n), 'H');
    for (const Arc& a : arcs_of(p).arcs) {
        if (a.is_loop()) continue;
        steps[static_cast<std::size_t>(a.left - 1)] = 'U';
        steps[static_cast<std::size_t>(a.right - 1)] = 'D';
    }
    MotzkinPath m{std::move(steps)};
    validate_motzkin_path(m);
    return m;
}

// D closes the most recent open U: the stack order is exactly what makes
// the matching noncrossing.
inline SetPartition motzkin_to_matching(const MotzkinPath& m) {
    validate_motzkin_path(m);
    std::vector<std::vector<int>> blocks;
    std::vector<int> open;
    for (std::size_t i = 0; i < m.steps.size(); ++i) {
        int node = static_cast<int>(i) + 1;
        switch (m.steps[i]) {
            case 'U': open.push_back(node); break;
            case 'D':
                blocks.push_back({open.back(), node});
                open.pop_back();
                break;
            default: blocks.push_back({node}); break;
        }
    }
    return make_partition(static_cast<int>(m.steps.size()), std::move(blocks),
                          Indexing::one_based);
}

}  // namespace kcross
