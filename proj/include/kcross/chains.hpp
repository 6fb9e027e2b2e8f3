#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "kcross/partition.hpp"

namespace kcross {

enum class ChainMode { crossing, nesting };
enum class ChainKind { strict, enhanced };  // enhanced = strict or weak

struct CrossingWitness {
    ChainMode mode = ChainMode::crossing;
    bool weak = false;
    std::vector<Arc> arcs;  // in the defining order (sorted by left endpoint)

    friend bool operator==(const CrossingWitness&, const CrossingWitness&) = default;
};

struct ChainResult {
    int size = 0;
    std::optional<CrossingWitness> witness;
};

// Direct check of the defining inequalities on arcs sorted by left
// endpoint. A single non-loop arc is a 1-chain in either mode; a loop
// alone is not. Weak chains need k >= 2. In nesting mode only the
// innermost position admits a loop (the weak case), in crossing mode the
// inequalities exclude loops entirely.
inline bool is_chain(std::span<const Arc> arcs, ChainMode mode, bool weak) {
    const std::size_t k = arcs.size();
    if (k == 0) return false;
    if (k == 1) return !weak && !arcs[0].is_loop();
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (arcs[i].left >= arcs[i + 1].left) return false;
    if (mode == ChainMode::crossing) {
        for (std::size_t i = 0; i + 1 < k; ++i)
            if (arcs[i].right >= arcs[i + 1].right) return false;
        int gap = arcs[0].right - arcs[k - 1].left;  // j_1 - i_k
        return weak ? gap == 0 : gap > 0;
    }
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (arcs[i].right <= arcs[i + 1].right) return false;
    int gap = arcs[k - 1].right - arcs[k - 1].left;  // j_k - i_k
    return weak ? gap == 0 : gap > 0;
}

inline bool is_enhanced_chain(std::span<const Arc> arcs, ChainMode mode) {
    return is_chain(arcs, mode, false) || is_chain(arcs, mode, true);
}

namespace detail {

// Longest chain with strictly increasing lefts and rights among `arcs`
// (already sorted by left, lefts distinct). Returns the chain itself.
inline std::vector<Arc> longest_increasing_arcs(const std::vector<Arc>& arcs) {
    const std::size_t m = arcs.size();
    std::vector<int> len(m, 1), prev(m, -1);
    std::size_t best = m ? 0 : std::size_t(-1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (arcs[j].right < arcs[i].right && len[j] + 1 > len[i]) {
                len[i] = len[j] + 1;
                prev[i] = static_cast<int>(j);
            }
        if (best == std::size_t(-1) || len[i] > len[best]) best = i;
    }
    std::vector<Arc> chain;
    for (int at = static_cast<int>(best); at >= 0; at = prev[static_cast<std::size_t>(at)])
        chain.push_back(arcs[static_cast<std::size_t>(at)]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

inline ChainResult max_crossing_chain(const ArcSet& a, ChainKind kind) {
    const int lo = ground_min(a.convention);
    std::vector<Arc> sorted = a.arcs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Arc> best;
    // Any k-chain has all lefts <= b and all rights >= b for b = i_k, so
    // scanning windows over b and taking a longest increasing chain inside
    // is exact. Strict chains use the half-open window left <= b < right.
    for (int b = lo; b < lo + a.n; ++b) {
        std::vector<Arc> window;
        for (const auto& arc : sorted) {
            if (arc.is_loop()) continue;
            bool in = kind == ChainKind::strict ? arc.left <= b && b < arc.right
                                                : arc.left <= b && b <= arc.right;
            if (in) window.push_back(arc);
        }
        if (static_cast<int>(window.size()) <= static_cast<int>(best.size())) continue;
        std::vector<Arc> chain = longest_increasing_arcs(window);
        if (chain.size() > best.size()) best = std::move(chain);
    }
    if (best.empty()) return {};
    bool weak = best.back().left == best.front().right;
    return ChainResult{static_cast<int>(best.size()),
                       CrossingWitness{ChainMode::crossing, weak, std::move(best)}};
}

inline ChainResult max_nesting_chain(const ArcSet& a, ChainKind kind) {
    std::vector<Arc> nonloop, loops;
    for (const auto& arc : a.arcs)
        (arc.is_loop() ? loops : nonloop).push_back(arc);
    std::sort(nonloop.begin(), nonloop.end());
    const std::size_t m = nonloop.size();
    // len[i]: longest strict-containment chain of non-loop arcs ending
    // (innermost) at arc i.
    std::vector<int> len(m, 1), prev(m, -1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (nonloop[j].left < nonloop[i].left && nonloop[i].right < nonloop[j].right &&
                len[j] + 1 > len[i]) {
                len[i] = len[j] + 1;
                prev[i] = static_cast<int>(j);
            }
    auto chain_ending_at = [&](std::size_t i) {
        std::vector<Arc> chain;
        for (int at = static_cast<int>(i); at >= 0; at = prev[static_cast<std::size_t>(at)])
            chain.push_back(nonloop[static_cast<std::size_t>(at)]);
        std::reverse(chain.begin(), chain.end());
        return chain;
    };
    int best_len = 0;
    std::size_t best_at = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (len[i] > best_len) {
            best_len = len[i];
            best_at = i;
        }
    std::vector<Arc> best = best_len ? chain_ending_at(best_at) : std::vector<Arc>{};
    if (kind == ChainKind::enhanced) {
        // A loop may sit innermost under a chain of containing arcs; a
        // loop alone is not a chain.
        for (const auto& lp : loops) {
            int around = 0;
            std::size_t around_at = 0;
            for (std::size_t j = 0; j < m; ++j)
                if (nonloop[j].left < lp.left && lp.right < nonloop[j].right &&
                    len[j] > around) {
                    around = len[j];
                    around_at = j;
                }
            if (around >= 1 && around + 1 > static_cast<int>(best.size())) {
                best = chain_ending_at(around_at);
                best.push_back(lp);
            }
        }
    }
    if (best.empty()) return {};
    bool weak = best.back().is_loop();
    return ChainResult{static_cast<int>(best.size()),
                       CrossingWitness{ChainMode::nesting, weak, std::move(best)}};
}

}  // namespace detail

// Largest k such that a k-crossing / k-nesting of the given kind exists,
// with one witness. Dynamic-programming route.
inline ChainResult max_chain(const ArcSet& a, ChainMode mode, ChainKind kind) {
    return mode == ChainMode::crossing ? detail::max_crossing_chain(a, kind)
                                       : detail::max_nesting_chain(a, kind);
}

inline int max_chain_size(const ArcSet& a, ChainMode mode, ChainKind kind) {
    return max_chain(a, mode, kind).size;
}

// Brute-force route over all sorted arc subsets, checking the defining
// inequalities directly. Kept alongside the dynamic program as the
// always-available cross-check.
inline ChainResult max_chain_exhaustive(const ArcSet& a, ChainMode mode, ChainKind kind) {
    std::vector<Arc> sorted = a.arcs;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    ChainResult best;
    std::vector<Arc> current;
    auto consider = [&]() {
        bool strict_ok = is_chain(current, mode, false);
        bool weak_ok = kind == ChainKind::enhanced && is_chain(current, mode, true);
        if ((strict_ok || weak_ok) && static_cast<int>(current.size()) > best.size) {
            best.size = static_cast<int>(current.size());
            best.witness = CrossingWitness{mode, !strict_ok, current};
        }
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == m) {
            if (!current.empty()) consider();
            return;
        }
        self(self, idx + 1);
        current.push_back(sorted[idx]);
        self(self, idx + 1);
        current.pop_back();
    };
    rec(rec, 0);
    return best;
}

}  // namespace kcross
