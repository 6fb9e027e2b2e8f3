#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "kcross/chains.hpp"
#include "kcross/partition.hpp"

namespace kcross {

// Colored arc diagram of a zero-based partition. The red block is the
// block containing 0; red is never stored independently of connectivity,
// it is recomputed from the arcs whenever the diagram changes.
struct ColoredDiagram {
    ArcSet arcs;                 // zero-based, loops exactly on singletons
    std::vector<int> red_block;  // sorted; always contains 0

    static ColoredDiagram of(const SetPartition& p) {
        if (p.convention != Indexing::zero_based)
            throw validation_error("colored diagram: partition must be zero-based");
        if (p.n == 0) throw validation_error("colored diagram: empty ground set has no node 0");
        ColoredDiagram d{arcs_of(p), {}};
        for (const auto& b : p.blocks)
            if (b.front() == 0) d.red_block = b;
        return d;
    }

    // Rebuilds a normalized diagram from raw arcs: loops are stripped and
    // re-derived from connectivity, colors recomputed from node 0.
    static ColoredDiagram from_raw_arcs(int n, std::vector<Arc> raw) {
        std::erase_if(raw, [](const Arc& a) { return a.is_loop(); });
        std::sort(raw.begin(), raw.end());
        SetPartition p = partition_from_arcs(ArcSet{n, Indexing::zero_based, std::move(raw)});
        return of(p);
    }

    SetPartition partition() const { return partition_from_arcs(arcs); }

    int n() const { return arcs.n; }

    bool is_red_node(int v) const {
        return std::binary_search(red_block.begin(), red_block.end(), v);
    }

    bool is_red_arc(const Arc& a) const {
        return is_red_node(a.left) && is_red_node(a.right);
    }

    std::vector<Arc> black_arcs() const {
        std::vector<Arc> out;
        for (const auto& a : arcs.arcs)
            if (!is_red_arc(a)) out.push_back(a);
        return out;
    }

    ArcSet black_arc_set() const { return ArcSet{arcs.n, Indexing::zero_based, black_arcs()}; }

    friend bool operator==(const ColoredDiagram&, const ColoredDiagram&) = default;
};

struct ClassFlags {
    bool in_nc = false;
    bool in_nw = false;
    std::optional<bool> in_bnw;  // only defined for zero-based partitions
};

// NC: no k-crossing; NW: no enhanced k-crossing; BNW: no black enhanced
// k-crossing. NC^(k-1) <= NW^(k) <= NC^(k) holds by definition chasing.
inline ClassFlags class_flags(const SetPartition& p, int k) {
    if (k < 2) throw validation_error("class_flags: k must be at least 2");
    ArcSet a = arcs_of(p);
    ClassFlags f;
    f.in_nc = max_chain_size(a, ChainMode::crossing, ChainKind::strict) < k;
    f.in_nw = max_chain_size(a, ChainMode::crossing, ChainKind::enhanced) < k;
    if (p.convention == Indexing::zero_based && p.n > 0) {
        ColoredDiagram d = ColoredDiagram::of(p);
        f.in_bnw =
            max_chain_size(d.black_arc_set(), ChainMode::crossing, ChainKind::enhanced) < k;
    }
    return f;
}

inline bool in_bnw(const ColoredDiagram& d, int k) {
    if (k < 2) throw validation_error("in_bnw: k must be at least 2");
    return max_chain_size(d.black_arc_set(), ChainMode::crossing, ChainKind::enhanced) < k;
}

// Red nodes a lying under some strict j-crossing of black arcs, i.e.
// i_j < a < j_1. Every arc of such a crossing spans a strictly, so it
// suffices to look for a j-chain among the black arcs spanning a.
inline std::vector<int> red_nodes_under_black_crossing(const ColoredDiagram& d, int j) {
    if (j < 1) throw validation_error("red_nodes_under_black_crossing: j must be positive");
    std::vector<Arc> black = d.black_arcs();
    std::sort(black.begin(), black.end());
    std::vector<int> out;
    for (int a : d.red_block) {
        std::vector<Arc> window;
        for (const auto& arc : black)
            if (arc.left < a && a < arc.right) window.push_back(arc);
        if (static_cast<int>(window.size()) < j) continue;
        if (static_cast<int>(detail::longest_increasing_arcs(window).size()) >= j)
            out.push_back(a);
    }
    return out;
}

}  // namespace kcross
