#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "kcross/error.hpp"

namespace kcross {

// Both indexing conventions are explicit data: ground set
// {1,...,n} in the filling material, {0,...,n-1} in the bijection
// material. Conversion shifts every element by one.
enum class Indexing { zero_based, one_based };

inline int ground_min(Indexing conv) { return conv == Indexing::one_based ? 1 : 0; }

inline std::string to_string(Indexing conv) {
    return conv == Indexing::one_based ? "one" : "zero";
}

// A set partition in canonical form: blocks sorted ascending, block list
// ordered by minimum element. Immutable by convention; all operations
// return fresh values.
struct SetPartition {
    int n = 0;
    Indexing convention = Indexing::one_based;
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

namespace detail {
inline std::string block_to_string(const std::vector<int>& b) {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    return s + "}";
}
}  // namespace detail

// Validates and canonicalizes. Rejects empty blocks, out-of-range or
// repeated elements, and gaps, naming the offending block.
inline SetPartition make_partition(int n, std::vector<std::vector<int>> blocks,
                                   Indexing convention) {
    if (n < 0) throw validation_error("partition: negative ground-set size");
    const int lo = ground_min(convention);
    const int hi = lo + n - 1;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (auto& b : blocks) {
        if (b.empty()) throw validation_error("partition: empty block");
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < b.size(); ++i) {
            int v = b[i];
            if (v < lo || v > hi)
                throw validation_error("partition: element " + std::to_string(v) +
                                       " of block " + detail::block_to_string(b) +
                                       " outside ground set");
            if (i > 0 && b[i - 1] == v)
                throw validation_error("partition: element " + std::to_string(v) +
                                       " repeated in block " + detail::block_to_string(b));
            if (seen[static_cast<std::size_t>(v - lo)])
                throw validation_error("partition: element " + std::to_string(v) +
                                       " of block " + detail::block_to_string(b) +
                                       " appears in two blocks");
            seen[static_cast<std::size_t>(v - lo)] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw validation_error("partition: element " + std::to_string(v + lo) +
                                   " missing from every block");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return SetPartition{n, convention, std::move(blocks)};
}

inline SetPartition converted(const SetPartition& p, Indexing target) {
    if (p.convention == target) return p;
    int shift = ground_min(target) - ground_min(p.convention);
    std::vector<std::vector<int>> blocks = p.blocks;
    for (auto& b : blocks)
        for (auto& v : b) v += shift;
    return SetPartition{p.n, target, std::move(blocks)};
}

inline SetPartition to_zero_based(const SetPartition& p) {
    return converted(p, Indexing::zero_based);
}

inline SetPartition to_one_based(const SetPartition& p) {
    return converted(p, Indexing::one_based);
}

struct Arc {
    int left = 0;
    int right = 0;

    bool is_loop() const { return left == right; }

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline std::string to_string(const Arc& a) {
    return "(" + std::to_string(a.left) + "," + std::to_string(a.right) + ")";
}

// Arc diagram of a partition: an arc joins consecutive elements of a
// block, a loop marks a singleton. Invariants: every node is the left end
// of at most one non-loop arc and the right end of at most one, and a
// loop sits only on an otherwise isolated node. Hence a non-loop arc is
// determined by either endpoint, which makes the "innermost"/"greatest"
// selections of the rewriting algorithms well-defined.
struct ArcSet {
    int n = 0;
    Indexing convention = Indexing::one_based;
    std::vector<Arc> arcs;  // sorted

    friend bool operator==(const ArcSet&, const ArcSet&) = default;
};

inline ArcSet arcs_of(const SetPartition& p) {
    ArcSet a{p.n, p.convention, {}};
    for (const auto& b : p.blocks) {
        if (b.size() == 1) {
            a.arcs.push_back(Arc{b[0], b[0]});
        } else {
            for (std::size_t i = 0; i + 1 < b.size(); ++i)
                a.arcs.push_back(Arc{b[i], b[i + 1]});
        }
    }
    std::sort(a.arcs.begin(), a.arcs.end());
    return a;
}

// Checks the ArcSet invariants; throws validation_error on violation.
inline void validate_arc_set(const ArcSet& a) {
    const int lo = ground_min(a.convention);
    const int hi = lo + a.n - 1;
    std::vector<char> left_used(static_cast<std::size_t>(a.n), 0);
    std::vector<char> right_used(static_cast<std::size_t>(a.n), 0);
    std::vector<char> touched(static_cast<std::size_t>(a.n), 0);
    std::vector<char> looped(static_cast<std::size_t>(a.n), 0);
    for (const auto& arc : a.arcs) {
        if (arc.left > arc.right)
            throw validation_error("arcset: arc " + to_string(arc) + " has left > right");
        if (arc.left < lo || arc.right > hi)
            throw validation_error("arcset: arc " + to_string(arc) + " outside ground set");
        std::size_t l = static_cast<std::size_t>(arc.left - lo);
        std::size_t r = static_cast<std::size_t>(arc.right - lo);
        if (arc.is_loop()) {
            if (looped[l])
                throw validation_error("arcset: repeated loop at node " +
                                       std::to_string(arc.left));
            looped[l] = 1;
        } else {
            if (left_used[l])
                throw validation_error("arcset: node " + std::to_string(arc.left) +
                                       " starts two arcs");
            if (right_used[r])
                throw validation_error("arcset: node " + std::to_string(arc.right) +
                                       " ends two arcs");
            left_used[l] = 1;
            right_used[r] = 1;
            touched[l] = touched[r] = 1;
        }
    }
    for (int v = 0; v < a.n; ++v)
        if (looped[static_cast<std::size_t>(v)] && touched[static_cast<std::size_t>(v)])
            throw validation_error("arcset: loop on non-isolated node " +
                                   std::to_string(v + lo));
}

// Blocks are the connected components of the arc graph; an isolated node
// (with or without its loop) is a singleton block.
inline SetPartition partition_from_arcs(const ArcSet& a) {
    validate_arc_set(a);
    const int lo = ground_min(a.convention);
    std::vector<int> parent(static_cast<std::size_t>(a.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& arc : a.arcs) {
        if (arc.is_loop()) continue;
        int ra = find(arc.left - lo), rb = find(arc.right - lo);
        if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
    }
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(a.n));
    for (int v = 0; v < a.n; ++v)
        groups[static_cast<std::size_t>(find(v))].push_back(v + lo);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return make_partition(a.n, std::move(blocks), a.convention);
}

// Number of non-loop arcs equals n - |P|.
inline int non_loop_arc_count(const ArcSet& a) {
    int c = 0;
    for (const auto& arc : a.arcs)
        if (!arc.is_loop()) ++c;
    return c;
}

// Elementwise reflection i -> lo + hi - i; arcs reverse but the crossing
// and nesting structure is preserved.
inline SetPartition reflected(const SetPartition& p) {
    const int lo = ground_min(p.convention);
    const int hi = lo + p.n - 1;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(p.blocks.size());
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int v : b) nb.push_back(lo + hi - v);
        blocks.push_back(std::move(nb));
    }
    return make_partition(p.n, std::move(blocks), p.convention);
}

}  // namespace kcross
