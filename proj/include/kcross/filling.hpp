#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "kcross/chains.hpp"
#include "kcross/partition.hpp"

namespace kcross {

struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Sparse 01-filling of the staircase shape of the given order: rows
// numbered top to bottom, columns left to right, row r holding cells
// (r,1)..(r,r). Validity of a cell is the single test col <= row.
struct TriangularFilling {
    int order = 0;
    std::vector<Cell> ones;  // sorted, duplicate-free

    friend bool operator==(const TriangularFilling&, const TriangularFilling&) = default;
};

inline TriangularFilling make_filling(int order, std::vector<Cell> ones) {
    if (order < 0) throw validation_error("filling: negative order");
    std::sort(ones.begin(), ones.end());
    for (std::size_t i = 0; i < ones.size(); ++i) {
        const Cell& c = ones[i];
        if (c.col < 1 || c.col > c.row || c.row > order)
            throw validation_error("filling: cell (" + std::to_string(c.row) + "," +
                                   std::to_string(c.col) + ") outside the shape");
        if (i > 0 && ones[i - 1] == c)
            throw validation_error("filling: duplicate cell (" + std::to_string(c.row) +
                                   "," + std::to_string(c.col) + ")");
    }
    return TriangularFilling{order, std::move(ones)};
}

inline bool rows_and_cols_simple(const TriangularFilling& f) {
    std::vector<char> row(static_cast<std::size_t>(f.order) + 1, 0);
    std::vector<char> col(static_cast<std::size_t>(f.order) + 1, 0);
    for (const Cell& c : f.ones) {
        if (row[static_cast<std::size_t>(c.row)]++) return false;
        if (col[static_cast<std::size_t>(c.col)]++) return false;
    }
    return true;
}

// Arc (i,j), i<j, becomes a one in cell (j-1,i); loops are dropped. The
// image lives in the staircase of order n for a partition of [n+1].
inline TriangularFilling map_C(const SetPartition& p) {
    if (p.convention != Indexing::one_based)
        throw validation_error("map_C: partition must be one-based");
    std::vector<Cell> ones;
    for (const Arc& a : arcs_of(p).arcs)
        if (!a.is_loop()) ones.push_back(Cell{a.right - 1, a.left});
    return make_filling(p.n - 1, std::move(ones));
}

inline SetPartition inv_C(const TriangularFilling& f) {
    if (!rows_and_cols_simple(f))
        throw validation_error("inv_C: a row or column holds two ones");
    std::vector<Arc> arcs;
    for (const Cell& c : f.ones) arcs.push_back(Arc{c.col, c.row + 1});
    std::sort(arcs.begin(), arcs.end());
    return partition_from_arcs(ArcSet{f.order + 1, Indexing::one_based, std::move(arcs)});
}

// Arc (i,j), i<=j, becomes a one in cell (j,i); loops land on the
// diagonal. Every node of [n] is an arc endpoint, so no corner hook of
// the image is zero.
inline TriangularFilling map_E(const SetPartition& p) {
    if (p.convention != Indexing::one_based)
        throw validation_error("map_E: partition must be one-based");
    std::vector<Cell> ones;
    for (const Arc& a : arcs_of(p).arcs) ones.push_back(Cell{a.right, a.left});
    return make_filling(p.n, std::move(ones));
}

inline SetPartition inv_E(const TriangularFilling& f) {
    if (!rows_and_cols_simple(f))
        throw validation_error("inv_E: a row or column holds two ones");
    std::vector<Arc> arcs;
    for (const Cell& c : f.ones) arcs.push_back(Arc{c.col, c.row});
    std::sort(arcs.begin(), arcs.end());
    return partition_from_arcs(ArcSet{f.order, Indexing::one_based, std::move(arcs)});
}

// Longest proper SE-chain: ones strictly increasing in both coordinates
// whose bounding rectangle stays inside the shape, i.e. c_k <= r_1. Any
// such chain has all columns <= b and all rows >= b for b = c_k, so the
// window scan is exact (the transpose of the crossing-chain program).
inline int max_proper_se_chain(const TriangularFilling& f) {
    std::vector<Arc> as_arcs;  // reuse the arc chain helper: (col,row) pairs
    as_arcs.reserve(f.ones.size());
    for (const Cell& c : f.ones) as_arcs.push_back(Arc{c.col, c.row});
    std::sort(as_arcs.begin(), as_arcs.end());
    int best = 0;
    for (int b = 1; b <= f.order; ++b) {
        std::vector<Arc> window;
        for (const Arc& a : as_arcs)
            if (a.left <= b && b <= a.right) window.push_back(a);
        if (static_cast<int>(window.size()) <= best) continue;
        // lefts (columns) may repeat only across windows, not inside a
        // chain; longest_increasing_arcs needs strictly increasing lefts,
        // so run the generic LIS over (col asc, row desc) ordering.
        std::sort(window.begin(), window.end(), [](const Arc& x, const Arc& y) {
            return x.left != y.left ? x.left < y.left : x.right > y.right;
        });
        const std::size_t m = window.size();
        std::vector<int> len(m, 1);
        int local = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (window[j].left < window[i].left && window[j].right < window[i].right)
                    len[i] = std::max(len[i], len[j] + 1);
            local = std::max(local, len[i]);
        }
        best = std::max(best, local);
    }
    return best;
}

struct FillingClassFlags {
    bool in_c_class = false;  // row-simple, column-simple, no proper SE k-chain
    bool in_e_class = false;  // additionally no zero corner hook
};

// Corner hook j is the union of row j and column j; nonzero if it holds a one.
inline std::vector<int> nonzero_corner_hooks(const TriangularFilling& f) {
    std::vector<char> hit(static_cast<std::size_t>(f.order) + 1, 0);
    for (const Cell& c : f.ones) {
        hit[static_cast<std::size_t>(c.row)] = 1;
        hit[static_cast<std::size_t>(c.col)] = 1;
    }
    std::vector<int> out;
    for (int j = 1; j <= f.order; ++j)
        if (hit[static_cast<std::size_t>(j)]) out.push_back(j);
    return out;
}

inline FillingClassFlags filling_class(const TriangularFilling& f, int k) {
    if (k < 2) throw validation_error("filling_class: k must be at least 2");
    FillingClassFlags flags;
    flags.in_c_class = rows_and_cols_simple(f) && max_proper_se_chain(f) < k;
    flags.in_e_class = flags.in_c_class &&
                       static_cast<int>(nonzero_corner_hooks(f).size()) == f.order;
    return flags;
}

// Sequence of positive integers with a fixed sum.
struct Composition {
    std::vector<int> parts;
    int target = 0;

    friend bool operator==(const Composition&, const Composition&) = default;
};

inline Composition make_composition(std::vector<int> parts, int target) {
    int sum = 0;
    for (int p : parts) {
        if (p < 1) throw validation_error("composition: nonpositive part");
        sum += p;
    }
    if (sum != target)
        throw validation_error("composition: parts sum to " + std::to_string(sum) +
                               ", expected " + std::to_string(target));
    return Composition{std::move(parts), target};
}

// Splits a row/column-simple filling of order n into the composition of
// n+1 recording its nonzero corner hooks and the compressed filling with
// those hooks deleted. Weight (number of ones) is preserved.
inline std::pair<Composition, TriangularFilling> map_f(const TriangularFilling& f) {
    if (!rows_and_cols_simple(f))
        throw validation_error("map_f: a row or column holds two ones");
    std::vector<int> hooks = nonzero_corner_hooks(f);
    std::vector<int> parts;
    int prev = 0;
    for (int h : hooks) {
        parts.push_back(h - prev);
        prev = h;
    }
    parts.push_back(f.order + 1 - prev);
    std::vector<int> rank(static_cast<std::size_t>(f.order) + 1, 0);
    for (std::size_t i = 0; i < hooks.size(); ++i)
        rank[static_cast<std::size_t>(hooks[i])] = static_cast<int>(i) + 1;
    std::vector<Cell> ones;
    for (const Cell& c : f.ones)
        ones.push_back(Cell{rank[static_cast<std::size_t>(c.row)],
                            rank[static_cast<std::size_t>(c.col)]});
    return {make_composition(std::move(parts), f.order + 1),
            make_filling(static_cast<int>(hooks.size()), std::move(ones))};
}

// Re-expands: index m of the compressed filling goes to the m-th partial
// sum of the composition; the inserted hooks stay empty.
inline TriangularFilling inv_f(const Composition& c, const TriangularFilling& e) {
    if (static_cast<int>(c.parts.size()) != e.order + 1)
        throw validation_error("inv_f: composition has " + std::to_string(c.parts.size()) +
                               " parts, filling of order " + std::to_string(e.order) +
                               " needs " + std::to_string(e.order + 1));
    if (static_cast<int>(nonzero_corner_hooks(e).size()) != e.order)
        throw validation_error("inv_f: filling has a zero corner hook");
    std::vector<int> partial{0};
    for (int p : c.parts) {
        if (p < 1) throw validation_error("inv_f: nonpositive composition part");
        partial.push_back(partial.back() + p);
    }
    const int n = c.target - 1;
    std::vector<Cell> ones;
    for (const Cell& cell : e.ones)
        ones.push_back(Cell{partial[static_cast<std::size_t>(cell.row)],
                            partial[static_cast<std::size_t>(cell.col)]});
    return make_filling(n, std::move(ones));
}

inline int one_count(const TriangularFilling& f) { return static_cast<int>(f.ones.size()); }

// Enumerates every row- and column-simple filling of the staircase of
// the given order (there are Bell(order+1) of them), row by row in a
// fixed order.
template <class F>
void for_each_simple_filling(int order, F&& fn) {
    std::vector<Cell> ones;
    std::vector<char> col_used(static_cast<std::size_t>(order) + 1, 0);
    auto rec = [&](auto&& self, int row) -> void {
        if (row > order) {
            fn(TriangularFilling{order, ones});
            return;
        }
        self(self, row + 1);  // row left empty
        for (int c = 1; c <= row; ++c) {
            if (col_used[static_cast<std::size_t>(c)]) continue;
            col_used[static_cast<std::size_t>(c)] = 1;
            ones.push_back(Cell{row, c});
            self(self, row + 1);
            ones.pop_back();
            col_used[static_cast<std::size_t>(c)] = 0;
        }
    };
    rec(rec, 1);
}

}  // namespace kcross
