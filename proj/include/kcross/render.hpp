#pragma once

#include <string>

#include "kcross/colored.hpp"
#include "kcross/filling.hpp"
#include "kcross/partition.hpp"

namespace kcross {

// Plain-text arc diagram. One line of node labels, one marker line
// ('*' red node, 'o' loop), then one line per arc drawn between its
// endpoints; red arcs are filled with '=' instead of '-' since color is
// unavailable in text.
inline std::string render_arcs(const SetPartition& p) {
    const int lo = ground_min(p.convention);
    const int width = 4;
    auto col = [&](int v) { return (v - lo) * width; };
    std::string labels, markers(static_cast<std::size_t>(p.n * width), ' ');
    for (int v = lo; v < lo + p.n; ++v) {
        std::string s = std::to_string(v);
        s.resize(static_cast<std::size_t>(width), ' ');
        labels += s;
    }
    while (!labels.empty() && labels.back() == ' ') labels.pop_back();

    bool colored = p.convention == Indexing::zero_based && p.n > 0;
    std::vector<int> red;
    if (colored) {
        for (const auto& b : p.blocks)
            if (b.front() == 0) red = b;
    }
    auto is_red = [&](int v) {
        return std::binary_search(red.begin(), red.end(), v);
    };

    ArcSet arcs = arcs_of(p);
    for (const Arc& a : arcs.arcs)
        if (a.is_loop()) markers[static_cast<std::size_t>(col(a.left))] = 'o';
    if (colored)
        for (int v : red) markers[static_cast<std::size_t>(col(v))] = '*';
    while (!markers.empty() && markers.back() == ' ') markers.pop_back();

    std::string out = labels + "\n";
    if (!markers.empty()) out += markers + "\n";
    for (const Arc& a : arcs.arcs) {
        if (a.is_loop()) continue;
        bool red_arc = colored && is_red(a.left) && is_red(a.right);
        std::string line(static_cast<std::size_t>(col(a.right)) + 1, red_arc ? '=' : '-');
        for (int i = 0; i < col(a.left); ++i) line[static_cast<std::size_t>(i)] = ' ';
        line[static_cast<std::size_t>(col(a.left))] = '+';
        line[static_cast<std::size_t>(col(a.right))] = '+';
        out += line + "\n";
    }
    return out;
}

// Staircase grid, one row per line: bullet for a one, middle dot for an
// empty cell.
inline std::string render_filling(const TriangularFilling& f) {
    std::vector<std::vector<char>> grid(static_cast<std::size_t>(f.order));
    for (int r = 1; r <= f.order; ++r)
        grid[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(r), 0);
    for (const Cell& c : f.ones)
        grid[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = 1;
    std::string out;
    for (int r = 1; r <= f.order; ++r) {
        for (int c = 1; c <= r; ++c) {
            if (c > 1) out += ' ';
            out += grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]
                       ? "•"
                       : "·";
        }
        out += '\n';
    }
    return out;
}

}  // namespace kcross
