#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcross/colored.hpp"

namespace kcross {

// ---------------------------------------------------------------------------
// Noncrossing partitions <-> (subset, noncrossing partial matching) pairs
// ---------------------------------------------------------------------------

// A subset A of {1,...,n} together with a noncrossing partial matching mu
// whose blocks cover exactly A.
struct MatchingPair {
    int n = 0;
    std::vector<int> A;                  // sorted
    std::vector<std::vector<int>> mu;    // blocks of size 1 or 2, sorted by min

    friend bool operator==(const MatchingPair&, const MatchingPair&) = default;
};

inline MatchingPair make_matching_pair(int n, std::vector<std::vector<int>> mu) {
    if (n < 0) throw validation_error("matching pair: negative ambient size");
    std::vector<int> a;
    for (auto& b : mu) {
        if (b.empty() || b.size() > 2)
            throw validation_error("matching pair: blocks must have size 1 or 2");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 1 || v > n)
                throw validation_error("matching pair: element " + std::to_string(v) +
                                       " outside {1,...," + std::to_string(n) + "}");
            a.push_back(v);
        }
    }
    std::sort(a.begin(), a.end());
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] == a[i + 1])
            throw validation_error("matching pair: element " + std::to_string(a[i]) +
                                   " used twice");
    std::sort(mu.begin(), mu.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j) {
            // strict 2-crossing between blocks {a<b} and {c<d}: a<c<b<d
            if (mu[i].size() == 2 && mu[j].size() == 2 && mu[j][0] < mu[i][1] &&
                mu[i][1] < mu[j][1])
                throw validation_error("matching pair: blocks " +
                                       detail::block_to_string(mu[i]) + " and " +
                                       detail::block_to_string(mu[j]) + " cross");
        }
    return MatchingPair{n, std::move(a), std::move(mu)};
}

// Keeps only the smallest and largest element of every block not
// containing 0. Weight-preserving: |mu| + 1 = |P|.
inline MatchingPair psi(const SetPartition& p) {
    if (p.convention != Indexing::zero_based)
        throw validation_error("psi: partition must be zero-based");
    if (p.n < 1) throw validation_error("psi: empty ground set");
    if (max_chain_size(arcs_of(p), ChainMode::crossing, ChainKind::strict) >= 2)
        throw domain_error("psi: partition has a 2-crossing");
    std::vector<std::vector<int>> mu;
    for (const auto& b : p.blocks) {
        if (b.front() == 0) continue;
        if (b.size() == 1)
            mu.push_back({b.front()});
        else
            mu.push_back({b.front(), b.back()});
    }
    MatchingPair pair = make_matching_pair(p.n - 1, std::move(mu));
    check_internal(static_cast<int>(pair.mu.size()) + 1 == p.block_count(),
                   "psi: weight not preserved");
    return pair;
}

// Blocks of mu grow back to intervals: the block containing 0 is the
// complement of the interval hulls, and every other element joins the
// block whose hull is the smallest interval containing it.
inline SetPartition psi_inv(const MatchingPair& pair) {
    MatchingPair v = make_matching_pair(pair.n, pair.mu);  // revalidate
    const int n = v.n;
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);  // node -> block index
    std::vector<int> hull_len(v.mu.size(), 0);
    for (std::size_t b = 0; b < v.mu.size(); ++b)
        hull_len[b] = v.mu[b].back() - v.mu[b].front() + 1;
    for (int i = 1; i <= n; ++i) {
        int best = -1;
        for (std::size_t b = 0; b < v.mu.size(); ++b) {
            if (v.mu[b].front() <= i && i <= v.mu[b].back() &&
                (best < 0 || hull_len[b] < hull_len[static_cast<std::size_t>(best)]))
                best = static_cast<int>(b);
        }
        owner[static_cast<std::size_t>(i)] = best;
    }
    std::vector<std::vector<int>> blocks(v.mu.size() + 1);
    blocks[0].push_back(0);
    for (int i = 1; i <= n; ++i) {
        int b = owner[static_cast<std::size_t>(i)];
        blocks[static_cast<std::size_t>(b + 1)].push_back(i);
    }
    SetPartition out = make_partition(n + 1, std::move(blocks), Indexing::zero_based);
    check_internal(max_chain_size(arcs_of(out), ChainMode::crossing, ChainKind::strict) < 2,
                   "psi_inv: image is not noncrossing");
    return out;
}

// ---------------------------------------------------------------------------
// The block-count-preserving correspondence Pi_A <-> Pi_|A|
// ---------------------------------------------------------------------------

// Drops the red block and relabels the rest onto {0,...,|A|-1}.
inline std::pair<std::vector<int>, SetPartition> decompose(const SetPartition& p) {
    if (p.convention != Indexing::zero_based)
        throw validation_error("decompose: partition must be zero-based");
    if (p.n < 1) throw validation_error("decompose: empty ground set");
    std::vector<int> a;
    std::vector<std::vector<int>> black;
    for (const auto& b : p.blocks) {
        if (b.front() == 0) continue;
        black.push_back(b);
        for (int v : b) a.push_back(v);
    }
    std::sort(a.begin(), a.end());
    std::vector<int> rank(static_cast<std::size_t>(p.n), -1);
    for (std::size_t i = 0; i < a.size(); ++i)
        rank[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    for (auto& b : black)
        for (auto& v : b) v = rank[static_cast<std::size_t>(v)];
    SetPartition q =
        make_partition(static_cast<int>(a.size()), std::move(black), Indexing::zero_based);
    return {std::move(a), std::move(q)};
}

inline SetPartition compose(const std::vector<int>& a, const SetPartition& q, int n) {
    if (q.convention != Indexing::zero_based)
        throw validation_error("compose: partition must be zero-based");
    if (static_cast<int>(a.size()) != q.n)
        throw validation_error("compose: |A| = " + std::to_string(a.size()) +
                               " does not match ground size " + std::to_string(q.n));
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (int v : sorted) {
        if (v < 1 || v >= n)
            throw validation_error("compose: element " + std::to_string(v) +
                                   " outside {1,...," + std::to_string(n - 1) + "}");
        in_a[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> red;
    for (int v = 0; v < n; ++v)
        if (!in_a[static_cast<std::size_t>(v)]) red.push_back(v);
    blocks.push_back(std::move(red));
    for (const auto& b : q.blocks) {
        std::vector<int> nb;
        for (int v : b) nb.push_back(sorted[static_cast<std::size_t>(v)]);
        blocks.push_back(std::move(nb));
    }
    return make_partition(n, std::move(blocks), Indexing::zero_based);
}

// ---------------------------------------------------------------------------
// The rewriting machine behind Phi
// ---------------------------------------------------------------------------

enum class StepKind {
    enhanced_left_shift,
    cyclic_rotation,
    undo_cyclic_rotation,
    undo_enhanced_left_shift,
};

inline std::string to_string(StepKind k) {
    switch (k) {
        case StepKind::enhanced_left_shift: return "enhanced-left-shift";
        case StepKind::cyclic_rotation: return "cyclic-rotation";
        case StepKind::undo_cyclic_rotation: return "undo-cyclic-rotation";
        case StepKind::undo_enhanced_left_shift: return "undo-enhanced-left-shift";
    }
    return "?";
}

// One rewrite: the diagrams before and after, the pivot node (-1 for the
// rotation, which has none), and the arcs of the pattern that was rewired.
struct Step {
    StepKind kind = StepKind::enhanced_left_shift;
    SetPartition before;
    SetPartition after;
    int node = -1;
    std::vector<Arc> selected;
};

namespace detail {

// First chain of `size` arcs found when the right-endpoint word is
// explored in lexicographic order (ascending for the innermost chain,
// descending for the greatest). Candidates are sorted by right endpoint;
// a chain needs strictly increasing lefts and rights. `first_right_bound`
// additionally caps every left endpoint by the first chosen right
// endpoint (the k-crossing condition i_k < j_1) and `must_include`, when
// set, forces one specific arc into the chain.
struct ChainSearch {
    const std::vector<Arc>& candidates;
    int size;
    bool greatest;
    bool first_right_bound = false;
    std::optional<Arc> must_include;

    std::optional<std::vector<Arc>> run() const {
        std::vector<Arc> chain;
        if (rec(chain, 0, -1)) return chain;
        return std::nullopt;
    }

private:
    bool rec(std::vector<Arc>& chain, std::size_t from, int first_right) const {
        if (static_cast<int>(chain.size()) == size)
            return !must_include ||
                   std::find(chain.begin(), chain.end(), *must_include) != chain.end();
        const std::size_t m = candidates.size();
        for (std::size_t step = 0; step < (m >= from ? m - from : 0); ++step) {
            std::size_t i = greatest ? m - 1 - step : from + step;
            if (i < from) break;
            const Arc& c = candidates[i];
            if (!chain.empty()) {
                if (c.right <= chain.back().right || c.left <= chain.back().left) continue;
            }
            if (first_right_bound) {
                int bound = chain.empty() ? c.right : first_right;
                if (c.left >= bound) continue;
            }
            if (must_include && *must_include != c && must_include->right < c.right &&
                std::find(chain.begin(), chain.end(), *must_include) == chain.end())
                continue;  // rights only grow, the required arc can no longer fit
            chain.push_back(c);
            if (rec(chain, i + 1, chain.size() == 1 ? c.right : first_right)) return true;
            chain.pop_back();
        }
        return false;
    }
};

inline std::vector<Arc> sorted_by_right(std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.right < b.right; });
    return arcs;
}

// Innermost (lexicographically smallest right-endpoint word) strict
// chain of `size` black arcs all strictly spanning node a.
inline std::optional<std::vector<Arc>> innermost_black_crossing_over(const ColoredDiagram& d,
                                                                     int a, int size) {
    std::vector<Arc> pool;
    for (const Arc& arc : d.black_arcs())
        if (arc.left < a && a < arc.right) pool.push_back(arc);
    pool = sorted_by_right(std::move(pool));
    return ChainSearch{pool, size, /*greatest=*/false, false, std::nullopt}.run();
}

// Greatest strict k-crossing (over all arcs, any color) containing the
// given arc.
inline std::optional<std::vector<Arc>> greatest_crossing_containing(const ColoredDiagram& d,
                                                                    const Arc& arc, int k) {
    std::vector<Arc> pool;
    for (const Arc& c : d.arcs.arcs)
        if (!c.is_loop()) pool.push_back(c);
    pool = sorted_by_right(std::move(pool));
    return ChainSearch{pool, k, /*greatest=*/true, /*first_right_bound=*/true, arc}.run();
}

// The unique black non-loop arc ending (resp. starting) at a node.
inline std::optional<Arc> black_arc_ending_at(const ColoredDiagram& d, int node) {
    for (const Arc& c : d.black_arcs())
        if (!c.is_loop() && c.right == node) return c;
    return std::nullopt;
}

inline std::optional<Arc> black_arc_starting_at(const ColoredDiagram& d, int node) {
    for (const Arc& c : d.black_arcs())
        if (!c.is_loop() && c.left == node) return c;
    return std::nullopt;
}

// Outermost (lexicographically greatest right-endpoint word) black weak
// k-crossing with the given center, as the full arc list
// (i_1,a),(i_2,j_1),...,(i_{k-1},j_{k-2}),(a,j_{k-1}).
inline std::optional<std::vector<Arc>> outermost_weak_crossing_with_center(
    const ColoredDiagram& d, int a, int k) {
    auto end_arc = black_arc_ending_at(d, a);
    auto start_arc = black_arc_starting_at(d, a);
    if (!end_arc || !start_arc) return std::nullopt;
    std::vector<Arc> pool;
    for (const Arc& c : d.black_arcs())
        if (c.left > end_arc->left && c.left < a && c.right > a && c.right < start_arc->right)
            pool.push_back(c);
    pool = sorted_by_right(std::move(pool));
    auto middle = ChainSearch{pool, k - 2, /*greatest=*/true, false, std::nullopt}.run();
    if (!middle) return std::nullopt;
    std::vector<Arc> out{*end_arc};
    out.insert(out.end(), middle->begin(), middle->end());
    out.push_back(*start_arc);
    return out;
}

inline std::vector<int> weak_crossing_centers(const ColoredDiagram& d, int k) {
    std::vector<int> centers;
    for (int a = 1; a < d.n(); ++a)
        if (outermost_weak_crossing_with_center(d, a, k)) centers.push_back(a);
    return centers;
}

// Red arc with the greatest right endpoint among those lying in some
// strict k-crossing; unique because right endpoints determine arcs.
inline std::optional<Arc> rightmost_red_arc_in_crossing(const ColoredDiagram& d, int k) {
    std::vector<Arc> reds;
    for (const Arc& c : d.arcs.arcs)
        if (!c.is_loop() && d.is_red_arc(c)) reds.push_back(c);
    std::sort(reds.begin(), reds.end(),
              [](const Arc& a, const Arc& b) { return a.right > b.right; });
    for (const Arc& c : reds)
        if (greatest_crossing_containing(d, c, k)) return c;
    return std::nullopt;
}

inline int max_black_strict_crossing(const ColoredDiagram& d) {
    return max_chain_size(d.black_arc_set(), ChainMode::crossing, ChainKind::strict);
}

inline ColoredDiagram rebuild(const ColoredDiagram& d, const std::vector<Arc>& remove,
                              const std::vector<Arc>& add) {
    std::vector<Arc> arcs = d.arcs.arcs;
    for (const Arc& r : remove) {
        auto it = std::find(arcs.begin(), arcs.end(), r);
        check_internal(it != arcs.end(), "rewrite: arc " + to_string(r) + " not present");
        arcs.erase(it);
    }
    arcs.insert(arcs.end(), add.begin(), add.end());
    return ColoredDiagram::from_raw_arcs(d.n(), std::move(arcs));
}

inline int red_predecessor(const ColoredDiagram& d, int a) {
    int p = -1;
    for (int v : d.red_block) {
        if (v >= a) break;
        p = v;
    }
    return p;
}

inline int red_successor(const ColoredDiagram& d, int a) {
    for (int v : d.red_block)
        if (v > a) return v;
    return -1;
}

}  // namespace detail

// `Enhanced left shift': the smallest red node a under a black strict
// (k-1)-crossing becomes the center of a black weak k-crossing built from
// the innermost such crossing, and a leaves the red block.
inline std::pair<ColoredDiagram, Step> enhanced_left_shift(const ColoredDiagram& d, int k) {
    if (k < 2) throw validation_error("enhanced_left_shift: k must be at least 2");
    std::vector<int> reds = red_nodes_under_black_crossing(d, k - 1);
    if (reds.empty())
        throw domain_error("enhanced_left_shift: no red node under a black " +
                           std::to_string(k - 1) + "-crossing");
    const int a = reds.front();
    check_internal(a > 0, "enhanced_left_shift: node 0 selected");
    auto crossing = detail::innermost_black_crossing_over(d, a, k - 1);
    check_internal(crossing.has_value(), "enhanced_left_shift: selection lost the crossing");
    const std::vector<Arc>& x = *crossing;

    std::vector<Arc> remove = x, add;
    add.push_back(Arc{x.front().left, a});
    for (std::size_t s = 1; s < x.size(); ++s)
        add.push_back(Arc{x[s].left, x[s - 1].right});
    add.push_back(Arc{a, x.back().right});

    int pred = detail::red_predecessor(d, a);
    check_internal(pred >= 0, "enhanced_left_shift: red node without predecessor");
    remove.push_back(Arc{pred, a});
    int succ = detail::red_successor(d, a);
    if (succ >= 0) {
        remove.push_back(Arc{a, succ});
        add.push_back(Arc{pred, succ});
    }

    ColoredDiagram out = detail::rebuild(d, remove, add);
    check_internal(detail::max_black_strict_crossing(out) < k,
                   "enhanced left shift created a black k-crossing");
    check_internal(out.red_block.size() + 1 == d.red_block.size(),
                   "enhanced left shift did not shrink the red block by one");
    return {out, Step{StepKind::enhanced_left_shift, d.partition(), out.partition(), a, x}};
}

// `Cyclic rotation': the greatest k-crossing through the rightmost red
// arc lying in any k-crossing has its right endpoints cycled; the red arc
// trades its right end j_p for j_1.
inline std::pair<ColoredDiagram, Step> cyclic_rotation(const ColoredDiagram& d, int k) {
    if (k < 2) throw validation_error("cyclic_rotation: k must be at least 2");
    std::optional<Arc> pivot = detail::rightmost_red_arc_in_crossing(d, k);
    if (!pivot)
        throw domain_error("cyclic_rotation: no red arc lies in a " + std::to_string(k) +
                           "-crossing");
    auto crossing = detail::greatest_crossing_containing(d, *pivot, k);
    check_internal(crossing.has_value(), "cyclic_rotation: selection lost the crossing");
    const std::vector<Arc>& x = *crossing;
    std::size_t p = static_cast<std::size_t>(
        std::find(x.begin(), x.end(), *pivot) - x.begin());
    check_internal(p >= 1, "cyclic_rotation: red arc in first position");

    std::vector<Arc> remove(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    std::vector<Arc> add;
    for (std::size_t s = 0; s < p; ++s) add.push_back(Arc{x[s].left, x[s + 1].right});
    add.push_back(Arc{x[p].left, x[0].right});

    ColoredDiagram out = detail::rebuild(d, remove, add);
    check_internal(detail::max_black_strict_crossing(out) < k,
                   "cyclic rotation created a black k-crossing");
    return {out, Step{StepKind::cyclic_rotation, d.partition(), out.partition(), -1, x}};
}

// Inverse of the rotation: the red arc (a',a) below the innermost black
// (k-1)-crossing covering a is woven back into a k-crossing.
inline std::pair<ColoredDiagram, Step> undo_cyclic_rotation(const ColoredDiagram& d, int k) {
    if (k < 2) throw validation_error("undo_cyclic_rotation: k must be at least 2");
    std::vector<int> reds = red_nodes_under_black_crossing(d, k - 1);
    if (reds.empty())
        throw domain_error("undo_cyclic_rotation: no red node under a black " +
                           std::to_string(k - 1) + "-crossing");
    const int a = reds.front();
    const int ap = detail::red_predecessor(d, a);
    check_internal(ap >= 0, "undo_cyclic_rotation: red node without predecessor");
    auto crossing = detail::innermost_black_crossing_over(d, a, k - 1);
    check_internal(crossing.has_value(), "undo_cyclic_rotation: selection lost the crossing");
    const std::vector<Arc>& x = *crossing;
    if (ap < x.front().left)
        throw domain_error("undo_cyclic_rotation: no index t with i_t < a' (input outside "
                           "the image of the rotation)");
    std::size_t t = 0;  // 1-based position with i_t < a' < i_{t+1}, i_k = a sentinel
    for (std::size_t s = 0; s < x.size(); ++s)
        if (x[s].left < ap) t = s + 1;

    std::vector<Arc> remove(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(t));
    remove.push_back(Arc{ap, a});
    std::vector<Arc> add;
    add.push_back(Arc{x.front().left, a});
    for (std::size_t s = 1; s < t; ++s) add.push_back(Arc{x[s].left, x[s - 1].right});
    add.push_back(Arc{ap, x[t - 1].right});

    // the rewired pattern left to right, red arc in position t+1
    std::vector<Arc> selected(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(t));
    selected.push_back(Arc{ap, a});
    selected.insert(selected.end(), x.begin() + static_cast<std::ptrdiff_t>(t), x.end());

    ColoredDiagram out = detail::rebuild(d, remove, add);
    check_internal(detail::max_black_strict_crossing(out) < k,
                   "undoing a cyclic rotation created a black k-crossing");
    return {out,
            Step{StepKind::undo_cyclic_rotation, d.partition(), out.partition(), a, selected}};
}

// Inverse of the shift: the largest center of a black weak k-crossing is
// recolored red and its outermost weak k-crossing collapses back to a
// (k-1)-crossing.
inline std::pair<ColoredDiagram, Step> undo_enhanced_left_shift(const ColoredDiagram& d,
                                                                int k) {
    if (k < 2) throw validation_error("undo_enhanced_left_shift: k must be at least 2");
    std::vector<int> centers = detail::weak_crossing_centers(d, k);
    if (centers.empty())
        throw domain_error("undo_enhanced_left_shift: no black weak " + std::to_string(k) +
                           "-crossing");
    const int a = centers.back();
    auto crossing = detail::outermost_weak_crossing_with_center(d, a, k);
    check_internal(crossing.has_value(), "undo_enhanced_left_shift: selection lost the "
                                         "crossing");
    const std::vector<Arc>& x = *crossing;

    std::vector<Arc> remove = x, add;
    for (std::size_t s = 0; s + 1 < x.size(); ++s)
        add.push_back(Arc{x[s].left, x[s + 1].right});

    int pred = detail::red_predecessor(d, a);
    check_internal(pred >= 0, "undo_enhanced_left_shift: no red node below the center");
    int succ = detail::red_successor(d, a);
    if (succ >= 0) {
        remove.push_back(Arc{pred, succ});
        add.push_back(Arc{pred, a});
        add.push_back(Arc{a, succ});
    } else {
        add.push_back(Arc{pred, a});
    }

    ColoredDiagram out = detail::rebuild(d, remove, add);
    check_internal(detail::max_black_strict_crossing(out) < k,
                   "undoing an enhanced left shift created a black k-crossing");
    check_internal(out.red_block.size() == d.red_block.size() + 1,
                   "undoing an enhanced left shift did not grow the red block by one");
    return {out, Step{StepKind::undo_enhanced_left_shift, d.partition(), out.partition(), a,
                      x}};
}

// ---------------------------------------------------------------------------
// Phi and its inverse
// ---------------------------------------------------------------------------

struct BijectionResult {
    SetPartition partition;
    std::vector<Step> trace;
};

namespace detail {

inline int max_black_enhanced_crossing(const ColoredDiagram& d) {
    return max_chain_size(d.black_arc_set(), ChainMode::crossing, ChainKind::enhanced);
}

}  // namespace detail

// Weight-preserving bijection from the partitions without black enhanced
// k-crossings onto the k-noncrossing partitions: all shifts first, then
// all rotations.
inline BijectionResult phi(const SetPartition& p, int k) {
    if (k < 2) throw validation_error("phi: k must be at least 2");
    ColoredDiagram d = ColoredDiagram::of(p);
    if (detail::max_black_enhanced_crossing(d) >= k)
        throw domain_error("phi: partition has a black enhanced " + std::to_string(k) +
                           "-crossing");
    BijectionResult result{p, {}};
    if (detail::max_black_enhanced_crossing(d) < k - 1) return result;  // already done

    int cap_a = static_cast<int>(d.red_block.size()) - 1;
    int steps = 0;
    while (!red_nodes_under_black_crossing(d, k - 1).empty()) {
        check_internal(++steps <= cap_a, "phi: shift phase exceeded its cap");
        auto [next, step] = enhanced_left_shift(d, k);
        d = std::move(next);
        result.trace.push_back(std::move(step));
    }

    const int cap_b = p.n * p.n;
    steps = 0;
    int prev_right = p.n;  // the rotated red arc moves strictly left
    while (auto pivot = detail::rightmost_red_arc_in_crossing(d, k)) {
        check_internal(++steps <= cap_b, "phi: rotation phase exceeded its cap");
        check_internal(pivot->right < prev_right,
                       "phi: rotated red arc did not move strictly left");
        prev_right = pivot->right;
        auto [next, step] = cyclic_rotation(d, k);
        d = std::move(next);
        result.trace.push_back(std::move(step));
    }

    result.partition = d.partition();
    check_internal(
        max_chain_size(d.arcs, ChainMode::crossing, ChainKind::strict) < k,
        "phi: image has a k-crossing");
    check_internal(result.partition.block_count() == p.block_count(),
                   "phi: weight not preserved");
    return result;
}

inline BijectionResult phi_inv(const SetPartition& p, int k) {
    if (k < 2) throw validation_error("phi_inv: k must be at least 2");
    ColoredDiagram d = ColoredDiagram::of(p);
    if (max_chain_size(d.arcs, ChainMode::crossing, ChainKind::strict) >= k)
        throw domain_error("phi_inv: partition has a " + std::to_string(k) + "-crossing");
    BijectionResult result{p, {}};
    if (detail::max_black_enhanced_crossing(d) < k - 1) return result;  // already done

    const int cap_a = p.n * p.n;
    int steps = 0;
    while (!red_nodes_under_black_crossing(d, k - 1).empty()) {
        check_internal(++steps <= cap_a, "phi_inv: unrotation phase exceeded its cap");
        auto [next, step] = undo_cyclic_rotation(d, k);
        d = std::move(next);
        result.trace.push_back(std::move(step));
    }

    const int cap_b = p.n;
    steps = 0;
    while (!detail::weak_crossing_centers(d, k).empty()) {
        check_internal(++steps <= cap_b, "phi_inv: unshift phase exceeded its cap");
        auto [next, step] = undo_enhanced_left_shift(d, k);
        d = std::move(next);
        result.trace.push_back(std::move(step));
    }

    result.partition = d.partition();
    check_internal(detail::max_black_enhanced_crossing(d) < k,
                   "phi_inv: image has a black enhanced k-crossing");
    check_internal(result.partition.block_count() == p.block_count(),
                   "phi_inv: weight not preserved");
    return result;
}

}  // namespace kcross
