#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "l1embed/errors.hpp"
#include "l1embed/graph.hpp"
#include "l1embed/gromov_hausdorff.hpp"

namespace l1embed {

struct ColoringResult {
    int chi = 0;
    std::vector<int> colors;  // normalized: colors appear in first-use order
};

namespace detail {

// Vertices sorted by descending degree, ties by index.
inline std::vector<int> degree_order(const SimpleGraph& g) {
    std::vector<int> order(static_cast<size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

inline bool k_colorable(const SimpleGraph& g, const std::vector<int>& order, int k,
                        std::vector<int>& coloring) {
    const int n = g.size();
    std::vector<int> color(static_cast<size_t>(n), -1);
    auto dfs = [&](auto&& self, int pos, int used) -> bool {
        if (pos == n) return true;
        const int vertex = order[static_cast<size_t>(pos)];
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (std::uint64_t m = g.neighbors_mask(vertex); m && ok; m &= m - 1) {
                const int nb = std::countr_zero(m);
                if (color[nb] == c) ok = false;
            }
            if (!ok) continue;
            color[vertex] = c;
            if (self(self, pos + 1, std::max(used, c + 1))) return true;
            color[vertex] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0, 0)) return false;
    coloring = color;
    return true;
}

// Greedy clique in degree order: a cheap but certified lower bound.
inline int greedy_clique_bound(const SimpleGraph& g, const std::vector<int>& order) {
    std::vector<int> clique;
    for (int v : order) {
        bool joins = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                joins = false;
                break;
            }
        if (joins) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

inline void normalize_colors(std::vector<int>& colors) {
    std::vector<int> remap(colors.size(), -1);
    int next = 0;
    for (int& c : colors) {
        if (remap[static_cast<size_t>(c)] < 0) remap[static_cast<size_t>(c)] = next++;
        c = remap[static_cast<size_t>(c)];
    }
}

}  // namespace detail

// Exact chromatic number with witness coloring. Greedy first-fit supplies the
// upper bound, a greedy clique the lower bound, and exhaustive backtracking
// closes the gap from below, so the "no (chi-1)-coloring" claim is certified.
inline ColoringResult chromatic_number(const SimpleGraph& g, int size_limit = 16) {
    if (g.size() < 1) throw DomainError("chromatic number needs a nonempty vertex set");
    if (g.size() > size_limit)
        throw BudgetError("SizeLimitExceeded: chromatic search capped at " +
                          std::to_string(size_limit) + " vertices");
    const auto order = detail::degree_order(g);

    std::vector<int> greedy(static_cast<size_t>(g.size()), -1);
    int upper = 0;
    for (int v : order) {
        int c = 0;
        for (;; ++c) {
            bool clash = false;
            for (std::uint64_t m = g.neighbors_mask(v); m && !clash; m &= m - 1)
                clash = greedy[std::countr_zero(m)] == c;
            if (!clash) break;
        }
        greedy[static_cast<size_t>(v)] = c;
        upper = std::max(upper, c + 1);
    }

    const int lower = detail::greedy_clique_bound(g, order);
    std::vector<int> colors = greedy;
    int chi = upper;
    for (int k = lower; k < upper; ++k)
        if (detail::k_colorable(g, order, k, colors)) {
            chi = k;
            break;
        }
    detail::normalize_colors(colors);
    return {chi, colors};
}

struct CliqueCoverResult {
    int theta = 0;
    std::vector<std::vector<int>> cliques;
};

// theta(G) = chi(complement G); the color classes of the complement coloring
// are cliques of G and are re-verified as such.
inline CliqueCoverResult clique_cover_number(const SimpleGraph& g, int size_limit = 16) {
    const ColoringResult coloring = chromatic_number(complement(g), size_limit);
    CliqueCoverResult result;
    result.theta = coloring.chi;
    result.cliques.assign(static_cast<size_t>(coloring.chi), {});
    for (int v = 0; v < g.size(); ++v)
        result.cliques[static_cast<size_t>(coloring.colors[static_cast<size_t>(v)])].push_back(v);
    for (const auto& clique : result.cliques)
        for (size_t a = 0; a < clique.size(); ++a)
            for (size_t b = a + 1; b < clique.size(); ++b)
                if (!g.adjacent(clique[a], clique[b]))
                    throw InternalCheckError("clique cover class is not a clique");
    return result;
}

namespace detail {

// Largest k with 2 d_GH(a Delta_k, V) = b, plus one. The predicate is
// monotone in k (a consequence of the partition criterion), so the scan walks
// k upward and stops at the first strict drop below b; past #V + 1 the
// closed form forces a < b, so the loop always terminates there.
inline int gh_distance_scan(const FiniteMetricSpace& v, const TwoDistanceParams& p,
                            int gh_limit) {
    for (int k = 1; k <= v.size() + 1; ++k) {
        const Rational twice = gh_distance_exact(simplex(k, p.a), v, gh_limit).distance * 2;
        if (twice > p.b)
            throw InternalCheckError("2 d_GH exceeded b in a two-distance scan");
        if (twice < p.b) return k;
    }
    throw InternalCheckError("two-distance scan failed to terminate");
}

}  // namespace detail

// chi(G) through distances alone: adjacent vertices at b, the rest at a.
inline int chromatic_via_gh(const SimpleGraph& g, const TwoDistanceParams& p,
                            int gh_limit = 8) {
    return detail::gh_distance_scan(two_distance_from_graph(g, p, AdjacentGets::B), p, gh_limit);
}

// theta(G) through distances alone: adjacent vertices at a, the rest at b.
inline int clique_cover_via_gh(const SimpleGraph& g, const TwoDistanceParams& p,
                               int gh_limit = 8) {
    return detail::gh_distance_scan(two_distance_from_graph(g, p, AdjacentGets::A), p, gh_limit);
}

// Reports whether 2 d_GH(a Delta_k, V_b) = b for the adjacent-at-b space;
// in the positive case chi(G) > k, which is re-checked exactly.
inline bool gh_color_bound_check(const SimpleGraph& g, int k, const TwoDistanceParams& p,
                                 int gh_limit = 8, int chromatic_limit = 16) {
    const FiniteMetricSpace v = two_distance_from_graph(g, p, AdjacentGets::B);
    const Rational twice = gh_distance_exact(simplex(k, p.a), v, gh_limit).distance * 2;
    const bool at_threshold = twice == p.b;
    if (at_threshold && chromatic_number(g, chromatic_limit).chi <= k)
        throw InternalCheckError("threshold held but chromatic number is not above k");
    return at_threshold;
}

}  // namespace l1embed
