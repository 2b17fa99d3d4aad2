#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "l1embed/cuts.hpp"
#include "l1embed/errors.hpp"
#include "l1embed/graph.hpp"

namespace l1embed {

// All four side intersections nonempty. Incompatible cuts can never both be
// realized as threshold cuts of one linear order.
inline bool incompatible(const Cut& a, const Cut& b) {
    if (a.ambient_size() != b.ambient_size()) throw DomainError("AmbientMismatch");
    const std::uint32_t sa = a.side_mask(), ca = a.complement_mask();
    const std::uint32_t sb = b.side_mask(), cb = b.complement_mask();
    return (sa & sb) && (sa & cb) && (ca & sb) && (ca & cb);
}

// True iff one side can be chosen from each cut so that the three chosen
// sides are pairwise disjoint. Such triples obstruct a shared line even when
// every pair is compatible.
inline bool asteroid_triplet(const Cut& a, const Cut& b, const Cut& c) {
    if (a.ambient_size() != b.ambient_size() || a.ambient_size() != c.ambient_size())
        throw DomainError("AmbientMismatch");
    if (a == b || a == c || b == c) throw DomainError("DuplicateCut");
    const std::uint32_t sides_a[2] = {a.side_mask(), a.complement_mask()};
    const std::uint32_t sides_b[2] = {b.side_mask(), b.complement_mask()};
    const std::uint32_t sides_c[2] = {c.side_mask(), c.complement_mask()};
    for (std::uint32_t sa : sides_a)
        for (std::uint32_t sb : sides_b)
            for (std::uint32_t sc : sides_c)
                if (!(sa & sb) && !(sa & sc) && !(sb & sc)) return true;
    return false;
}

// Vertices are cuts (by index into `cuts`); 2-edges are incompatible pairs,
// 3-edges asteroid triplets. By construction no pair inside a triplet is ever
// a 2-edge: disjoint chosen sides rule out all four intersections being
// nonempty. That exclusion is re-checked at build time as a consistency
// guard.
struct NestingHypergraph {
    std::vector<Cut> cuts;
    std::vector<std::pair<int, int>> pair_edges;
    std::vector<std::array<int, 3>> triple_edges;
};

inline NestingHypergraph build_nesting_hypergraph(std::vector<Cut> cuts) {
    for (size_t a = 0; a < cuts.size(); ++a)
        for (size_t b = a + 1; b < cuts.size(); ++b)
            if (cuts[a] == cuts[b]) throw DomainError("DuplicateCut");
    NestingHypergraph h;
    h.cuts = std::move(cuts);
    const int v = static_cast<int>(h.cuts.size());
    std::vector<char> pair_edge(static_cast<size_t>(v) * v, 0);
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (incompatible(h.cuts[a], h.cuts[b])) {
                h.pair_edges.emplace_back(a, b);
                pair_edge[static_cast<size_t>(a) * v + b] = 1;
            }
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c)
                if (asteroid_triplet(h.cuts[a], h.cuts[b], h.cuts[c])) {
                    if (pair_edge[static_cast<size_t>(a) * v + b] ||
                        pair_edge[static_cast<size_t>(a) * v + c] ||
                        pair_edge[static_cast<size_t>(b) * v + c])
                        throw InternalCheckError(
                            "asteroid triplet contains an incompatible pair");
                    h.triple_edges.push_back({a, b, c});
                }
    return h;
}

// The simple graphs obtained by replacing each triplet with one of its three
// pairs, on top of the fixed pair edges. Choices run in lexicographic order
// over (triplet index, pair index) and the result is deduplicated, so the
// family is produced in a canonical order. At most 3^k graphs for k triplets.
struct GraphFamily {
    int vertex_count = 0;
    std::vector<SimpleGraph> graphs;
};

inline GraphFamily enumerate_graph_family(const NestingHypergraph& h, int max_triples = 12) {
    const int k = static_cast<int>(h.triple_edges.size());
    if (k > max_triples)
        throw BudgetError("FamilyTooLarge: " + std::to_string(k) + " asteroid triplets (cap " +
                          std::to_string(max_triples) + ")");
    const int v = static_cast<int>(h.cuts.size());

    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<int> choice(static_cast<size_t>(k), 0);
    for (;;) {
        std::vector<std::pair<int, int>> edges = h.pair_edges;
        for (int t = 0; t < k; ++t) {
            const auto& [a, b, c] = h.triple_edges[static_cast<size_t>(t)];
            switch (choice[static_cast<size_t>(t)]) {
                case 0: edges.emplace_back(a, b); break;
                case 1: edges.emplace_back(a, c); break;
                default: edges.emplace_back(b, c); break;
            }
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        seen.insert(std::move(edges));

        int t = k - 1;
        while (t >= 0 && choice[static_cast<size_t>(t)] == 2) choice[static_cast<size_t>(t--)] = 0;
        if (t < 0) break;
        ++choice[static_cast<size_t>(t)];
    }

    GraphFamily family;
    family.vertex_count = v;
    for (const auto& edges : seen) family.graphs.emplace_back(v, edges);
    return family;
}

struct HypergraphColoring {
    bool colorable = false;
    std::vector<int> colors;
};

// Is there an m-coloring of the cut vertices with no monochromatic pair edge
// and no monochromatic triplet? Exact backtracking; new colors are introduced
// in index order, which is sound for existence and keeps witnesses canonical.
inline HypergraphColoring hypergraph_colorable(const NestingHypergraph& h, int m) {
    if (m < 1) throw DomainError("need at least one color");
    const int v = static_cast<int>(h.cuts.size());
    std::vector<int> color(static_cast<size_t>(v), -1);

    auto consistent = [&](int vertex) {
        for (auto [a, b] : h.pair_edges) {
            if (a != vertex && b != vertex) continue;
            if (color[a] >= 0 && color[a] == color[b]) return false;
        }
        for (const auto& [a, b, c] : h.triple_edges) {
            if (a != vertex && b != vertex && c != vertex) continue;
            if (color[a] >= 0 && color[a] == color[b] && color[b] == color[c]) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, int vertex, int used) -> bool {
        if (vertex == v) return true;
        const int limit = std::min(used + 1, m);
        for (int col = 0; col < limit; ++col) {
            color[vertex] = col;
            if (consistent(vertex) && self(self, vertex + 1, std::max(used, col + 1)))
                return true;
            color[vertex] = -1;
        }
        return false;
    };

    if (dfs(dfs, 0, 0)) return {true, color};
    return {false, {}};
}

}  // namespace l1embed
