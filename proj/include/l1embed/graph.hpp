#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "l1embed/errors.hpp"
#include "l1embed/metric_space.hpp"

namespace l1embed {

// Undirected simple graph on vertices 0..n-1. Edges are kept as a sorted
// (u < v) vector plus per-vertex adjacency bitmasks; the mask bound caps the
// vertex count at 64, far above every search budget in this library.
class SimpleGraph {
public:
    explicit SimpleGraph(int n, std::vector<std::pair<int, int>> edges = {}) : n_(n) {
        if (n < 0) throw DomainError("negative vertex count");
        if (n > 64) throw BudgetError("SizeLimitExceeded: graphs capped at 64 vertices");
        adj_.assign(static_cast<size_t>(n), 0);
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n) throw DomainError("edge endpoint out of range");
            if (u == v) throw DomainError("loops are not allowed");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        for (auto [u, v] : edges_) {
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
        }
    }

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    std::uint64_t neighbors_mask(int v) const { return adj_[v]; }
    int degree(int v) const {
        int d = 0;
        for (std::uint64_t m = adj_[v]; m; m &= m - 1) ++d;
        return d;
    }

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator<(const SimpleGraph& o) const {
        return n_ != o.n_ ? n_ < o.n_ : edges_ < o.edges_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

inline SimpleGraph complement(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return SimpleGraph(g.size(), std::move(edges));
}

// The two distance values of a two-distance space: 0 < a < b <= 2a. The
// upper bound on b is exactly what makes every such assignment a metric.
struct TwoDistanceParams {
    Rational a;
    Rational b;

    TwoDistanceParams(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (!(0 < a && a < b && b <= 2 * a))
            throw DomainError("two-distance params need 0 < a < b <= 2a");
    }

    static TwoDistanceParams unit() { return TwoDistanceParams(Rational(1), Rational(2)); }
};

enum class AdjacentGets { A, B };

// Metric on V(G) taking value `a` or `b` depending on adjacency. With
// AdjacentGets::B adjacent vertices sit at the larger distance b; with
// AdjacentGets::A they sit at a.
inline FiniteMetricSpace two_distance_from_graph(const SimpleGraph& g,
                                                 const TwoDistanceParams& p,
                                                 AdjacentGets adjacent_gets) {
    if (g.size() < 1) throw DomainError("graph must have at least one vertex");
    const Rational& on_edge = adjacent_gets == AdjacentGets::B ? p.b : p.a;
    const Rational& off_edge = adjacent_gets == AdjacentGets::B ? p.a : p.b;
    const int n = g.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) d[u][v] = d[v][u] = g.adjacent(u, v) ? on_edge : off_edge;
    return FiniteMetricSpace(std::move(d));
}

}  // namespace l1embed
