#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "l1embed/coloring.hpp"
#include "l1embed/cut_cone.hpp"
#include "l1embed/cuts.hpp"
#include "l1embed/errors.hpp"
#include "l1embed/graph.hpp"
#include "l1embed/gromov_hausdorff.hpp"
#include "l1embed/metric_space.hpp"
#include "l1embed/nesting.hpp"
#include "l1embed/parallel.hpp"

namespace l1embed {

struct PipelineBudgets {
    int gh_limit = 8;         // points per side in gh searches
    int max_points = 14;      // cut enumeration bound
    int max_triples = 12;     // graph-family bound (3^k graphs)
    int chromatic_limit = 16;
    int threads = 1;
};

struct GHRouteEntry {
    int m = 0;
    Rational min_twice_gh;  // min over the graph family of 2 d_GH(a Delta_m, C_G)
    bool below_b = false;
};

// Everything the pipeline learned about one metric. When the metric lies in
// the cut cone, all engaged routes agree on `dimension` and `embedding` is an
// exact certificate: n rows of `dimension` rational coordinates whose l1
// distances reproduce the input metric with zero error.
struct L1Report {
    bool in_cut_cone = false;
    std::optional<int> dimension;
    std::optional<CutDecomposition> decomposition;
    std::vector<GHRouteEntry> route_gh;
    std::optional<int> route_coloring;    // min over the family of chi(G)
    std::optional<int> route_hypergraph;  // chromatic number of the nesting hypergraph
    std::vector<std::vector<Rational>> embedding;
    Rational a, b;
};

// Realizes a proper m-coloring of the nesting hypergraph as coordinates: the
// cuts of one color class are pairwise compatible and asteroid-free, so a
// linear order of the points exists in which every one of them is a prefix
// cut. Each class contributes one coordinate: the weighted count of class
// cuts whose suffix side contains the point. The result is checked against
// the decomposition's metric pair by pair and must match exactly.
inline std::vector<std::vector<Rational>> embed_from_coloring(const CutDecomposition& dec,
                                                              const std::vector<int>& coloring,
                                                              int m) {
    const int n = dec.n;
    const int ncuts = static_cast<int>(dec.terms.size());
    if (static_cast<int>(coloring.size()) != ncuts)
        throw DomainError("coloring size does not match cut count");
    for (int c : coloring)
        if (c < 0 || c >= m) throw DomainError("color out of range");
    {
        const NestingHypergraph h = build_nesting_hypergraph(dec.cuts());
        for (auto [a, b] : h.pair_edges)
            if (coloring[a] == coloring[b])
                throw DomainError("coloring leaves an incompatible pair monochromatic");
        for (const auto& [a, b, c] : h.triple_edges)
            if (coloring[a] == coloring[b] && coloring[b] == coloring[c])
                throw DomainError("coloring leaves an asteroid triplet monochromatic");
    }

    std::vector<std::vector<Rational>> coords(static_cast<size_t>(n),
                                              std::vector<Rational>(static_cast<size_t>(m), 0));
    for (int color = 0; color < m; ++color) {
        std::vector<int> members;
        for (int c = 0; c < ncuts; ++c)
            if (coloring[static_cast<size_t>(c)] == color) members.push_back(c);
        if (members.empty()) continue;

        // Backtracking over point orders: appending a point must keep every
        // class cut split into at most two runs (side block, then complement
        // block, in either direction).
        std::vector<int> order;
        std::vector<char> placed(static_cast<size_t>(n), 0);
        auto extendable = [&](int q) {
            for (int c : members) {
                const auto& cut = dec.terms[static_cast<size_t>(c)].first;
                const bool q_side = (cut.side_mask() >> q) & 1;
                int runs = 1;
                bool prev = (cut.side_mask() >> order[0]) & 1;
                for (size_t t = 1; t < order.size(); ++t) {
                    const bool cur = (cut.side_mask() >> order[t]) & 1;
                    if (cur != prev) ++runs;
                    prev = cur;
                }
                if (q_side != prev) ++runs;
                if (runs > 2) return false;
            }
            return true;
        };
        auto dfs = [&](auto&& self) -> bool {
            if (static_cast<int>(order.size()) == n) return true;
            for (int q = 0; q < n; ++q) {
                if (placed[q]) continue;
                if (!order.empty() && !extendable(q)) continue;
                placed[q] = 1;
                order.push_back(q);
                if (self(self)) return true;
                order.pop_back();
                placed[q] = 0;
            }
            return false;
        };
        if (!dfs(dfs))
            throw InternalCheckError(
                "NoLinearRealization: a compatible asteroid-free class admitted no linear "
                "order; color " + std::to_string(color));

        std::vector<int> position(static_cast<size_t>(n), 0);
        for (int t = 0; t < n; ++t) position[static_cast<size_t>(order[t])] = t;
        for (int c : members) {
            const auto& [cut, weight] = dec.terms[static_cast<size_t>(c)];
            // The suffix side: whichever side contains the last point.
            const bool side_is_suffix = (cut.side_mask() >> order[static_cast<size_t>(n - 1)]) & 1;
            const std::uint32_t upper = side_is_suffix ? cut.side_mask() : cut.complement_mask();
            for (int x = 0; x < n; ++x)
                if ((upper >> x) & 1) coords[static_cast<size_t>(x)][static_cast<size_t>(color)] += weight;
        }
    }

    // Translation gauge: shift every coordinate so its minimum over the
    // points is zero.
    for (int k = 0; k < m; ++k) {
        Rational lo = coords[0][static_cast<size_t>(k)];
        for (int x = 1; x < n; ++x) lo = std::min(lo, coords[static_cast<size_t>(x)][static_cast<size_t>(k)]);
        for (int x = 0; x < n; ++x) coords[static_cast<size_t>(x)][static_cast<size_t>(k)] -= lo;
    }

    const FinitePseudometricSpace target = evaluate_decomposition(dec);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Rational sum = 0;
            for (int k = 0; k < m; ++k)
                sum += rational_abs(coords[static_cast<size_t>(x)][static_cast<size_t>(k)] -
                                    coords[static_cast<size_t>(y)][static_cast<size_t>(k)]);
            if (sum != target.dist(x, y))
                throw InternalCheckError("embedding failed its distance check");
        }
    return coords;
}

namespace detail {

struct PipelineContext {
    std::optional<CutDecomposition> decomposition;
    NestingHypergraph hypergraph;
    GraphFamily family;
    std::vector<FiniteMetricSpace> spaces;  // C_G for each family graph

    bool in_cone() const { return decomposition.has_value(); }
    int cut_count() const {
        return decomposition ? static_cast<int>(decomposition->terms.size()) : 0;
    }
};

inline PipelineContext build_pipeline(const FiniteMetricSpace& x, const TwoDistanceParams& p,
                                      const PipelineBudgets& budgets) {
    PipelineContext ctx;
    ctx.decomposition = decompose(x, budgets.max_points);
    if (!ctx.decomposition || ctx.decomposition->terms.empty()) return ctx;
    ctx.hypergraph = build_nesting_hypergraph(ctx.decomposition->cuts());
    ctx.family = enumerate_graph_family(ctx.hypergraph, budgets.max_triples);
    ctx.spaces.reserve(ctx.family.graphs.size());
    for (const SimpleGraph& g : ctx.family.graphs)
        ctx.spaces.push_back(two_distance_from_graph(g, p, AdjacentGets::B));
    return ctx;
}

// min over the family of 2 d_GH(a Delta_m, C_G); graphs are solved
// independently (in parallel when asked) and reduced in index order.
inline Rational family_min_twice_gh(const PipelineContext& ctx, int m,
                                    const TwoDistanceParams& p,
                                    const PipelineBudgets& budgets) {
    const int count = static_cast<int>(ctx.spaces.size());
    std::vector<Rational> twice(static_cast<size_t>(count));
    const FiniteMetricSpace probe = simplex(m, p.a);
    parallel_for_index(count, budgets.threads, [&](int i) {
        twice[static_cast<size_t>(i)] =
            gh_distance_exact(probe, ctx.spaces[static_cast<size_t>(i)], budgets.gh_limit)
                .distance * 2;
    });
    Rational best = twice[0];
    for (int i = 1; i < count; ++i) best = std::min(best, twice[static_cast<size_t>(i)]);
    return best;
}

inline int hypergraph_chromatic(const NestingHypergraph& h) {
    for (int m = 1;; ++m)
        if (hypergraph_colorable(h, m).colorable) return m;
}

}  // namespace detail

namespace detail {

// Shared engine behind the distance route and the full cross-validation. The
// decomposition, hypergraph and graph family are built once; the coloring
// routes run on the same context when requested.
inline L1Report run_pipeline(const FiniteMetricSpace& x, const TwoDistanceParams& p,
                             const PipelineBudgets& budgets, bool with_coloring_routes) {
    L1Report report;
    report.a = p.a;
    report.b = p.b;
    PipelineContext ctx = build_pipeline(x, p, budgets);
    report.in_cut_cone = ctx.in_cone();
    if (!report.in_cut_cone) return report;
    report.decomposition = ctx.decomposition;

    if (ctx.cut_count() == 0) {
        // Only the one-point space decomposes over no cuts; it lies on a line.
        report.dimension = 1;
        report.embedding.assign(static_cast<size_t>(x.size()), {Rational(0)});
        if (with_coloring_routes) {
            report.route_coloring = 1;
            report.route_hypergraph = 1;
        }
        return report;
    }

    for (int m = 1; m <= ctx.cut_count(); ++m) {
        Rational best = family_min_twice_gh(ctx, m, p, budgets);
        const bool below = best < p.b;
        report.route_gh.push_back({m, best, below});
        if (below) {
            report.dimension = m;
            break;
        }
    }
    if (!report.dimension)
        throw InternalCheckError("distance scan exhausted the cut count without success");

    const HypergraphColoring coloring = hypergraph_colorable(ctx.hypergraph, *report.dimension);
    if (!coloring.colorable)
        throw InternalCheckError(
            "DisagreementDetected: distance route dimension is not a hypergraph coloring count");
    report.embedding = embed_from_coloring(*ctx.decomposition, coloring.colors, *report.dimension);

    if (with_coloring_routes) {
        const int count = static_cast<int>(ctx.family.graphs.size());
        std::vector<int> chi(static_cast<size_t>(count));
        parallel_for_index(count, budgets.threads, [&](int i) {
            chi[static_cast<size_t>(i)] =
                chromatic_number(ctx.family.graphs[static_cast<size_t>(i)],
                                 budgets.chromatic_limit)
                    .chi;
        });
        report.route_coloring = *std::min_element(chi.begin(), chi.end());
        report.route_hypergraph = hypergraph_chromatic(ctx.hypergraph);

        if (*report.dimension != *report.route_coloring ||
            *report.dimension != *report.route_hypergraph)
            throw InternalCheckError("DisagreementDetected: dimensions gh=" +
                                     std::to_string(*report.dimension) + " coloring=" +
                                     std::to_string(*report.route_coloring) + " hypergraph=" +
                                     std::to_string(*report.route_hypergraph));

        // Minimality: one dimension fewer must fail.
        if (*report.dimension >= 2 &&
            hypergraph_colorable(ctx.hypergraph, *report.dimension - 1).colorable)
            throw InternalCheckError("reported dimension is not minimal");
    }
    return report;
}

}  // namespace detail

// Dimension through distance comparisons: the least m for which some family
// graph's two-distance space comes strictly closer than b/2 to the m-point
// a-simplex. The certificate embedding is constructed from a hypergraph
// coloring with that many colors and re-verified exactly.
inline L1Report l1_dimension_via_gh(const FiniteMetricSpace& x, const TwoDistanceParams& p,
                                    const PipelineBudgets& budgets = {}) {
    return detail::run_pipeline(x, p, budgets, false);
}

// Dimension through coloring alone: min over the graph family of chi(G),
// cross-checked against the chromatic number of the nesting hypergraph.
// nullopt when the metric is not in the cut cone.
inline std::optional<int> l1_dimension_via_coloring(const FiniteMetricSpace& x,
                                                    const PipelineBudgets& budgets = {}) {
    detail::PipelineContext ctx =
        detail::build_pipeline(x, TwoDistanceParams::unit(), budgets);
    if (!ctx.in_cone()) return std::nullopt;
    if (ctx.cut_count() == 0) return 1;

    const int count = static_cast<int>(ctx.family.graphs.size());
    std::vector<int> chi(static_cast<size_t>(count));
    parallel_for_index(count, budgets.threads, [&](int i) {
        chi[static_cast<size_t>(i)] =
            chromatic_number(ctx.family.graphs[static_cast<size_t>(i)], budgets.chromatic_limit)
                .chi;
    });
    const int family_min = *std::min_element(chi.begin(), chi.end());
    const int hyper = detail::hypergraph_chromatic(ctx.hypergraph);
    if (family_min != hyper)
        throw InternalCheckError(
            "DisagreementDetected: family chromatic minimum " + std::to_string(family_min) +
            " != hypergraph chromatic number " + std::to_string(hyper));
    return family_min;
}

// Does x embed isometrically into m-dimensional rectilinear space? Decided by
// hypergraph colorability and cross-asserted against the distance route.
inline bool embeddable_in_dim(const FiniteMetricSpace& x, int m, const TwoDistanceParams& p,
                              const PipelineBudgets& budgets = {}) {
    if (m < 1) throw DomainError("dimension must be positive");
    detail::PipelineContext ctx = detail::build_pipeline(x, p, budgets);
    if (!ctx.in_cone()) return false;
    if (ctx.cut_count() == 0) return true;
    const bool colorable = hypergraph_colorable(ctx.hypergraph, m).colorable;
    const bool gh_below =
        m > ctx.cut_count() || detail::family_min_twice_gh(ctx, m, p, budgets) < p.b;
    if (colorable != gh_below)
        throw InternalCheckError("DisagreementDetected: colorability and distance routes differ");
    return colorable;
}

// Runs the distance route, the coloring route and the hypergraph route on one
// metric, verifies the embedding against the input distances directly, and
// fails loudly on any mismatch. This is the toolkit's primary self-check.
inline L1Report cross_validate(const FiniteMetricSpace& x, const TwoDistanceParams& p,
                               const PipelineBudgets& budgets = {}) {
    L1Report report = detail::run_pipeline(x, p, budgets, true);
    if (!report.in_cut_cone) return report;

    // The embedding must reproduce the input metric itself, not only the
    // decomposition's reconstruction of it.
    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size(); ++j) {
            Rational sum = 0;
            for (size_t k = 0; k < report.embedding[static_cast<size_t>(i)].size(); ++k)
                sum += rational_abs(report.embedding[static_cast<size_t>(i)][k] -
                                    report.embedding[static_cast<size_t>(j)][k]);
            if (sum != x.dist(i, j))
                throw InternalCheckError("embedding does not reproduce the input metric");
        }
    return report;
}

}  // namespace l1embed
