#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "l1embed/coloring.hpp"
#include "l1embed/generators.hpp"
#include "l1embed/nesting.hpp"
#include "test_support.hpp"

using namespace l1embed;

namespace {

Cut cut(int n, std::vector<int> side) { return Cut::from_points(n, side); }

// Hypergraph on v abstract vertices; the cut payload only fixes the count.
NestingHypergraph synthetic(int v, std::vector<std::pair<int, int>> pairs,
                            std::vector<std::array<int, 3>> triples) {
    NestingHypergraph h;
    const std::vector<Cut> pool = all_cuts(5);
    for (int i = 0; i < v; ++i) h.cuts.push_back(pool[static_cast<size_t>(i)]);
    h.pair_edges = std::move(pairs);
    h.triple_edges = std::move(triples);
    return h;
}

}  // namespace

TEST_CASE("incompatible pairs") {
    CHECK(incompatible(cut(4, {0, 1}), cut(4, {0, 2})));
    CHECK_FALSE(incompatible(cut(4, {0}), cut(4, {0, 1})));
    const Cut c = cut(4, {0, 3});
    CHECK_FALSE(incompatible(c, c));
    CHECK_THROWS_AS(incompatible(cut(3, {0}), cut(4, {0})), DomainError);
}

TEST_CASE("asteroid triplets") {
    CHECK(asteroid_triplet(cut(3, {0}), cut(3, {1}), cut(3, {2})));
    CHECK_FALSE(asteroid_triplet(cut(4, {0}), cut(4, {0, 1}), cut(4, {0, 1, 2})));
    CHECK(asteroid_triplet(cut(4, {0}), cut(4, {1}), cut(4, {2})));
    CHECK_THROWS_AS(asteroid_triplet(cut(3, {0}), cut(3, {0}), cut(3, {1})), DomainError);
}

TEST_CASE("nesting hypergraph construction") {
    const NestingHypergraph singles =
        build_nesting_hypergraph({cut(3, {0}), cut(3, {1}), cut(3, {2})});
    CHECK(singles.pair_edges.empty());
    REQUIRE(singles.triple_edges.size() == 1);
    CHECK(singles.triple_edges[0] == std::array<int, 3>{0, 1, 2});

    const NestingHypergraph chain =
        build_nesting_hypergraph({cut(4, {0}), cut(4, {0, 1}), cut(4, {0, 1, 2})});
    CHECK(chain.pair_edges.empty());
    CHECK(chain.triple_edges.empty());

    const NestingHypergraph crossing = build_nesting_hypergraph({cut(4, {0, 1}), cut(4, {0, 2})});
    CHECK(crossing.pair_edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(crossing.triple_edges.empty());

    CHECK_THROWS_AS(build_nesting_hypergraph({cut(3, {0}), cut(3, {1, 2})}), DomainError);
}

TEST_CASE("graph family enumeration") {
    // No triplets: the family is the pair graph alone.
    const NestingHypergraph flat = synthetic(3, {{0, 1}}, {});
    const GraphFamily single = enumerate_graph_family(flat);
    REQUIRE(single.graphs.size() == 1);
    CHECK(single.graphs[0].edges() == std::vector<std::pair<int, int>>{{0, 1}});

    // One triplet: three one-edge graphs.
    const GraphFamily three = enumerate_graph_family(synthetic(3, {}, {{{0, 1, 2}}}));
    CHECK(three.graphs.size() == 3);
    for (const SimpleGraph& g : three.graphs) CHECK(g.edge_count() == 1);

    // Two triplets sharing two vertices. Oracle: enumerate the nine pair
    // choices by hand and deduplicate sorted edge sets.
    const std::array<std::pair<int, int>, 3> first{{{0, 1}, {0, 2}, {1, 2}}};
    const std::array<std::pair<int, int>, 3> second{{{0, 1}, {0, 3}, {1, 3}}};
    std::set<std::vector<std::pair<int, int>>> oracle;
    for (const auto& e1 : first)
        for (const auto& e2 : second) {
            std::vector<std::pair<int, int>> edges{e1, e2};
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            oracle.insert(edges);
        }
    const GraphFamily shared =
        enumerate_graph_family(synthetic(4, {}, {{{0, 1, 2}}, {{0, 1, 3}}}));
    CHECK(shared.graphs.size() == oracle.size());
    for (const SimpleGraph& g : shared.graphs) CHECK(oracle.count(g.edges()) == 1);

    // Budget: 13 triplets would mean 3^13 graphs.
    std::vector<std::array<int, 3>> many;
    for (int i = 0; i < 13; ++i) many.push_back({0, 1 + i % 4, 5 + i % 5});
    CHECK_THROWS_AS(enumerate_graph_family(synthetic(10, {}, many)), BudgetError);
}

TEST_CASE("every family graph extends the pair edges by one pair per triplet") {
    const NestingHypergraph h = synthetic(5, {{3, 4}}, {{{0, 1, 2}}, {{1, 2, 3}}});
    const GraphFamily fam = enumerate_graph_family(h);
    for (const SimpleGraph& g : fam.graphs) {
        CHECK(g.adjacent(3, 4));
        CHECK(g.edge_count() >= 1 + 1);
        CHECK(g.edge_count() <= 1 + 2);
        for (const auto& [a, b, c] : h.triple_edges)
            CHECK((g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)));
    }
}

TEST_CASE("hypergraph colorability") {
    CHECK(hypergraph_colorable(synthetic(4, {}, {}), 1).colorable);
    CHECK_FALSE(hypergraph_colorable(synthetic(2, {{0, 1}}, {}), 1).colorable);
    const HypergraphColoring split = hypergraph_colorable(synthetic(3, {}, {{{0, 1, 2}}}), 2);
    REQUIRE(split.colorable);
    CHECK_FALSE((split.colors[0] == split.colors[1] && split.colors[1] == split.colors[2]));
}

TEST_CASE("hypergraph colorability matches the graph family") {
    // Small sweep of the equivalence; the acceptance suite runs it in full.
    SeededRng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const int v = rng.int_in(3, 5);
        std::vector<std::pair<int, int>> pairs;
        if (rng.below(2)) {
            int a = rng.int_in(0, v - 2);
            pairs.emplace_back(a, a + 1);
        }
        std::vector<std::array<int, 3>> triples;
        const int k = rng.int_in(0, 2);
        for (int t = 0; t < k; ++t) {
            int a = rng.int_in(0, v - 3);
            std::array<int, 3> tri{a, a + 1, a + 2};
            bool touches_pair = false;
            for (auto [p, q] : pairs)
                for (int i : tri)
                    for (int j : tri)
                        if (i == p && j == q) touches_pair = true;
            bool dup = false;
            for (const auto& existing : triples) dup = dup || existing == tri;
            if (!touches_pair && !dup) triples.push_back(tri);
        }
        const NestingHypergraph h = synthetic(v, pairs, triples);
        const GraphFamily fam = enumerate_graph_family(h);
        for (int m = 1; m <= 4; ++m) {
            bool family_colorable = false;
            for (const SimpleGraph& g : fam.graphs)
                family_colorable = family_colorable || chromatic_number(g).chi <= m;
            CHECK(hypergraph_colorable(h, m).colorable == family_colorable);
        }
    }
}

TEST_CASE("relabeling cuts relabels the family") {
    // Swapping two cut vertices induces a bijection of edge sets.
    const NestingHypergraph h = synthetic(4, {}, {{{0, 1, 2}}, {{0, 1, 3}}});
    NestingHypergraph swapped = h;
    auto rename = [](int v) { return v == 2 ? 3 : v == 3 ? 2 : v; };
    for (auto& tri : swapped.triple_edges) {
        for (int& v : tri) v = rename(v);
        std::sort(tri.begin(), tri.end());
    }
    std::sort(swapped.triple_edges.begin(), swapped.triple_edges.end());
    const GraphFamily fa = enumerate_graph_family(h);
    const GraphFamily fb = enumerate_graph_family(swapped);
    REQUIRE(fa.graphs.size() == fb.graphs.size());
    std::set<std::vector<std::pair<int, int>>> renamed;
    for (const SimpleGraph& g : fa.graphs) {
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) {
            int a = rename(u), b = rename(v);
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        }
        std::sort(edges.begin(), edges.end());
        renamed.insert(edges);
    }
    for (const SimpleGraph& g : fb.graphs) CHECK(renamed.count(g.edges()) == 1);
}
