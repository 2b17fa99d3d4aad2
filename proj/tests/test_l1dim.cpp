#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "l1embed/generators.hpp"
#include "l1embed/l1_dimension.hpp"
#include "test_support.hpp"

using namespace l1embed;
using testsupport::Q;
using testsupport::k23_metric;
using testsupport::mat;
using testsupport::path3;

namespace {

Rational l1_gap(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational sum = 0;
    for (size_t k = 0; k < a.size(); ++k) sum += rational_abs(a[k] - b[k]);
    return sum;
}

void check_certificate(const L1Report& report, const FiniteMetricSpace& x) {
    REQUIRE(report.dimension.has_value());
    REQUIRE(report.embedding.size() == static_cast<size_t>(x.size()));
    for (const auto& row : report.embedding)
        CHECK(row.size() == static_cast<size_t>(*report.dimension));
    for (int i = 0; i < x.size(); ++i)
        for (int j = i + 1; j < x.size(); ++j)
            CHECK(l1_gap(report.embedding[i], report.embedding[j]) == x.dist(i, j));
}

}  // namespace

TEST_CASE("path metric lies on a line") {
    const FiniteMetricSpace x = path3();
    const L1Report report = cross_validate(x, TwoDistanceParams::unit());
    CHECK(report.in_cut_cone);
    CHECK(report.dimension == 1);
    CHECK(report.route_coloring == 1);
    CHECK(report.route_hypergraph == 1);
    check_certificate(report, x);
}

TEST_CASE("equilateral triangle needs the plane") {
    const FiniteMetricSpace x = simplex(3, Q(2));
    const L1Report report = cross_validate(x, TwoDistanceParams::unit());
    CHECK(report.dimension == 2);
    CHECK(report.route_coloring == 2);
    CHECK(report.route_hypergraph == 2);
    check_certificate(report, x);
    // The distance scan proves minimality on the gh side as well.
    REQUIRE(report.route_gh.size() == 2);
    CHECK_FALSE(report.route_gh[0].below_b);
    CHECK(report.route_gh[1].below_b);
}

TEST_CASE("four-point equilateral space still fits the plane") {
    const FiniteMetricSpace x = simplex(4, Q(2));
    const L1Report report = cross_validate(x, TwoDistanceParams::unit());
    CHECK(report.dimension == 2);
    check_certificate(report, x);
}

TEST_CASE("single-cut metric lies on a line") {
    const FiniteMetricSpace x(mat({{0, 1}, {1, 0}}));
    const L1Report report = cross_validate(x, TwoDistanceParams::unit());
    CHECK(report.dimension == 1);
    REQUIRE(report.decomposition);
    CHECK(report.decomposition->terms.size() == 1);
    check_certificate(report, x);
}

TEST_CASE("one-point space") {
    const FiniteMetricSpace x(mat({{0}}));
    const L1Report report = cross_validate(x, TwoDistanceParams::unit());
    CHECK(report.in_cut_cone);
    CHECK(report.dimension == 1);
    CHECK(l1_dimension_via_coloring(x) == 1);
    CHECK(embeddable_in_dim(x, 1, TwoDistanceParams::unit()));
}

TEST_CASE("k23 is not embeddable by any route") {
    const FiniteMetricSpace x = k23_metric();
    const L1Report report = l1_dimension_via_gh(x, TwoDistanceParams::unit());
    CHECK_FALSE(report.in_cut_cone);
    CHECK_FALSE(report.dimension.has_value());
    CHECK_FALSE(l1_dimension_via_coloring(x).has_value());
    CHECK_FALSE(embeddable_in_dim(x, 3, TwoDistanceParams::unit()));
}

TEST_CASE("embeddable_in_dim brackets the dimension") {
    const TwoDistanceParams p = TwoDistanceParams::unit();
    const FiniteMetricSpace triangle = simplex(3, Q(2));
    CHECK_FALSE(embeddable_in_dim(triangle, 1, p));
    CHECK(embeddable_in_dim(triangle, 2, p));
    CHECK(embeddable_in_dim(triangle, 3, p));

    const FiniteMetricSpace single(mat({{0, 1}, {1, 0}}));
    CHECK(embeddable_in_dim(single, 1, p));
}

TEST_CASE("embed_from_coloring named cases") {
    // One cut with weight 5/2 on one color: a two-point line segment.
    const CutDecomposition one(2, {{Cut::from_points(2, std::vector<int>{0}), Q(5, 2)}});
    const auto coords = embed_from_coloring(one, {0}, 1);
    CHECK(l1_gap(coords[0], coords[1]) == Q(5, 2));
    CHECK(std::min(coords[0][0], coords[1][0]) == Q(0));  // translation gauge

    // The path decomposition on one color embeds as 0, 1, 2.
    const CutDecomposition path(3, {{Cut::from_points(3, std::vector<int>{0}), Q(1)},
                                    {Cut::from_points(3, std::vector<int>{2}), Q(1)}});
    const auto line = embed_from_coloring(path, {0, 0}, 1);
    CHECK(l1_gap(line[0], line[1]) == Q(1));
    CHECK(l1_gap(line[1], line[2]) == Q(1));
    CHECK(l1_gap(line[0], line[2]) == Q(2));

    // Equilateral triangle: two colors, all pairwise distances 2.
    const CutDecomposition tri(3, {{Cut::from_points(3, std::vector<int>{0}), Q(1)},
                                   {Cut::from_points(3, std::vector<int>{1}), Q(1)},
                                   {Cut::from_points(3, std::vector<int>{2}), Q(1)}});
    const HypergraphColoring coloring = hypergraph_colorable(build_nesting_hypergraph(tri.cuts()), 2);
    REQUIRE(coloring.colorable);
    const auto plane = embed_from_coloring(tri, coloring.colors, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(l1_gap(plane[i], plane[j]) == Q(2));

    // A monochromatic asteroid triplet is rejected up front.
    CHECK_THROWS_AS(embed_from_coloring(tri, {0, 0, 0}, 1), DomainError);
}

TEST_CASE("routes agree on random cut sums") {
    SeededRng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = rng.int_in(3, 5);
        int bits = 0;
        while ((1 << bits) < n) ++bits;
        const int k = std::min(4, bits + static_cast<int>(rng.below(2)));
        const FiniteMetricSpace x = gen_cut_sum_metric(n, k, rng);
        const L1Report report = cross_validate(x, TwoDistanceParams::unit());
        CHECK(report.dimension.has_value());
        check_certificate(report, x);
        // The gh scan's below-b column is false until the dimension.
        for (size_t e = 0; e + 1 < report.route_gh.size(); ++e)
            CHECK_FALSE(report.route_gh[e].below_b);
        CHECK(report.route_gh.back().below_b);
    }
}

TEST_CASE("random four-point metrics always embed and routes agree") {
    SeededRng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const FiniteMetricSpace x = gen_random_metric(4, rng);
        const L1Report report = cross_validate(x, TwoDistanceParams::unit());
        CHECK(report.dimension.has_value());
        check_certificate(report, x);
    }
}

TEST_CASE("reported dimension is independent of the two-distance parameters") {
    SeededRng rng(107);
    const TwoDistanceParams grid[] = {TwoDistanceParams(Q(1), Q(2)),
                                      TwoDistanceParams(Q(2), Q(3)),
                                      TwoDistanceParams(Q(3), Q(4))};
    for (int trial = 0; trial < 8; ++trial) {
        const FiniteMetricSpace x = gen_cut_sum_metric(4, 3, rng);
        std::optional<int> seen;
        for (const TwoDistanceParams& p : grid) {
            const L1Report report = cross_validate(x, p);
            REQUIRE(report.dimension.has_value());
            if (seen) CHECK(*seen == *report.dimension);
            seen = report.dimension;
        }
    }
}

TEST_CASE("parallel pipeline reproduces the sequential result") {
    SeededRng rng(109);
    for (int trial = 0; trial < 6; ++trial) {
        const FiniteMetricSpace x = gen_cut_sum_metric(5, 4, rng);
        PipelineBudgets sequential, parallel;
        parallel.threads = 4;
        const L1Report a = cross_validate(x, TwoDistanceParams::unit(), sequential);
        const L1Report b = cross_validate(x, TwoDistanceParams::unit(), parallel);
        CHECK(a.dimension == b.dimension);
        CHECK(a.embedding == b.embedding);
        REQUIRE(a.route_gh.size() == b.route_gh.size());
        for (size_t e = 0; e < a.route_gh.size(); ++e)
            CHECK(a.route_gh[e].min_twice_gh == b.route_gh[e].min_twice_gh);
    }
}
