#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <vector>

#include "l1embed/generators.hpp"
#include "l1embed/gromov_hausdorff.hpp"
#include "l1embed/metric_space.hpp"
#include "test_support.hpp"

using namespace l1embed;
using testsupport::Q;
using testsupport::mat;
using testsupport::path3;

namespace {

// Brute-force oracle: minimum distortion over every correspondence, and over
// every inclusion-minimal one, by enumerating all subsets of X x Y. Kept
// entirely independent of the search code.
struct BruteForceResult {
    Rational min_all;
    Rational min_irreducible;
};

BruteForceResult brute_force_min_distortion(const FiniteMetricSpace& x,
                                            const FiniteMetricSpace& y) {
    const int nx = x.size(), ny = y.size();
    const int cells = nx * ny;
    REQUIRE(cells <= 16);
    std::optional<Rational> best_all, best_irr;
    for (unsigned mask = 1; mask < (1u << cells); ++mask) {
        std::vector<int> row(nx, 0), col(ny, 0);
        std::vector<std::pair<int, int>> pairs;
        for (int c = 0; c < cells; ++c)
            if ((mask >> c) & 1) {
                const int i = c / ny, j = c % ny;
                ++row[i];
                ++col[j];
                pairs.emplace_back(i, j);
            }
        if (std::count(row.begin(), row.end(), 0) || std::count(col.begin(), col.end(), 0))
            continue;
        Rational dis = 0;
        for (size_t a = 0; a < pairs.size(); ++a)
            for (size_t b = a; b < pairs.size(); ++b) {
                const Rational gap = rational_abs(x.dist(pairs[a].first, pairs[b].first) -
                                                  y.dist(pairs[a].second, pairs[b].second));
                if (gap > dis) dis = gap;
            }
        if (!best_all || dis < *best_all) best_all = dis;
        bool irreducible = true;
        for (auto [i, j] : pairs)
            if (row[i] >= 2 && col[j] >= 2) {
                irreducible = false;
                break;
            }
        if (irreducible && (!best_irr || dis < *best_irr)) best_irr = dis;
    }
    return {*best_all, *best_irr};
}

}  // namespace

TEST_CASE("distortion basics") {
    const FiniteMetricSpace x = path3();
    Correspondence identity({{0, 0}, {1, 1}, {2, 2}});
    CHECK(distortion(identity, x, x) == Q(0));

    const FiniteMetricSpace d2 = simplex(2, Q(1));
    const FiniteMetricSpace d1 = simplex(1, Q(1));
    Correspondence collapse({{0, 0}, {1, 0}});
    CHECK(distortion(collapse, d2, d1) == Q(1));

    const FiniteMetricSpace d2big = simplex(2, Q(3));
    Correspondence bijection({{0, 0}, {1, 1}});
    CHECK(distortion(bijection, d2, d2big) == Q(2));

    Correspondence not_covering({{0, 0}});
    CHECK_THROWS_AS(distortion(not_covering, d2, d2big), DomainError);
}

TEST_CASE("gh distance on named instances") {
    const FiniteMetricSpace x = path3();
    CHECK(gh_distance_exact(x, x).distance == Q(0));

    // Distance to the one-point space is half the diameter.
    CHECK(gh_distance_exact(simplex(1, Q(1)), x).distance == Q(1));

    CHECK(gh_distance_exact(simplex(3, Q(1)), simplex(2, Q(1))).distance == Q(1, 2));

    CHECK_THROWS_AS(gh_distance_exact(x, x, 2), BudgetError);
}

TEST_CASE("gh witness certifies the distance") {
    SeededRng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const FiniteMetricSpace x = gen_random_metric(rng.int_in(1, 5), rng);
        const FiniteMetricSpace y = gen_random_metric(rng.int_in(1, 5), rng);
        const GHResult r = gh_distance_exact(x, y);
        CHECK(r.witness.covers(x.size(), y.size()));
        CHECK(distortion(r.witness, x, y) == r.distance * 2);
        // Deterministic: a second run reproduces value and witness.
        const GHResult again = gh_distance_exact(x, y);
        CHECK(again.distance == r.distance);
        CHECK(again.witness == r.witness);
    }
}

TEST_CASE("gh search agrees with the exhaustive correspondence oracle") {
    SeededRng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        const int nx = rng.int_in(1, 4);
        const int ny = rng.int_in(1, std::min(4, 16 / nx));
        const FiniteMetricSpace x = gen_random_metric(nx, rng);
        const FiniteMetricSpace y = gen_random_metric(ny, rng);
        const BruteForceResult oracle = brute_force_min_distortion(x, y);
        CHECK(oracle.min_all == oracle.min_irreducible);
        CHECK(gh_distance_exact(x, y).distance * 2 == oracle.min_all);
    }
}

TEST_CASE("general search matches the one-distance kernel on simplex sides") {
    SeededRng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = rng.int_in(1, 5);
        const Rational lambda = rng.positive_rational(6, 3);
        const FiniteMetricSpace s = simplex(m, lambda);
        const FiniteMetricSpace y = gen_random_metric(rng.int_in(1, 5), rng);
        const GHResult fast = gh_distance_exact(s, y);
        const GHResult slow = detail::gh_general(s, y);
        CHECK(fast.distance == slow.distance);
        CHECK(distortion(fast.witness, s, y) == fast.distance * 2);
    }
}

TEST_CASE("gh is symmetric") {
    SeededRng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const FiniteMetricSpace x = gen_random_metric(rng.int_in(1, 5), rng);
        const FiniteMetricSpace y = gen_random_metric(rng.int_in(1, 5), rng);
        CHECK(gh_distance_exact(x, y).distance == gh_distance_exact(y, x).distance);
    }
}

TEST_CASE("gh vanishes exactly on isometric pairs") {
    SeededRng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.int_in(2, 5);
        const FiniteMetricSpace x = gen_random_metric(n, rng);
        // Relabeled copy: an isometric space.
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.int_in(0, i)]);
        std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = x.dist(perm[i], perm[j]);
        CHECK(gh_distance_exact(x, FiniteMetricSpace(d)).distance == Q(0));

        // Scaling changes the diameter, so the scaled space is not isometric.
        std::vector<std::vector<Rational>> e = x.matrix();
        for (auto& row : e)
            for (auto& v : row) v *= 3;
        CHECK(gh_distance_exact(x, FiniteMetricSpace(e)).distance > Q(0));
    }
}

TEST_CASE("closed form for oversized simplexes") {
    CHECK(gh_simplex_closed_form(Q(1), 4, simplex(3, Q(1))) == Q(1, 2));
    const FiniteMetricSpace x = path3();
    CHECK(gh_simplex_closed_form(Q(0), 7, x) == Q(1));  // diam / 2
    CHECK(gh_simplex_closed_form(Q(5), 2, simplex(1, Q(1))) == Q(5, 2));
    CHECK_THROWS_AS(gh_simplex_closed_form(Q(1), 3, simplex(3, Q(1))), DomainError);
    CHECK_THROWS_AS(gh_simplex_closed_form(Q(-1), 4, simplex(3, Q(1))), DomainError);
}

TEST_CASE("search reproduces the closed form above the point count") {
    SeededRng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.int_in(1, 5);
        const FiniteMetricSpace x = gen_random_metric(n, rng);
        const int m = n + rng.int_in(1, 3);
        const Rational lambda =
            trial % 7 == 0 ? Rational(0)
                           : x.diam() * make_rational(rng.int_in(1, 16), 8);  // up to 2 diam
        const Rational expected = lambda == 0
                                      ? Rational(x.diam() / 2)
                                      : gh_simplex_closed_form(lambda, m, x);
        CHECK(gh_distance_exact(simplex(m, lambda), x).distance == expected);
    }
}

TEST_CASE("gh bounds sandwich") {
    const FiniteMetricSpace x = path3();
    CHECK(gh_bounds(x, x) == std::pair<Rational, Rational>{Q(0), Q(1)});
    CHECK(gh_bounds(simplex(1, Q(1)), x) == std::pair<Rational, Rational>{Q(1), Q(1)});
    CHECK(gh_bounds(simplex(2, Q(1)), simplex(2, Q(4))) ==
          std::pair<Rational, Rational>{Q(3, 2), Q(2)});

    SeededRng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const FiniteMetricSpace a = gen_random_metric(rng.int_in(1, 5), rng);
        const FiniteMetricSpace b = gen_random_metric(rng.int_in(1, 5), rng);
        const auto [lo, hi] = gh_bounds(a, b);
        const Rational d = gh_distance_exact(a, b).distance;
        CHECK(lo <= d);
        CHECK(d <= hi);
    }
}

TEST_CASE("partition search on named instances") {
    CHECK_FALSE(borsuk_partition_exists(simplex(4, Q(1)), 2).exists);
    CHECK_FALSE(borsuk_partition_exists(simplex(4, Q(1)), 3).exists);
    CHECK(borsuk_partition_exists(simplex(4, Q(1)), 4).exists);

    // Two-distance space of the path P_3 (adjacent at b): {0,2} vs {1}.
    const FiniteMetricSpace p3b = two_distance_from_graph(
        SimpleGraph(3, {{0, 1}, {1, 2}}), TwoDistanceParams::unit(), AdjacentGets::B);
    const PartitionWitness w = borsuk_partition_exists(p3b, 2);
    REQUIRE(w.exists);
    CHECK(w.part[0] == w.part[2]);
    CHECK(w.part[0] != w.part[1]);

    CHECK_THROWS_AS(borsuk_partition_exists(p3b, 1), DomainError);
    CHECK_THROWS_AS(borsuk_partition_exists(p3b, 4), DomainError);
}

TEST_CASE("partition search agrees with exhaustive partition enumeration") {
    SeededRng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.int_in(2, 6);
        const FiniteMetricSpace x = gen_random_metric(n, rng);
        const int m = rng.int_in(2, n);
        // Oracle: enumerate every assignment of points to m labels.
        bool oracle = false;
        std::vector<int> label(n, 0);
        for (;;) {
            int used = *std::max_element(label.begin(), label.end()) + 1;
            if (used == m) {
                bool all_smaller = true;
                for (int i = 0; i < n && all_smaller; ++i)
                    for (int j = i + 1; j < n && all_smaller; ++j)
                        if (label[i] == label[j] && x.dist(i, j) >= x.diam())
                            all_smaller = false;
                bool all_used = true;
                std::vector<char> seen(m, 0);
                for (int v : label) seen[v] = 1;
                for (char s : seen) all_used = all_used && s;
                if (all_smaller && all_used) oracle = true;
            }
            int pos = n - 1;
            while (pos >= 0 && label[pos] == m - 1) label[pos--] = 0;
            if (pos < 0) break;
            ++label[pos];
        }
        CHECK(borsuk_partition_exists(x, m).exists == oracle);
    }
}

TEST_CASE("partition criterion on named instances") {
    const BorsukReport neg = verify_borsuk_theorem(simplex(3, Q(1)), 2, Q(1, 2));
    CHECK(neg.criterion_holds);
    CHECK_FALSE(neg.partition.exists);
    CHECK(neg.twice_gh == Q(1));

    const BorsukReport pos = verify_borsuk_theorem(path3(), 2, Q(1));
    CHECK(pos.criterion_holds);
    CHECK(pos.partition.exists);
    CHECK(pos.twice_gh < Q(2));

    const BorsukReport tiny = verify_borsuk_theorem(simplex(2, Q(1)), 2, Q(1, 2));
    CHECK(tiny.criterion_holds);
    CHECK(tiny.partition.exists);
    CHECK(tiny.twice_gh < Q(1));

    CHECK_THROWS_AS(verify_borsuk_theorem(path3(), 2, Q(2)), DomainError);  // lambda = diam
}

TEST_CASE("partition criterion holds on a random sweep") {
    SeededRng rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = rng.int_in(2, 5);
        const FiniteMetricSpace x = gen_random_metric(n, rng);
        for (int m = 2; m <= n; ++m)
            for (int grid = 1; grid <= 7; grid += 3) {
                const BorsukReport rep =
                    verify_borsuk_theorem(x, m, x.diam() * make_rational(grid, 8));
                CHECK(rep.criterion_holds);
            }
    }
}
