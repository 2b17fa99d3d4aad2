#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "l1embed/coloring.hpp"
#include "l1embed/cut_cone.hpp"
#include "l1embed/errors.hpp"
#include "l1embed/generators.hpp"
#include "l1embed/gromov_hausdorff.hpp"
#include "l1embed/json_io.hpp"
#include "l1embed/l1_dimension.hpp"
#include "l1embed/nesting.hpp"
#include "l1embed/parallel.hpp"

namespace l1embed {

// Exit codes: 0 success, 1 parse or validation failure, 2 metric outside the
// cut cone, 3 exact-search budget exceeded, 4 internal invariant violation.

namespace cli_detail {

inline Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(f);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

inline void emit(std::ostream& out, std::ostream& diag, const Json& doc,
                 const std::string& summary) {
    out << doc.dump(2) << "\n";
    if (!summary.empty()) diag << summary << "\n";
}

inline FiniteMetricSpace load_metric(const std::string& path) {
    return validate_metric(metric_document_from_json(load_json(path)).dist);
}

inline FinitePseudometricSpace load_pseudometric(const std::string& path) {
    return validate_pseudometric(metric_document_from_json(load_json(path)).dist);
}

// `nesting` and `graph-family` take either a metric document (decomposed
// first) or an explicit decomposition document.
inline std::optional<CutDecomposition> load_cut_family(const std::string& path, int max_points) {
    const Json doc = load_json(path);
    if (doc.contains("cuts")) return decomposition_from_json(doc);
    return decompose(validate_pseudometric(metric_document_from_json(doc).dist), max_points);
}

inline Json correspondence_to_json(const Correspondence& r) {
    Json pairs = Json::array();
    for (auto [i, j] : r.pairs) pairs.push_back(Json::array({i, j}));
    return pairs;
}

inline Json hypergraph_to_json(const NestingHypergraph& h) {
    Json cuts = Json::array();
    for (const Cut& c : h.cuts) cuts.push_back(c.side_points());
    Json pairs = Json::array();
    for (auto [a, b] : h.pair_edges) pairs.push_back(Json::array({a, b}));
    Json triples = Json::array();
    for (const auto& [a, b, c] : h.triple_edges) triples.push_back(Json::array({a, b, c}));
    return Json{{"cuts", std::move(cuts)}, {"pairs", std::move(pairs)},
                {"triples", std::move(triples)}};
}

inline Json report_to_json(const L1Report& report, const std::vector<std::string>& labels) {
    Json doc;
    doc["in_cut_cone"] = report.in_cut_cone;
    doc["dimension"] = report.dimension ? Json(*report.dimension) : Json(nullptr);
    if (!report.in_cut_cone) return doc;
    doc["a"] = rational_to_json(report.a);
    doc["b"] = rational_to_json(report.b);
    if (report.decomposition) doc["decomposition"] = decomposition_to_json(*report.decomposition);
    if (!report.route_gh.empty()) {
        Json entries = Json::array();
        for (const auto& e : report.route_gh)
            entries.push_back(Json{{"m", e.m},
                                   {"min_twice_gh", rational_to_json(e.min_twice_gh)},
                                   {"below_b", e.below_b}});
        doc["route_gh"] = std::move(entries);
    }
    if (report.route_coloring) doc["route_coloring"] = *report.route_coloring;
    if (report.route_hypergraph) doc["route_hypergraph"] = *report.route_hypergraph;
    if (!report.embedding.empty()) {
        Json rows = Json::array();
        for (const auto& row : report.embedding) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(rational_to_json(v));
            rows.push_back(std::move(r));
        }
        doc["embedding"] = std::move(rows);
    }
    if (!labels.empty()) doc["labels"] = labels;
    return doc;
}

struct SelftestCheck {
    std::string name;
    bool ok = false;
    std::string info;
};

// Deterministic built-in battery: named instances plus seeded random sweeps
// of the full cross-validated pipeline and the partition criterion. Checks
// run independently (optionally in parallel) and are reported in a fixed
// order, so the output bytes depend only on seed and check list.
inline std::vector<SelftestCheck> run_selftest(std::uint64_t seed, int threads) {
    std::vector<std::function<SelftestCheck()>> checks;

    auto expect_dimension = [](std::string name, std::vector<std::vector<Rational>> dist,
                               int expected) {
        return [name = std::move(name), dist = std::move(dist), expected]() {
            SelftestCheck check{name, false, ""};
            const L1Report rep = cross_validate(FiniteMetricSpace(dist),
                                                TwoDistanceParams::unit());
            check.ok = rep.dimension && *rep.dimension == expected;
            check.info = "dimension " +
                         (rep.dimension ? std::to_string(*rep.dimension) : std::string("none")) +
                         ", expected " + std::to_string(expected);
            return check;
        };
    };

    const Rational one(1), two(2);
    checks.push_back(expect_dimension("path-1-1-2",
                                      {{Rational(0), one, two},
                                       {one, Rational(0), one},
                                       {two, one, Rational(0)}},
                                      1));
    checks.push_back(expect_dimension("equilateral-triangle-2",
                                      {{Rational(0), two, two},
                                       {two, Rational(0), two},
                                       {two, two, Rational(0)}},
                                      2));
    checks.push_back(expect_dimension("four-point-equilateral-2",
                                      {{Rational(0), two, two, two},
                                       {two, Rational(0), two, two},
                                       {two, two, Rational(0), two},
                                       {two, two, two, Rational(0)}},
                                      2));

    checks.push_back([]() {
        SelftestCheck check{"k23-not-in-cone", false, ""};
        // Shortest-path metric of K_{2,3}: parts {0,1} and {2,3,4}.
        std::vector<std::vector<Rational>> d(5, std::vector<Rational>(5, Rational(1)));
        for (int i = 0; i < 5; ++i) d[i][i] = 0;
        d[0][1] = d[1][0] = Rational(2);
        for (int i = 2; i < 5; ++i)
            for (int j = 2; j < 5; ++j)
                if (i != j) d[i][j] = Rational(2);
        check.ok = !is_in_cut_cone(FiniteMetricSpace(d));
        check.info = check.ok ? "rejected" : "accepted";
        return check;
    });

    for (int i = 0; i < 24; ++i) {
        checks.push_back([seed, i]() {
            SelftestCheck check{"cut-sum-" + std::to_string(i), false, ""};
            SeededRng rng(seed + 1000 + static_cast<std::uint64_t>(i));
            const int n = 3 + i % 3;
            int bits = 0;
            while ((1 << bits) < n) ++bits;
            const int k = std::max(bits, 2 + i % 3);
            const FiniteMetricSpace x = gen_cut_sum_metric(n, k, rng);
            const L1Report rep = cross_validate(x, TwoDistanceParams::unit());
            check.ok = rep.in_cut_cone && rep.dimension.has_value();
            check.info = "n=" + std::to_string(n) + " cuts=" + std::to_string(k) +
                         " dimension=" +
                         (rep.dimension ? std::to_string(*rep.dimension) : std::string("none"));
            return check;
        });
    }

    for (int i = 0; i < 8; ++i) {
        checks.push_back([seed, i]() {
            SelftestCheck check{"random-metric-" + std::to_string(i), false, ""};
            SeededRng rng(seed + 2000 + static_cast<std::uint64_t>(i));
            const int n = 3 + i % 2;
            const FiniteMetricSpace x = gen_random_metric(n, rng);
            // Metrics on up to four points always decompose.
            const L1Report rep = cross_validate(x, TwoDistanceParams::unit());
            check.ok = rep.in_cut_cone && rep.dimension.has_value();
            check.info = "n=" + std::to_string(n) + " dimension=" +
                         (rep.dimension ? std::to_string(*rep.dimension) : std::string("none"));
            return check;
        });
    }

    for (int i = 0; i < 6; ++i) {
        checks.push_back([seed, i]() {
            SelftestCheck check{"borsuk-" + std::to_string(i), false, ""};
            SeededRng rng(seed + 3000 + static_cast<std::uint64_t>(i));
            const int n = 4 + i % 2;
            const FiniteMetricSpace x = gen_random_metric(n, rng);
            const int m = 2 + i % 2;
            const Rational lambda = x.diam() * make_rational(1 + i % 3, 4);
            const BorsukReport rep = verify_borsuk_theorem(x, m, lambda);
            check.ok = rep.criterion_holds;
            check.info = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         (rep.partition.exists ? " partition" : " no-partition");
            return check;
        });
    }

    std::vector<SelftestCheck> results(checks.size());
    parallel_for_index(static_cast<int>(checks.size()), threads, [&](int i) {
        try {
            results[static_cast<size_t>(i)] = checks[static_cast<size_t>(i)]();
        } catch (const Error& e) {
            results[static_cast<size_t>(i)] =
                SelftestCheck{"check-" + std::to_string(i), false, e.what()};
        }
    });
    return results;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& diag) {
    using cli_detail::emit;
    using cli_detail::load_json;

    CLI::App app{"exact l1-embeddability and Gromov-Hausdorff toolkit"};
    app.require_subcommand(1);
    int code = 0;

    // Shared option storage. Rationals arrive as strings and are parsed after
    // CLI11 is done, so rational syntax errors report as exit 1 like any
    // other parse failure.
    std::string in_path, in_path2;
    std::string a_text = "1", b_text = "2", lambda_text, route = "all", via = "direct";
    std::string kind, adjacent = "b";
    int m_value = 0, n_value = 0, k_value = 0, edge_percent = 50;
    int budget_gh = 8, budget_cuts = 14, budget_family = 12, threads = 1;
    std::uint64_t seed = 42;

    auto params = [&] { return TwoDistanceParams(parse_rational(a_text), parse_rational(b_text)); };
    auto budgets = [&] {
        PipelineBudgets b;
        b.gh_limit = budget_gh;
        b.max_points = budget_cuts;
        b.max_triples = budget_family;
        b.threads = threads;
        return b;
    };

    auto* validate_cmd = app.add_subcommand("validate", "check the metric axioms of a document");
    validate_cmd->add_option("input", in_path, "metric JSON document")->required();
    bool allow_pseudo = false;
    validate_cmd->add_flag("--pseudo", allow_pseudo, "accept zero distances between distinct points");
    validate_cmd->callback([&] {
        const MetricDocument doc = metric_document_from_json(load_json(in_path));
        try {
            if (allow_pseudo)
                validate_pseudometric(doc.dist);
            else
                validate_metric(doc.dist);
        } catch (const MetricValidationError& e) {
            Json j{{"valid", false}, {"error", e.what()}, {"defect", to_string(e.defect())}};
            emit(out, diag, j, std::string("invalid: ") + e.what());
            code = 1;
            return;
        }
        emit(out, diag, Json{{"valid", true}, {"n", doc.dist.size()}, {"pseudometric", allow_pseudo}},
             "valid (" + std::to_string(doc.dist.size()) + " points)");
    });

    auto* diam_cmd = app.add_subcommand("diam", "diameter of a metric document");
    diam_cmd->add_option("input", in_path, "metric JSON document")->required();
    diam_cmd->callback([&] {
        const Rational d = cli_detail::load_pseudometric(in_path).diam();
        emit(out, diag, Json{{"diam", rational_to_json(d)}}, "diam " + format_rational(d));
    });

    auto* gh_cmd = app.add_subcommand("gh", "exact Gromov-Hausdorff distance between two metrics");
    gh_cmd->add_option("x", in_path, "first metric JSON document")->required();
    gh_cmd->add_option("y", in_path2, "second metric JSON document")->required();
    gh_cmd->add_option("--budget-gh", budget_gh, "max points per side");
    gh_cmd->callback([&] {
        const GHResult r = gh_distance_exact(cli_detail::load_metric(in_path),
                                             cli_detail::load_metric(in_path2), budget_gh);
        emit(out, diag,
             Json{{"distance", rational_to_json(r.distance)},
                  {"witness", cli_detail::correspondence_to_json(r.witness)}},
             "d_GH = " + format_rational(r.distance));
    });

    auto* borsuk_cmd =
        app.add_subcommand("borsuk", "partition criterion: m parts of smaller diameter vs 2 d_GH");
    borsuk_cmd->add_option("input", in_path, "metric JSON document")->required();
    borsuk_cmd->add_option("--m", m_value, "number of parts")->required();
    borsuk_cmd->add_option("--lambda", lambda_text, "simplex distance, 0 < lambda < diam (default diam/2)");
    borsuk_cmd->add_option("--budget-gh", budget_gh, "max points per side");
    borsuk_cmd->callback([&] {
        const FiniteMetricSpace x = cli_detail::load_metric(in_path);
        const Rational lambda =
            lambda_text.empty() ? Rational(x.diam() / 2) : parse_rational(lambda_text);
        const BorsukReport rep = verify_borsuk_theorem(x, m_value, lambda, budget_gh);
        Json j{{"m", rep.m},
               {"lambda", rational_to_json(rep.lambda)},
               {"diam", rational_to_json(rep.diameter)},
               {"twice_gh", rational_to_json(rep.twice_gh)},
               {"partition_exists", rep.partition.exists},
               {"criterion_holds", rep.criterion_holds}};
        if (rep.partition.exists) j["partition"] = rep.partition.part;
        emit(out, diag, j,
             std::string(rep.partition.exists ? "partition exists" : "no partition") +
                 ", 2 d_GH = " + format_rational(rep.twice_gh) + ", diam = " +
                 format_rational(rep.diameter));
        if (!rep.criterion_holds) code = 4;
    });

    auto* decompose_cmd = app.add_subcommand("cut-decompose", "write a metric as a weighted cut sum");
    decompose_cmd->add_option("input", in_path, "metric JSON document")->required();
    decompose_cmd->add_option("--budget-cuts", budget_cuts, "max points for cut enumeration");
    decompose_cmd->callback([&] {
        const auto dec = decompose(cli_detail::load_pseudometric(in_path), budget_cuts);
        if (!dec) {
            emit(out, diag, Json{{"in_cut_cone", false}}, "not in the cut cone");
            code = 2;
            return;
        }
        Json j = decomposition_to_json(*dec);
        j["in_cut_cone"] = true;
        emit(out, diag, j, std::to_string(dec->terms.size()) + " cuts");
    });

    auto* nesting_cmd =
        app.add_subcommand("nesting", "nesting hypergraph of a cut family or metric");
    nesting_cmd->add_option("input", in_path, "metric or decomposition JSON document")->required();
    nesting_cmd->add_option("--budget-cuts", budget_cuts, "max points for cut enumeration");
    nesting_cmd->callback([&] {
        const auto dec = cli_detail::load_cut_family(in_path, budget_cuts);
        if (!dec) {
            emit(out, diag, Json{{"in_cut_cone", false}}, "not in the cut cone");
            code = 2;
            return;
        }
        const NestingHypergraph h = build_nesting_hypergraph(dec->cuts());
        emit(out, diag, cli_detail::hypergraph_to_json(h),
             std::to_string(h.cuts.size()) + " cuts, " + std::to_string(h.pair_edges.size()) +
                 " incompatible pairs, " + std::to_string(h.triple_edges.size()) +
                 " asteroid triplets");
    });

    auto* family_cmd =
        app.add_subcommand("graph-family", "simple-graph family derived from the nesting hypergraph");
    family_cmd->add_option("input", in_path, "metric or decomposition JSON document")->required();
    family_cmd->add_option("--budget-cuts", budget_cuts, "max points for cut enumeration");
    family_cmd->add_option("--budget-family", budget_family, "max asteroid triplets (3^k graphs)");
    family_cmd->callback([&] {
        const auto dec = cli_detail::load_cut_family(in_path, budget_cuts);
        if (!dec) {
            emit(out, diag, Json{{"in_cut_cone", false}}, "not in the cut cone");
            code = 2;
            return;
        }
        const GraphFamily fam =
            enumerate_graph_family(build_nesting_hypergraph(dec->cuts()), budget_family);
        Json graphs = Json::array();
        for (const SimpleGraph& g : fam.graphs) {
            Json edges = Json::array();
            for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
            graphs.push_back(std::move(edges));
        }
        emit(out, diag,
             Json{{"vertex_count", fam.vertex_count}, {"graphs", std::move(graphs)}},
             std::to_string(fam.graphs.size()) + " graphs on " +
                 std::to_string(fam.vertex_count) + " cut vertices");
    });

    auto* chrom_cmd = app.add_subcommand("chromatic", "exact chromatic number of a simple graph");
    chrom_cmd->add_option("input", in_path, "graph JSON document")->required();
    chrom_cmd->add_option("--via", via, "direct | gh")->check(CLI::IsMember({"direct", "gh"}));
    chrom_cmd->add_option("--a", a_text, "two-distance a (gh route)");
    chrom_cmd->add_option("--b", b_text, "two-distance b (gh route)");
    chrom_cmd->add_option("--budget-gh", budget_gh, "max points per side (gh route)");
    chrom_cmd->callback([&] {
        const SimpleGraph g = graph_from_json(load_json(in_path));
        if (via == "gh") {
            const int chi = chromatic_via_gh(g, params(), budget_gh);
            emit(out, diag, Json{{"chi", chi}, {"via", "gh"}}, "chi = " + std::to_string(chi));
        } else {
            const ColoringResult r = chromatic_number(g);
            emit(out, diag, Json{{"chi", r.chi}, {"coloring", r.colors}, {"via", "direct"}},
                 "chi = " + std::to_string(r.chi));
        }
    });

    auto* cover_cmd = app.add_subcommand("clique-cover", "exact clique cover number of a simple graph");
    cover_cmd->add_option("input", in_path, "graph JSON document")->required();
    cover_cmd->add_option("--via", via, "direct | gh")->check(CLI::IsMember({"direct", "gh"}));
    cover_cmd->add_option("--a", a_text, "two-distance a (gh route)");
    cover_cmd->add_option("--b", b_text, "two-distance b (gh route)");
    cover_cmd->add_option("--budget-gh", budget_gh, "max points per side (gh route)");
    cover_cmd->callback([&] {
        const SimpleGraph g = graph_from_json(load_json(in_path));
        if (via == "gh") {
            const int theta = clique_cover_via_gh(g, params(), budget_gh);
            emit(out, diag, Json{{"theta", theta}, {"via", "gh"}},
                 "theta = " + std::to_string(theta));
        } else {
            const CliqueCoverResult r = clique_cover_number(g);
            emit(out, diag, Json{{"theta", r.theta}, {"cliques", r.cliques}, {"via", "direct"}},
                 "theta = " + std::to_string(r.theta));
        }
    });

    auto* l1dim_cmd = app.add_subcommand("l1dim", "l1-dimension with embedding certificate");
    l1dim_cmd->add_option("input", in_path, "metric JSON document")->required();
    l1dim_cmd->add_option("--a", a_text, "two-distance a");
    l1dim_cmd->add_option("--b", b_text, "two-distance b");
    l1dim_cmd->add_option("--route", route, "gh | coloring | all")
        ->check(CLI::IsMember({"gh", "coloring", "all"}));
    l1dim_cmd->add_option("--budget-gh", budget_gh, "max points per side in gh searches");
    l1dim_cmd->add_option("--budget-cuts", budget_cuts, "max points for cut enumeration");
    l1dim_cmd->add_option("--budget-family", budget_family, "max asteroid triplets");
    l1dim_cmd->add_option("--threads", threads, "worker threads (output is thread-invariant)");
    l1dim_cmd->callback([&] {
        const Json doc = load_json(in_path);
        const MetricDocument md = metric_document_from_json(doc);
        const FiniteMetricSpace x = validate_metric(md.dist);
        L1Report report;
        if (route == "gh") {
            report = l1_dimension_via_gh(x, params(), budgets());
        } else if (route == "coloring") {
            report.a = params().a;
            report.b = params().b;
            report.decomposition = decompose(x, budget_cuts);
            report.in_cut_cone = report.decomposition.has_value();
            if (report.in_cut_cone) {
                report.route_coloring = l1_dimension_via_coloring(x, budgets());
                report.dimension = report.route_coloring;
            }
        } else {
            report = cross_validate(x, params(), budgets());
        }
        emit(out, diag, cli_detail::report_to_json(report, md.labels),
             report.in_cut_cone
                 ? "l1-dimension " + std::to_string(report.dimension.value_or(0))
                 : "not in the cut cone; no rectilinear embedding exists");
        if (!report.in_cut_cone) code = 2;
    });

    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in cross-validation battery");
    selftest_cmd->add_option("--seed", seed, "base seed for the random sweeps");
    selftest_cmd->add_option("--threads", threads, "worker threads (output is thread-invariant)");
    selftest_cmd->callback([&] {
        const auto results = cli_detail::run_selftest(seed, threads);
        int failures = 0;
        Json list = Json::array();
        for (const auto& r : results) {
            if (!r.ok) ++failures;
            list.push_back(Json{{"name", r.name}, {"ok", r.ok}, {"info", r.info}});
        }
        emit(out, diag,
             Json{{"checks", results.size()}, {"failures", failures}, {"results", std::move(list)}},
             std::to_string(results.size()) + " checks, " + std::to_string(failures) +
                 " failures");
        if (failures > 0) code = 4;
    });

    auto* gen_cmd = app.add_subcommand("gen", "generate a reproducible instance document");
    gen_cmd->add_option("--kind", kind, "simplex | random-metric | random-graph | two-distance | cut-sum")
        ->required()
        ->check(CLI::IsMember({"simplex", "random-metric", "random-graph", "two-distance", "cut-sum"}));
    gen_cmd->add_option("--n", n_value, "point / vertex count");
    gen_cmd->add_option("--m", m_value, "simplex point count");
    gen_cmd->add_option("--k", k_value, "cut count (cut-sum)");
    gen_cmd->add_option("--lambda", lambda_text, "simplex distance (default 1)");
    gen_cmd->add_option("--seed", seed, "generator seed");
    gen_cmd->add_option("--a", a_text, "two-distance a");
    gen_cmd->add_option("--b", b_text, "two-distance b");
    gen_cmd->add_option("--edge-percent", edge_percent, "edge probability in percent");
    gen_cmd->add_option("--adjacent", adjacent, "which value adjacent vertices get: a | b")
        ->check(CLI::IsMember({"a", "b"}));
    gen_cmd->callback([&] {
        SeededRng rng(seed);
        if (kind == "simplex") {
            if (m_value < 1) throw DomainError("BadParams: simplex needs --m >= 1");
            const Rational lambda =
                lambda_text.empty() ? Rational(1) : parse_rational(lambda_text);
            emit(out, diag, metric_document_to_json(simplex(m_value, lambda).matrix()),
                 "simplex on " + std::to_string(m_value) + " points");
        } else if (kind == "random-metric") {
            if (n_value < 1) throw DomainError("BadParams: need --n >= 1");
            emit(out, diag, metric_document_to_json(gen_random_metric(n_value, rng).matrix()),
                 "random metric on " + std::to_string(n_value) + " points");
        } else if (kind == "random-graph") {
            if (n_value < 1) throw DomainError("BadParams: need --n >= 1");
            emit(out, diag, graph_to_json(gen_random_graph(n_value, rng, edge_percent)),
                 "random graph on " + std::to_string(n_value) + " vertices");
        } else if (kind == "two-distance") {
            if (n_value < 1) throw DomainError("BadParams: need --n >= 1");
            const SimpleGraph g = gen_random_graph(n_value, rng, edge_percent);
            const auto mode = adjacent == "a" ? AdjacentGets::A : AdjacentGets::B;
            emit(out, diag,
                 metric_document_to_json(two_distance_from_graph(g, params(), mode).matrix()),
                 "two-distance space on " + std::to_string(n_value) + " points");
        } else {  // cut-sum
            if (n_value < 2 || k_value < 1)
                throw DomainError("BadParams: cut-sum needs --n >= 2 and --k >= 1");
            emit(out, diag,
                 metric_document_to_json(gen_cut_sum_metric(n_value, k_value, rng).matrix()),
                 "cut-sum metric on " + std::to_string(n_value) + " points, " +
                     std::to_string(k_value) + " cuts");
        }
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, diag);
        return rc == 0 ? 0 : 1;
    } catch (const BudgetError& e) {
        diag << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalCheckError& e) {
        diag << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {  // parse, validation, domain
        diag << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace l1embed
