#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "l1embed/cuts.hpp"
#include "l1embed/errors.hpp"
#include "l1embed/graph.hpp"
#include "l1embed/metric_space.hpp"
#include "l1embed/rational.hpp"

namespace l1embed {

using Json = nlohmann::json;

// Inputs accept rationals as JSON integers or "p/q" strings; outputs always
// use the "p/q" form in lowest terms, which keeps golden files byte-stable.
inline Rational rational_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("expected an integer or a 'p/q' string, got: " + v.dump());
}

inline Json rational_to_json(const Rational& q) { return format_rational(q); }

struct MetricDocument {
    std::vector<std::string> labels;  // empty when absent
    std::vector<std::vector<Rational>> dist;
};

inline MetricDocument metric_document_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("dist"))
        throw ParseError("metric document needs a 'dist' matrix");
    const Json& m = doc["dist"];
    if (!m.is_array() || m.empty()) throw ParseError("'dist' must be a nonempty array of rows");
    MetricDocument out;
    for (const Json& row : m) {
        if (!row.is_array() || row.size() != m.size())
            throw ParseError("'dist' must be square");
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const Json& v : row) r.push_back(rational_from_json(v));
        out.dist.push_back(std::move(r));
    }
    if (doc.contains("labels")) {
        const Json& labels = doc["labels"];
        if (!labels.is_array() || labels.size() != m.size())
            throw ParseError("'labels' must list one name per point");
        for (const Json& l : labels) out.labels.push_back(l.get<std::string>());
    }
    return out;
}

inline Json metric_document_to_json(const std::vector<std::vector<Rational>>& dist,
                                    const std::vector<std::string>& labels = {}) {
    Json rows = Json::array();
    for (const auto& row : dist) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rational_to_json(v));
        rows.push_back(std::move(r));
    }
    Json doc{{"dist", std::move(rows)}};
    if (!labels.empty()) doc["labels"] = labels;
    return doc;
}

inline SimpleGraph graph_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("graph document needs 'n' and 'edges'");
    const int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return SimpleGraph(n, std::move(edges));
    } catch (const DomainError& err) {
        throw ParseError(std::string("bad graph document: ") + err.what());
    }
}

inline Json graph_to_json(const SimpleGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"n", g.size()}, {"edges", std::move(edges)}};
}

inline CutDecomposition decomposition_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("cuts"))
        throw ParseError("decomposition document needs 'n' and 'cuts'");
    const int n = doc["n"].get<int>();
    std::vector<std::pair<Cut, Rational>> terms;
    for (const Json& t : doc["cuts"]) {
        if (!t.contains("side")) throw ParseError("each cut needs a 'side'");
        std::vector<int> side = t["side"].get<std::vector<int>>();
        Rational weight = t.contains("weight") ? rational_from_json(t["weight"]) : Rational(1);
        try {
            terms.emplace_back(Cut::from_points(n, side), std::move(weight));
        } catch (const DomainError& err) {
            throw ParseError(std::string("bad cut: ") + err.what());
        }
    }
    try {
        return CutDecomposition(n, std::move(terms));
    } catch (const DomainError& err) {
        throw ParseError(std::string("bad decomposition document: ") + err.what());
    }
}

inline Json decomposition_to_json(const CutDecomposition& dec) {
    Json cuts = Json::array();
    for (const auto& [cut, weight] : dec.terms)
        cuts.push_back(Json{{"side", cut.side_points()}, {"weight", rational_to_json(weight)}});
    return Json{{"n", dec.n}, {"cuts", std::move(cuts)}};
}

}  // namespace l1embed
