#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <utility>
#include <vector>

#include "l1embed/cuts.hpp"
#include "l1embed/metric_space.hpp"
#include "l1embed/simplex_lp.hpp"

namespace l1embed {

// Writes d as a positive combination of cut pseudometrics, or reports that d
// lies outside the cut cone (equivalently: d has no isometric embedding into
// any rectilinear space). The feasibility system has one equality per point
// pair and one nonnegative weight per canonical cut; solutions are basic, so
// at most n(n-1)/2 cuts carry positive weight. Decompositions are not unique;
// callers must compare reconstructed metrics, never weight vectors.
inline std::optional<CutDecomposition> decompose(const FinitePseudometricSpace& d,
                                                 int max_points = 14) {
    const int n = d.size();
    if (n == 1) return CutDecomposition(1, {});

    // Columns ordered most-unbalanced first (singleton sides, then their
    // complements, then balanced cuts). Bland's rule then prefers bases of
    // star-like cuts, which keeps the nesting hypergraph of the returned
    // decomposition sparse; the all-equal metric on four points decomposes
    // into the four singleton cuts rather than the three balanced ones.
    std::vector<Cut> cuts = all_cuts(n, max_points);
    std::stable_sort(cuts.begin(), cuts.end(), [n](const Cut& a, const Cut& b) {
        auto effective = [n](const Cut& c) {
            const int s = std::popcount(c.side_mask());
            return std::min(s, n - s);
        };
        return effective(a) < effective(b);
    });
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> row;
            row.reserve(cuts.size());
            for (const Cut& c : cuts) row.emplace_back(c.separates(i, j) ? 1 : 0);
            a.push_back(std::move(row));
            b.push_back(d.dist(i, j));
        }

    auto weights = solve_equality_feasibility(a, b);
    if (!weights) return std::nullopt;

    // Support sparsification: walk the support from the most balanced cut
    // down and drop any cut the remaining ones can do without, re-solving
    // the restricted system each time. Once a cut survives a drop attempt it
    // can never become droppable later (fewer columns only shrink the
    // feasible set), so one pass reaches an inclusion-minimal support. This
    // keeps the nesting hypergraph small and the graph family tractable.
    std::vector<int> support;
    for (size_t c = 0; c < cuts.size(); ++c)
        if ((*weights)[c] > 0) support.push_back(static_cast<int>(c));
    const std::vector<int> snapshot(support.rbegin(), support.rend());
    for (int victim : snapshot) {
        if (std::find(support.begin(), support.end(), victim) == support.end()) continue;
        std::vector<int> trial;
        for (int c : support)
            if (c != victim) trial.push_back(c);
        std::vector<std::vector<Rational>> sub(a.size());
        for (size_t r = 0; r < a.size(); ++r)
            for (int c : trial) sub[r].push_back(a[r][static_cast<size_t>(c)]);
        auto reduced = solve_equality_feasibility(sub, b);
        if (!reduced) continue;
        support.clear();
        for (size_t t = 0; t < trial.size(); ++t)
            if ((*reduced)[t] > 0) support.push_back(trial[t]);
        std::fill(weights->begin(), weights->end(), Rational(0));
        for (size_t t = 0; t < trial.size(); ++t)
            (*weights)[static_cast<size_t>(trial[t])] = (*reduced)[t];
    }

    std::vector<std::pair<Cut, Rational>> terms;
    for (int c : support) terms.emplace_back(cuts[static_cast<size_t>(c)], (*weights)[static_cast<size_t>(c)]);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    CutDecomposition dec(n, std::move(terms));

    if (!(evaluate_decomposition(dec) == d))
        throw InternalCheckError("cut decomposition failed its round-trip check");
    return dec;
}

inline bool is_in_cut_cone(const FinitePseudometricSpace& d, int max_points = 14) {
    return decompose(d, max_points).has_value();
}

}  // namespace l1embed
