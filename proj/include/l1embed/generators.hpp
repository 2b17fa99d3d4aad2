#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "l1embed/cuts.hpp"
#include "l1embed/errors.hpp"
#include "l1embed/graph.hpp"
#include "l1embed/metric_space.hpp"

namespace l1embed {

// Seeded instance source. mt19937_64 output is fixed by the standard and the
// draws below avoid std distributions, so the same seed yields the same
// instance on every platform and in every run.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    int int_in(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Strictly positive, numerator in 1..max_num, denominator in 1..max_den.
    Rational positive_rational(int max_num = 8, int max_den = 3) {
        return make_rational(int_in(1, max_num), int_in(1, max_den));
    }

private:
    std::mt19937_64 engine_;
};

// Random metric by repair: entries drawn from a rational grid, clamped to a
// maximum, then closed under shortest paths (Floyd-Warshall over exact
// rationals). The closure output always validates.
inline FiniteMetricSpace gen_random_metric(int n, SeededRng& rng) {
    if (n < 1) throw DomainError("BadParams: need n >= 1");
    const Rational clamp = make_rational(4);
    std::vector<std::vector<Rational>> d(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational v = make_rational(rng.int_in(1, 12), rng.int_in(1, 3));
            if (v > clamp) v = clamp;
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            d[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || i == k || j == k) continue;
                const Rational via = d[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                                     d[static_cast<size_t>(k)][static_cast<size_t>(j)];
                if (via < d[static_cast<size_t>(i)][static_cast<size_t>(j)])
                    d[static_cast<size_t>(i)][static_cast<size_t>(j)] = via;
            }
    return FiniteMetricSpace(std::move(d));
}

inline SimpleGraph gen_random_graph(int n, SeededRng& rng, int edge_percent = 50) {
    if (n < 1 || edge_percent < 0 || edge_percent > 100) throw DomainError("BadParams");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < edge_percent) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

// k distinct positive-weight cuts that separate every point pair, so the
// evaluated sum is a genuine metric. Separation needs at least ceil(log2 n)
// cuts; draws are retried until a separating family appears.
inline CutDecomposition gen_random_decomposition(int n, int k, SeededRng& rng) {
    if (n < 2) throw DomainError("BadParams: need n >= 2");
    const std::vector<Cut> pool = all_cuts(n);
    if (k < 1 || k > static_cast<int>(pool.size()))
        throw DomainError("BadParams: cut count out of range");
    int needed_bits = 0;
    while ((1 << needed_bits) < n) ++needed_bits;
    if (k < needed_bits)
        throw DomainError("BadParams: " + std::to_string(k) + " cuts cannot separate " +
                          std::to_string(n) + " points");

    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> indices(pool.size());
        for (size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int>(i);
        for (int i = 0; i < k; ++i) {
            const int j = i + static_cast<int>(rng.below(indices.size() - static_cast<size_t>(i)));
            std::swap(indices[static_cast<size_t>(i)], indices[static_cast<size_t>(j)]);
        }
        std::vector<int> chosen(indices.begin(), indices.begin() + k);
        std::sort(chosen.begin(), chosen.end());

        bool separating = true;
        for (int i = 0; i < n && separating; ++i)
            for (int j = i + 1; j < n && separating; ++j) {
                bool split = false;
                for (int c : chosen) split = split || pool[static_cast<size_t>(c)].separates(i, j);
                separating = split;
            }
        if (!separating) continue;

        std::vector<std::pair<Cut, Rational>> terms;
        terms.reserve(static_cast<size_t>(k));
        for (int c : chosen)
            terms.emplace_back(pool[static_cast<size_t>(c)], rng.positive_rational(6, 3));
        return CutDecomposition(n, std::move(terms));
    }
    throw InternalCheckError("failed to draw a separating cut family");
}

inline FiniteMetricSpace gen_cut_sum_metric(int n, int k, SeededRng& rng) {
    const CutDecomposition dec = gen_random_decomposition(n, k, rng);
    return FiniteMetricSpace(evaluate_decomposition(dec).matrix());
}

}  // namespace l1embed
