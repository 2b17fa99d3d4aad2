#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "l1embed/errors.hpp"
#include "l1embed/metric_space.hpp"

namespace l1embed {

// A bipartition {S, S'} of {0..n-1} into a proper nonempty subset and its
// complement. Stored canonically as the side containing point 0, so the two
// descriptions of the same cut compare equal.
class Cut {
public:
    Cut(int n, std::uint32_t side_mask) : n_(n) {
        if (n < 2 || n > 30) throw DomainError("cut ambient size out of range");
        const std::uint32_t full = (std::uint32_t{1} << n) - 1;
        if ((side_mask & ~full) != 0) throw DomainError("cut side has points outside ambient set");
        if (side_mask == 0 || side_mask == full)
            throw DomainError("cut side must be a proper nonempty subset");
        side_ = (side_mask & 1) ? side_mask : (full & ~side_mask);
    }

    static Cut from_points(int n, std::span<const int> side) {
        std::uint32_t mask = 0;
        for (int p : side) {
            if (p < 0 || p >= n) throw DomainError("cut point out of range");
            mask |= std::uint32_t{1} << p;
        }
        return Cut(n, mask);
    }

    int ambient_size() const { return n_; }
    std::uint32_t side_mask() const { return side_; }
    std::uint32_t complement_mask() const { return ((std::uint32_t{1} << n_) - 1) & ~side_; }

    bool separates(int i, int j) const { return ((side_ >> i) ^ (side_ >> j)) & 1; }

    std::vector<int> side_points() const {
        std::vector<int> pts;
        for (int i = 0; i < n_; ++i)
            if ((side_ >> i) & 1) pts.push_back(i);
        return pts;
    }

    auto operator<=>(const Cut&) const = default;

private:
    int n_;
    std::uint32_t side_;
};

inline int cut_metric(const Cut& c, int i, int j) {
    if (i < 0 || i >= c.ambient_size() || j < 0 || j >= c.ambient_size())
        throw DomainError("point out of range");
    return c.separates(i, j) ? 1 : 0;
}

// All 2^(n-1) - 1 canonical cuts, in ascending side-mask order.
inline std::vector<Cut> all_cuts(int n, int max_points = 14) {
    if (n < 2) throw DomainError("cuts need at least two points");
    if (n > max_points)
        throw BudgetError("TooManyPoints: cut enumeration capped at " + std::to_string(max_points));
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<Cut> cuts;
    cuts.reserve((std::size_t{1} << (n - 1)) - 1);
    for (std::uint32_t side = 1; side < full; side += 2) cuts.emplace_back(n, side);
    return cuts;
}

// A weighted cut family: d = sum of weight_c * delta_c. Weights are kept
// strictly positive and cuts pairwise distinct.
struct CutDecomposition {
    int n = 0;
    std::vector<std::pair<Cut, Rational>> terms;

    CutDecomposition(int ambient, std::vector<std::pair<Cut, Rational>> t)
        : n(ambient), terms(std::move(t)) {
        if (n < 1) throw DomainError("decomposition needs a positive ambient size");
        for (size_t a = 0; a < terms.size(); ++a) {
            if (terms[a].first.ambient_size() != n)
                throw DomainError("cut ambient size mismatch in decomposition");
            if (terms[a].second <= 0) throw DomainError("cut weights must be strictly positive");
            for (size_t b = a + 1; b < terms.size(); ++b)
                if (terms[a].first == terms[b].first)
                    throw DomainError("duplicate cut in decomposition");
        }
    }

    std::vector<Cut> cuts() const {
        std::vector<Cut> cs;
        cs.reserve(terms.size());
        for (const auto& [c, w] : terms) cs.push_back(c);
        return cs;
    }
};

inline FinitePseudometricSpace evaluate_decomposition(const CutDecomposition& dec) {
    std::vector<std::vector<Rational>> d(dec.n, std::vector<Rational>(dec.n, Rational(0)));
    for (const auto& [cut, weight] : dec.terms)
        for (int i = 0; i < dec.n; ++i)
            for (int j = i + 1; j < dec.n; ++j)
                if (cut.separates(i, j)) {
                    d[i][j] += weight;
                    d[j][i] = d[i][j];
                }
    return FinitePseudometricSpace(std::move(d));
}

}  // namespace l1embed
