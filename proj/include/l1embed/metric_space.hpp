#pragma once

#include <span>
#include <utility>
#include <vector>

#include "l1embed/errors.hpp"
#include "l1embed/rational.hpp"

namespace l1embed {

namespace detail {

// Shared validation. Checks, in order: diagonal, sign, symmetry, degeneracy
// (unless allow_zero), triangle inequality. Reports the first violation found
// in row-major scan order so error positions are reproducible.
inline void check_distance_matrix(const std::vector<std::vector<Rational>>& m, bool allow_zero) {
    const int n = static_cast<int>(m.size());
    if (n < 1) throw DomainError("distance matrix must have at least one point");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(m[i].size()) != n)
            throw DomainError("distance matrix must be square");
    for (int i = 0; i < n; ++i) {
        if (m[i][i] != 0) throw MetricValidationError(MetricDefect::NonzeroDiagonal, i);
        for (int j = 0; j < n; ++j) {
            if (m[i][j] < 0) throw MetricValidationError(MetricDefect::NegativeDistance, i, j);
            if (j > i && m[i][j] != m[j][i])
                throw MetricValidationError(MetricDefect::Asymmetric, i, j);
            if (j != i && !allow_zero && m[i][j] == 0)
                throw MetricValidationError(MetricDefect::ZeroOffDiagonal, i, j);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (m[i][j] > m[i][k] + m[k][j])
                    throw MetricValidationError(MetricDefect::TriangleViolation, i, j, k);
            }
        }
}

}  // namespace detail

// Points are 0..n-1; distances exact rationals. Zero distance between
// distinct points is allowed here and forbidden in FiniteMetricSpace.
// Instances are immutable and always satisfy their axioms: the only way to
// build one is through a validating constructor.
class FinitePseudometricSpace {
public:
    explicit FinitePseudometricSpace(std::vector<std::vector<Rational>> matrix)
        : FinitePseudometricSpace(std::move(matrix), true) {}

    int size() const { return n_; }

    const Rational& dist(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }

    Rational diam() const {
        Rational best = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (dist(i, j) > best) best = dist(i, j);
        return best;
    }

    std::vector<std::vector<Rational>> matrix() const {
        std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m[i][j] = dist(i, j);
        return m;
    }

    bool operator==(const FinitePseudometricSpace& o) const { return n_ == o.n_ && d_ == o.d_; }

    // True when all off-diagonal distances coincide (n <= 1 counts). Such
    // spaces admit a much faster Gromov-Hausdorff kernel.
    bool is_one_distance() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (dist(i, j) != dist(0, 1)) return false;
        return true;
    }

protected:
    FinitePseudometricSpace(std::vector<std::vector<Rational>> matrix, bool allow_zero)
        : n_(static_cast<int>(matrix.size())) {
        detail::check_distance_matrix(matrix, allow_zero);
        d_.reserve(static_cast<size_t>(n_) * n_);
        for (auto& row : matrix)
            for (auto& v : row) d_.push_back(std::move(v));
    }

private:
    int n_;
    std::vector<Rational> d_;
};

class FiniteMetricSpace : public FinitePseudometricSpace {
public:
    explicit FiniteMetricSpace(std::vector<std::vector<Rational>> matrix)
        : FinitePseudometricSpace(std::move(matrix), false) {}
};

inline FiniteMetricSpace validate_metric(std::vector<std::vector<Rational>> matrix) {
    return FiniteMetricSpace(std::move(matrix));
}

inline FinitePseudometricSpace validate_pseudometric(std::vector<std::vector<Rational>> matrix) {
    return FinitePseudometricSpace(std::move(matrix));
}

inline Rational diam(const FinitePseudometricSpace& x) { return x.diam(); }

// m points, all nonzero distances equal to lambda. lambda = 0 collapses to
// the one-point space regardless of m.
inline FiniteMetricSpace simplex(int m, const Rational& lambda) {
    if (m < 1) throw DomainError("simplex needs at least one point");
    if (lambda < 0) throw DomainError("NegativeLambda");
    if (lambda == 0) m = 1;
    std::vector<std::vector<Rational>> d(m, std::vector<Rational>(m, lambda));
    for (int i = 0; i < m; ++i) d[i][i] = 0;
    return FiniteMetricSpace(std::move(d));
}

// max(max_{a in A} min_{b in B} d(a,b), max_{b in B} min_{a in A} d(a,b)).
inline Rational hausdorff_distance(const FinitePseudometricSpace& x,
                                   std::span<const int> a,
                                   std::span<const int> b) {
    if (a.empty() || b.empty()) throw DomainError("EmptySubset");
    for (int p : a)
        if (p < 0 || p >= x.size()) throw DomainError("subset point out of range");
    for (int p : b)
        if (p < 0 || p >= x.size()) throw DomainError("subset point out of range");
    auto one_sided = [&](std::span<const int> from, std::span<const int> to) {
        Rational worst = 0;
        for (int p : from) {
            Rational nearest = x.dist(p, to[0]);
            for (int q : to.subspan(1))
                if (x.dist(p, q) < nearest) nearest = x.dist(p, q);
            if (nearest > worst) worst = nearest;
        }
        return worst;
    };
    Rational ab = one_sided(a, b);
    Rational ba = one_sided(b, a);
    return ab > ba ? ab : ba;
}

}  // namespace l1embed
