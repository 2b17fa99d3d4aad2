#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "l1embed/errors.hpp"
#include "l1embed/metric_space.hpp"

namespace l1embed {

// A relation between point sets {0..nx-1} and {0..ny-1} that is surjective in
// both directions. Pairs are kept sorted and deduplicated.
struct Correspondence {
    std::vector<std::pair<int, int>> pairs;

    explicit Correspondence(std::vector<std::pair<int, int>> p = {}) : pairs(std::move(p)) {
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }

    static Correspondence complete(int nx, int ny) {
        std::vector<std::pair<int, int>> p;
        p.reserve(static_cast<size_t>(nx) * ny);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) p.emplace_back(i, j);
        return Correspondence(std::move(p));
    }

    bool covers(int nx, int ny) const {
        std::vector<char> left(static_cast<size_t>(nx), 0), right(static_cast<size_t>(ny), 0);
        for (auto [i, j] : pairs) {
            if (i < 0 || i >= nx || j < 0 || j >= ny) return false;
            left[i] = right[j] = 1;
        }
        return std::all_of(left.begin(), left.end(), [](char c) { return c; }) &&
               std::all_of(right.begin(), right.end(), [](char c) { return c; });
    }

    Correspondence transposed() const {
        std::vector<std::pair<int, int>> p;
        p.reserve(pairs.size());
        for (auto [i, j] : pairs) p.emplace_back(j, i);
        return Correspondence(std::move(p));
    }

    bool operator==(const Correspondence& o) const { return pairs == o.pairs; }
};

// max |d_X(x,x') - d_Y(y,y')| over pairs of related pairs.
inline Rational distortion(const Correspondence& r,
                           const FinitePseudometricSpace& x,
                           const FinitePseudometricSpace& y) {
    if (!r.covers(x.size(), y.size())) throw DomainError("NotACorrespondence");
    Rational worst = 0;
    for (size_t a = 0; a < r.pairs.size(); ++a)
        for (size_t b = a; b < r.pairs.size(); ++b) {
            Rational gap =
                rational_abs(x.dist(r.pairs[a].first, r.pairs[b].first) -
                             y.dist(r.pairs[a].second, r.pairs[b].second));
            if (gap > worst) worst = gap;
        }
    return worst;
}

struct GHResult {
    Rational distance;          // exact d_GH
    Correspondence witness;     // achieves distortion = 2 * distance
};

// Example bounds: |diam X - diam Y| / 2 <= d_GH(X, Y) <= max(diam X, diam Y) / 2.
// The upper bound is attained by the complete correspondence.
inline std::pair<Rational, Rational> gh_bounds(const FinitePseudometricSpace& x,
                                               const FinitePseudometricSpace& y) {
    Rational dx = x.diam(), dy = y.diam();
    return {rational_abs(dx - dy) / 2, std::max(dx, dy) / 2};
}

// 2 d_GH(lambda Delta_m, X) = max(lambda, diam X - lambda) whenever the
// simplex has strictly more points than X.
inline Rational gh_simplex_closed_form(const Rational& lambda, int m,
                                       const FiniteMetricSpace& x) {
    if (lambda < 0) throw DomainError("NegativeLambda");
    if (m <= x.size()) throw DomainError("PreconditionViolated: need m > #X");
    return std::max(lambda, x.diam() - lambda) / 2;
}

namespace detail {

// All distortion candidates of an instance form a small finite set of
// rationals. Both searches compare integer ranks into that sorted set, so
// the inner loops never touch bignum arithmetic.

struct GHSearchOutcome {
    int best_rank = 0;
    bool improved = false;  // false: the complete correspondence is optimal
};

// Generic branch and bound. Every correspondence contains one of the form
// graph(f) ∪ graph(g)ᵀ for functions f: X→Y, g: Y→X, and dropping pairs never
// increases distortion, so minimizing over (f, g) pairs is exact. Assignments
// are explored in lexicographic order with the running partial distortion as
// bound, the complete correspondence as incumbent, and an early stop when the
// diameter-difference lower bound is reached. The first (f, g) attaining the
// optimum in this order is returned, which pins the witness deterministically.
class GeneralGHSearch {
public:
    GeneralGHSearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y)
        : nx_(x.size()), ny_(y.size()) {
        std::vector<Rational> vals;
        vals.reserve(static_cast<size_t>(nx_) * nx_ * ny_ * ny_);
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < nx_; ++j)
                for (int k = 0; k < ny_; ++k)
                    for (int l = 0; l < ny_; ++l)
                        vals.push_back(rational_abs(x.dist(i, j) - y.dist(k, l)));
        table_values_ = vals;
        std::sort(table_values_.begin(), table_values_.end());
        table_values_.erase(std::unique(table_values_.begin(), table_values_.end()),
                            table_values_.end());
        rank_.resize(vals.size());
        size_t idx = 0;
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < nx_; ++j)
                for (int k = 0; k < ny_; ++k)
                    for (int l = 0; l < ny_; ++l)
                        rank_[idx++] = static_cast<int>(
                            std::lower_bound(table_values_.begin(), table_values_.end(),
                                             rational_abs(x.dist(i, j) - y.dist(k, l))) -
                            table_values_.begin());
        ub_rank_ = lookup(std::max(x.diam(), y.diam()));
        lb_rank_ = lookup(rational_abs(x.diam() - y.diam()));
        f_.assign(static_cast<size_t>(nx_), 0);
        g_.assign(static_cast<size_t>(ny_), 0);
    }

    GHSearchOutcome run() {
        best_ = ub_rank_;
        improved_ = false;
        stop_ = best_ <= lb_rank_;
        if (!stop_) descend_f(0, 0);
        return {best_, improved_};
    }

    Rational value(int rank) const { return table_values_[static_cast<size_t>(rank)]; }

    std::vector<std::pair<int, int>> witness_pairs() const {
        std::vector<std::pair<int, int>> p;
        for (int i = 0; i < nx_; ++i) p.emplace_back(i, best_f_[i]);
        for (int k = 0; k < ny_; ++k) p.emplace_back(best_g_[k], k);
        return p;
    }

private:
    int rank_of(int i, int j, int k, int l) const {
        return rank_[((static_cast<size_t>(i) * nx_ + j) * ny_ + k) * ny_ + l];
    }

    int lookup(const Rational& v) const {
        return static_cast<int>(
            std::lower_bound(table_values_.begin(), table_values_.end(), v) -
            table_values_.begin());
    }

    void descend_f(int i, int cur) {
        if (i == nx_) {
            descend_g(0, cur);
            return;
        }
        for (int v = 0; v < ny_ && !stop_; ++v) {
            int m = cur;
            for (int j = 0; j < i && m < best_; ++j)
                m = std::max(m, rank_of(i, j, v, f_[j]));
            if (m >= best_) continue;
            f_[i] = v;
            descend_f(i + 1, m);
        }
    }

    void descend_g(int k, int cur) {
        if (k == ny_) {
            best_ = cur;
            best_f_ = f_;
            best_g_ = g_;
            improved_ = true;
            if (best_ <= lb_rank_) stop_ = true;
            return;
        }
        for (int u = 0; u < nx_ && !stop_; ++u) {
            int m = cur;
            for (int l = 0; l < k && m < best_; ++l)
                m = std::max(m, rank_of(u, g_[l], k, l));
            for (int i = 0; i < nx_ && m < best_; ++i)
                m = std::max(m, rank_of(i, u, f_[i], k));
            if (m >= best_) continue;
            g_[k] = u;
            descend_g(k + 1, m);
        }
    }

    int nx_, ny_;
    std::vector<Rational> table_values_;
    std::vector<int> rank_;
    int ub_rank_ = 0, lb_rank_ = 0;
    std::vector<int> f_, g_, best_f_, best_g_;
    int best_ = 0;
    bool improved_ = false, stop_ = false;
};

// Kernel for one side being a one-distance space (m points, nonzero distance
// lambda). Inclusion-minimal correspondences split into disjoint stars, so
// they are exactly: a partition of Y into t <= m blocks, each owned by one
// simplex point, with any leftover simplex points stacked onto singleton
// blocks. The distortion of such a correspondence is
//   max( max_B diam B, max_{B != B'} max |lambda - d(y, y')|, [lambda if t < m] ),
// and the t < m case additionally requires a singleton block. The search
// enumerates partitions as restricted-growth strings with the running maximum
// as bound; the first structure attaining the optimum is the witness.
class OneDistanceGHSearch {
public:
    OneDistanceGHSearch(int m, const Rational& lambda, const FiniteMetricSpace& y)
        : m_(m), n_(y.size()) {
        std::vector<Rational> vals{Rational(0), lambda};
        for (int k = 0; k < n_; ++k)
            for (int l = 0; l < n_; ++l) {
                vals.push_back(y.dist(k, l));
                vals.push_back(rational_abs(lambda - y.dist(k, l)));
            }
        table_values_ = vals;
        std::sort(table_values_.begin(), table_values_.end());
        table_values_.erase(std::unique(table_values_.begin(), table_values_.end()),
                            table_values_.end());
        same_.resize(static_cast<size_t>(n_) * n_);
        cross_.resize(static_cast<size_t>(n_) * n_);
        for (int k = 0; k < n_; ++k)
            for (int l = 0; l < n_; ++l) {
                same_[static_cast<size_t>(k) * n_ + l] = lookup(y.dist(k, l));
                cross_[static_cast<size_t>(k) * n_ + l] =
                    lookup(rational_abs(lambda - y.dist(k, l)));
            }
        lambda_rank_ = lookup(lambda);
        ub_rank_ = lookup(std::max(m_ >= 2 ? lambda : Rational(0), y.diam()));
        lb_rank_ = lookup(rational_abs((m_ >= 2 ? lambda : Rational(0)) - y.diam()));
        part_.assign(static_cast<size_t>(n_), 0);
        part_size_.assign(static_cast<size_t>(std::min(m_, n_)), 0);
    }

    GHSearchOutcome run() {
        best_ = ub_rank_;
        improved_ = false;
        stop_ = best_ <= lb_rank_;
        if (!stop_) descend(0, 0, 0);
        return {best_, improved_};
    }

    Rational value(int rank) const { return table_values_[static_cast<size_t>(rank)]; }

    // Pairs (simplex point, Y point); block p belongs to simplex point p and
    // leftovers m > t share the lowest-index singleton block.
    std::vector<std::pair<int, int>> witness_pairs() const {
        std::vector<std::pair<int, int>> p;
        for (int t = 0; t < n_; ++t) p.emplace_back(best_part_[t], t);
        if (best_used_ < m_) {
            int shared = -1;
            std::vector<int> size(static_cast<size_t>(best_used_), 0);
            for (int t = 0; t < n_; ++t) ++size[best_part_[t]];
            for (int b = 0; b < best_used_ && shared < 0; ++b)
                if (size[b] == 1) shared = b;
            int y_shared = -1;
            for (int t = 0; t < n_; ++t)
                if (best_part_[t] == shared) y_shared = t;
            for (int extra = best_used_; extra < m_; ++extra) p.emplace_back(extra, y_shared);
        }
        return p;
    }

private:
    int lookup(const Rational& v) const {
        return static_cast<int>(
            std::lower_bound(table_values_.begin(), table_values_.end(), v) -
            table_values_.begin());
    }

    void descend(int t, int used, int cur) {
        if (t == n_) {
            int cand = cur;
            if (used < m_) {
                bool singleton = false;
                for (int b = 0; b < used && !singleton; ++b) singleton = part_size_[b] == 1;
                if (!singleton) return;
                cand = std::max(cand, lambda_rank_);
            }
            if (cand < best_) {
                best_ = cand;
                best_part_ = part_;
                best_used_ = used;
                improved_ = true;
                if (best_ <= lb_rank_) stop_ = true;
            }
            return;
        }
        const int limit = std::min(used + 1, std::min(m_, n_));
        for (int p = 0; p < limit && !stop_; ++p) {
            int m = cur;
            for (int l = 0; l < t && m < best_; ++l)
                m = std::max(m, part_[l] == p ? same_[static_cast<size_t>(t) * n_ + l]
                                              : cross_[static_cast<size_t>(t) * n_ + l]);
            if (m >= best_) continue;
            part_[t] = p;
            ++part_size_[p];
            descend(t + 1, std::max(used, p + 1), m);
            --part_size_[p];
        }
    }

    int m_, n_;
    std::vector<Rational> table_values_;
    std::vector<int> same_, cross_;
    int lambda_rank_ = 0, ub_rank_ = 0, lb_rank_ = 0;
    std::vector<int> part_, part_size_, best_part_;
    int best_used_ = 0, best_ = 0;
    bool improved_ = false, stop_ = false;
};

inline GHResult gh_general(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
    GeneralGHSearch search(x, y);
    auto out = search.run();
    Correspondence witness = out.improved ? Correspondence(search.witness_pairs())
                                          : Correspondence::complete(x.size(), y.size());
    return {search.value(out.best_rank) / 2, std::move(witness)};
}

inline GHResult gh_one_distance(int m, const Rational& lambda, const FiniteMetricSpace& y,
                                bool simplex_first) {
    OneDistanceGHSearch search(m, lambda, y);
    auto out = search.run();
    Correspondence witness = out.improved ? Correspondence(search.witness_pairs())
                                          : Correspondence::complete(m, y.size());
    if (!simplex_first) witness = witness.transposed();
    return {search.value(out.best_rank) / 2, std::move(witness)};
}

}  // namespace detail

// Exact Gromov-Hausdorff distance with a minimizing correspondence as
// certificate. Refuses instances beyond size_limit points per side rather
// than approximating.
inline GHResult gh_distance_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                  int size_limit = 8) {
    if (x.size() > size_limit || y.size() > size_limit)
        throw BudgetError("SizeLimitExceeded: gh search capped at " +
                          std::to_string(size_limit) + " points per side");
    if (x.is_one_distance())
        return detail::gh_one_distance(x.size(), x.size() >= 2 ? x.dist(0, 1) : Rational(0), y,
                                       true);
    if (y.is_one_distance())
        return detail::gh_one_distance(y.size(), y.size() >= 2 ? y.dist(0, 1) : Rational(0), x,
                                       false);
    return detail::gh_general(x, y);
}

struct PartitionWitness {
    bool exists = false;
    std::vector<int> part;  // point -> part index, when exists
};

// Can X be split into exactly m nonempty parts, each of diameter strictly
// below diam X? Backtracking over restricted-growth strings; parts that would
// reach the full diameter are never extended.
inline PartitionWitness borsuk_partition_exists(const FiniteMetricSpace& x, int m) {
    const int n = x.size();
    if (m < 2 || m > n) throw DomainError("BadCardinality: need 2 <= m <= #X");
    const Rational d = x.diam();

    std::vector<int> part(static_cast<size_t>(n), -1);
    // dfs(t, used): points before t are assigned to parts 0..used-1.
    auto dfs = [&](auto&& self, int t, int used) -> bool {
        if (n - t < m - used) return false;  // not enough points left to open m parts
        if (t == n) return used == m;
        const int limit = std::min(used + 1, m);
        for (int p = 0; p < limit; ++p) {
            bool fits = true;
            for (int l = 0; l < t && fits; ++l)
                if (part[l] == p && x.dist(t, l) >= d) fits = false;
            if (!fits) continue;
            part[t] = p;
            if (self(self, t + 1, std::max(used, p + 1))) return true;
            part[t] = -1;
        }
        return false;
    };
    if (dfs(dfs, 0, 0)) return {true, part};
    return {false, {}};
}

struct BorsukReport {
    int m = 0;
    Rational lambda;
    Rational diameter;
    Rational twice_gh;           // 2 d_GH(lambda Delta_m, X)
    PartitionWitness partition;
    bool criterion_holds = false;
};

// Checks the partition criterion on one instance: a partition of X into m
// parts of strictly smaller diameter exists iff 2 d_GH(lambda Delta_m, X)
// drops below diam X, and in the negative case the distance equals diam X
// exactly. Any 0 < lambda < diam X is admissible.
inline BorsukReport verify_borsuk_theorem(const FiniteMetricSpace& x, int m,
                                          const Rational& lambda, int gh_limit = 8) {
    if (!(lambda > 0 && lambda < x.diam()))
        throw DomainError("lambda must satisfy 0 < lambda < diam X");
    BorsukReport rep;
    rep.m = m;
    rep.lambda = lambda;
    rep.diameter = x.diam();
    rep.partition = borsuk_partition_exists(x, m);
    rep.twice_gh = gh_distance_exact(simplex(m, lambda), x, gh_limit).distance * 2;
    rep.criterion_holds = rep.partition.exists ? rep.twice_gh < rep.diameter
                                               : rep.twice_gh == rep.diameter;
    return rep;
}

}  // namespace l1embed
