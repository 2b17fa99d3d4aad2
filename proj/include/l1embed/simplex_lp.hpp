#pragma once

#include <optional>
#include <vector>

#include "l1embed/errors.hpp"
#include "l1embed/rational.hpp"

namespace l1embed {

// Exact feasibility for A x = b, x >= 0, b >= 0: a dense phase-1 simplex over
// rationals, minimizing the sum of one artificial variable per row. Bland's
// rule (lowest eligible index enters, lowest-index basic leaves on ties)
// guarantees termination and makes the returned basic solution deterministic.
// Returns the structural solution, or nullopt when the minimum stays positive,
// i.e. the system is infeasible.
inline std::optional<std::vector<Rational>> solve_equality_feasibility(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
    const int rows = static_cast<int>(a.size());
    const int nv = rows == 0 ? 0 : static_cast<int>(a[0].size());
    if (rows == 0) return std::vector<Rational>(static_cast<size_t>(nv), Rational(0));
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != nv) throw DomainError("ragged constraint matrix");
    if (static_cast<int>(b.size()) != rows) throw DomainError("rhs size mismatch");
    for (const auto& v : b)
        if (v < 0) throw DomainError("phase-1 simplex needs nonnegative rhs");

    const int cols = nv + rows;  // structural then artificial
    const int rhs = cols;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < nv; ++j) t[r][j] = a[r][j];
        t[r][nv + r] = 1;
        t[r][rhs] = b[r];
        basis[r] = nv + r;
    }

    // Reduced-cost row for min sum(artificials): cost 1 on artificials, 0 on
    // structurals, priced out against the all-artificial starting basis.
    std::vector<Rational> z(cols + 1, Rational(0));
    for (int j = 0; j <= cols; ++j)
        for (int r = 0; r < rows; ++r) z[j] -= t[r][j];
    for (int r = 0; r < rows; ++r) z[nv + r] += 1;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio;
        for (int r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            Rational ratio = t[r][rhs] / t[r][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw InternalCheckError("phase-1 objective unbounded below; cannot happen");

        const Rational pivot = t[leave][enter];
        for (int j = 0; j <= cols; ++j) t[leave][j] /= pivot;
        for (int r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rational f = t[r][enter];
            for (int j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            const Rational f = z[enter];
            for (int j = 0; j <= cols; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rational objective = -z[rhs];
    if (objective > 0) return std::nullopt;

    std::vector<Rational> x(static_cast<size_t>(nv), Rational(0));
    for (int r = 0; r < rows; ++r)
        if (basis[r] < nv) x[static_cast<size_t>(basis[r])] = t[r][rhs];
    return x;
}

}  // namespace l1embed
