/**
 * Exact rational linear algebra: Gaussian elimination, rank, nullspace,
 * and linear-system solving. Everything here is O(rows * cols^2) dense
 * elimination with exact pivots, which is all the polytope machinery needs.
 */

#pragma once

#include "rbp/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace rbp {

using RatRows = std::vector<RatVector>;

/// Row-reduces `rows` in place to row echelon form (not fully reduced).
/// Returns the pivot column of each echelon row, in order.
inline std::vector<std::size_t> row_echelon(RatRows& rows)
{
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Rat piv = rows[r][c];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rat f = rows[i][c] / piv;
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

inline std::size_t rank(RatRows rows)
{
    return row_echelon(rows).size();
}

/// Incremental rank tracker: feed rows one at a time, keeps an echelon basis.
class RankAccumulator {
public:
    explicit RankAccumulator(std::size_t cols) : cols_(cols) {}

    /// Returns true if the row was independent of those already inserted.
    bool add(RatVector row)
    {
        for (const auto& [pc, basis_row] : basis_) {
            if (row[pc] == 0) continue;
            const Rat f = row[pc] / basis_row[pc];
            for (std::size_t j = pc; j < cols_; ++j) row[j] -= f * basis_row[j];
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row[c] != 0) {
                basis_.emplace_back(c, std::move(row));
                // keep basis ordered by pivot column
                for (std::size_t i = basis_.size(); i > 1 && basis_[i - 1].first < basis_[i - 2].first; --i)
                    std::swap(basis_[i - 1], basis_[i - 2]);
                return true;
            }
        }
        return false;
    }

    std::size_t rank() const { return basis_.size(); }

private:
    std::size_t cols_;
    std::vector<std::pair<std::size_t, RatVector>> basis_;
};

/// Basis of the nullspace of the matrix with the given rows (cols columns).
inline RatRows nullspace(RatRows rows, std::size_t cols)
{
    auto pivots = row_echelon(rows);
    // back-substitute to reduced echelon form
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t c = pivots[r];
        const Rat piv = rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] /= piv;
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i][c] == 0) continue;
            const Rat f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    RatRows basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVector v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves the (possibly overdetermined) system rows * x = rhs exactly.
/// Returns one solution, or nullopt if inconsistent.
inline std::optional<RatVector> solve(RatRows rows, RatVector rhs, std::size_t cols)
{
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
    auto pivots = row_echelon(rows);
    RatVector x(cols, Rat(0));
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t c = pivots[r];
        if (c == cols) return std::nullopt;  // pivot in the rhs column: inconsistent
        Rat s = rows[r][cols];
        for (std::size_t j = c + 1; j < cols; ++j) s -= rows[r][j] * x[j];
        x[c] = s / rows[r][c];
    }
    return x;
}

inline Rat dot(const RatVector& a, const RatVector& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}  // namespace rbp
