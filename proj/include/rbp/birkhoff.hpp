/**
 * Restricted Birkhoff polytopes and their transportation generalization:
 * constructors, monotone chain machinery, and a specialized exact counter
 * for lattice points of dilates.
 */

#pragma once

#include "rbp/hpolytope.hpp"
#include "rbp/matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rbp {

struct InfeasibleMargins : GeometryError {
    InfeasibleMargins() : GeometryError("row and column sums disagree") {}
};

/// A monotone lattice path (0,0) -> (n-1,n-1); each step increments one
/// coordinate. Length 2n-1 cells.
using MonotonePath = std::vector<std::pair<std::size_t, std::size_t>>;

/// All monotone paths in lexicographic order (right step before down step).
/// There are binom(2n-2, n-1) of them.
inline std::vector<MonotonePath> monotone_paths(std::size_t n)
{
    std::vector<MonotonePath> out;
    MonotonePath cur;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        cur.emplace_back(i, j);
        if (i == n - 1 && j == n - 1) out.push_back(cur);
        else {
            if (j + 1 < n) self(self, i, j + 1);
            if (i + 1 < n) self(self, i + 1, j);
        }
        cur.pop_back();
    };
    if (n >= 1) rec(rec, 0, 0);
    return out;
}

struct BirkhoffSpec {
    std::size_t n;
    long k;
};

/// H-representation of the transportation polytope B^k_{alpha,beta}:
/// nonnegative n x n matrices with the given margins whose monotone chains
/// from (0,0) to (n-1,n-1) each sum to at most k.
inline HPolytope build_transportation(const Margins& m, const Int& k)
{
    if (!m.balanced()) throw InfeasibleMargins();
    const std::size_t n = m.n();
    HPolytope p(n * n);
    for (std::size_t i = 0; i < n * n; ++i) p.add_lower_bound(i, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        RatVector a(n * n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 1;
        p.add_equality(std::move(a), Rat(m.alpha[i]));
    }
    for (std::size_t j = 0; j < n; ++j) {
        RatVector a(n * n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) a[i * n + j] = 1;
        p.add_equality(std::move(a), Rat(m.beta[j]));
    }
    for (const auto& path : monotone_paths(n)) {
        RatVector a(n * n, Rat(0));
        for (const auto& [i, j] : path) a[i * n + j] = 1;
        p.add_inequality(std::move(a), Rat(k));
    }
    return p;
}

/// H-representation of the restricted Birkhoff polytope B_n^k.
inline HPolytope build_restricted_birkhoff(const BirkhoffSpec& s)
{
    if (s.k < 1 || s.k > static_cast<long>(s.n))
        throw std::invalid_argument("build_restricted_birkhoff: need 1 <= k <= n");
    return build_transportation(Margins::uniform(s.n), Int(s.k));
}

inline HPolytope build_restricted_birkhoff(std::size_t n, long k)
{
    return build_restricted_birkhoff(BirkhoffSpec{n, k});
}

/// max over monotone chains of the sum of entries, by dynamic programming.
inline Rat max_chain_sum(const RatMatrix& x)
{
    const std::size_t n = x.n();
    if (n == 0) return Rat(0);
    std::vector<RatVector> m(n, RatVector(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat best = 0;
            if (i > 0) best = m[i - 1][j];
            if (j > 0 && m[i][j - 1] > best) best = m[i][j - 1];
            m[i][j] = x(i, j) + best;
        }
    return m[n - 1][n - 1];
}

/// The (2n+1) x (2n+1) point with x_{i,i} = 2n/(2n+1) and
/// x_{i,i+n} = 1/(2n+1), indices mod 2n+1. Lies in B_{2n+1}^{2n} and is a
/// vertex with denominator 2n+1.
inline RatMatrix remark62_matrix(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("remark62_matrix: need n >= 2");
    const std::size_t size = 2 * n + 1;
    RatMatrix x(size);
    for (std::size_t i = 0; i < size; ++i) {
        x(i, i) = Rat(2 * n, size);
        x(i, (i + n) % size) = Rat(1, size);
    }
    return x;
}

/// Exact count of lattice points of t * B^k_{alpha,beta} by depth-first
/// search in row-major cell order, pruning on remaining row/column budgets
/// and on the running max-chain value (any completion of a chain already
/// above t*k keeps it above, since entries are nonnegative).
/// `max_nodes` caps the number of cell assignments tried (0 = unlimited).
inline Int count_lattice_points_direct(const Margins& m, const Int& k, const Int& t,
                                       std::uint64_t max_nodes = 0)
{
    if (!m.balanced()) throw InfeasibleMargins();
    const std::size_t n = m.n();
    const Int cap = t * k;
    std::vector<Int> row_rem(n), col_rem(n);
    for (std::size_t i = 0; i < n; ++i) row_rem[i] = t * m.alpha[i];
    for (std::size_t j = 0; j < n; ++j) col_rem[j] = t * m.beta[j];

    std::vector<std::vector<Int>> chain(n, std::vector<Int>(n, Int(0)));
    Int count = 0;
    std::uint64_t nodes = 0;

    auto rec = [&](auto&& self, std::size_t cell) -> void {
        if (cell == n * n) {
            ++count;
            return;
        }
        const std::size_t i = cell / n, j = cell % n;
        Int lo = 0, hi = row_rem[i] < col_rem[j] ? row_rem[i] : col_rem[j];
        // Last column forces the row remainder, last row the column remainder.
        if (j == n - 1) lo = row_rem[i];
        if (i == n - 1) lo = lo > col_rem[j] ? lo : col_rem[j];
        for (Int v = lo; v <= hi; ++v) {
            if (max_nodes && ++nodes > max_nodes)
                throw BudgetExceeded("direct counter node budget exceeded");
            Int best = 0;
            if (i > 0) best = chain[i - 1][j];
            if (j > 0 && chain[i][j - 1] > best) best = chain[i][j - 1];
            chain[i][j] = best + v;
            if (chain[i][j] > cap) {
                chain[i][j] = 0;
                break;  // larger v only makes the chain worse
            }
            row_rem[i] -= v;
            col_rem[j] -= v;
            self(self, cell + 1);
            row_rem[i] += v;
            col_rem[j] += v;
            chain[i][j] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

inline Int count_lattice_points_direct(const BirkhoffSpec& s, const Int& t,
                                       std::uint64_t max_nodes = 0)
{
    return count_lattice_points_direct(Margins::uniform(s.n), Int(s.k), t, max_nodes);
}

}  // namespace rbp
