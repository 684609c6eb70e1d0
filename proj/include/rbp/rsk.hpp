/**
 * The Robinson-Schensted-Knuth correspondence on nonnegative integer
 * matrices, tableau/GT-pattern conversions, the glued monotone-matrix form
 * of a tableau pair, and the rational piecewise-linear map rho built from
 * them with its inverse.
 *
 * rho clears denominators, runs classical row-insertion RSK on the integer
 * matrix, glues the output pair into a monotone matrix, and scales back.
 * Scale consistency (glueRSK(c*X) = c*glueRSK(X)) is what makes the value
 * independent of the chosen denominator multiple; it is exercised by the
 * test suite rather than assumed.
 */

#pragma once

#include "rbp/gt.hpp"
#include "rbp/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rbp {

struct NonIntegerInput : std::runtime_error {
    NonIntegerInput() : std::runtime_error("matrix entries must be nonnegative integers") {}
};
struct NegativeEntry : std::runtime_error {
    NegativeEntry() : std::runtime_error("matrix entries must be nonnegative") {}
};
struct ShapeMismatch : std::runtime_error {
    ShapeMismatch() : std::runtime_error("tableaux must have the same shape") {}
};
struct NotAValidGluing : std::runtime_error {
    explicit NotAValidGluing(const std::string& why)
        : std::runtime_error("not a valid gluing: " + why)
    {
    }
};
struct NotInCone : std::runtime_error {
    NotInCone() : std::runtime_error("matrix is not monotone nonnegative") {}
};

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase, row lengths weakly decrease.
struct SSYTableau {
    std::vector<std::vector<int>> rows;

    bool empty() const { return rows.empty(); }

    bool operator==(const SSYTableau& o) const { return rows == o.rows; }

    std::vector<std::size_t> shape() const
    {
        std::vector<std::size_t> s;
        for (const auto& r : rows) s.push_back(r.size());
        return s;
    }

    /// Shape of the restriction to entries <= a (rows are sorted).
    std::vector<std::size_t> restricted_shape(int a) const
    {
        std::vector<std::size_t> s;
        for (const auto& r : rows) {
            const auto cnt = static_cast<std::size_t>(
                std::upper_bound(r.begin(), r.end(), a) - r.begin());
            if (cnt == 0) break;
            s.push_back(cnt);
        }
        return s;
    }

    bool is_valid() const
    {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty()) return false;
            if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
            for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
                if (rows[i][j] > rows[i][j + 1]) return false;
            if (i > 0)
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    if (rows[i - 1][j] >= rows[i][j]) return false;
        }
        return true;
    }
};

struct TableauPair {
    SSYTableau p;  // insertion tableau
    SSYTableau q;  // recording tableau

    bool operator==(const TableauPair& o) const { return p == o.p && q == o.q; }
};

namespace detail {
/// Row-inserts val into t, returning the (row, col) of the new cell.
inline std::pair<std::size_t, std::size_t> row_insert(SSYTableau& t, int val)
{
    for (std::size_t r = 0;; ++r) {
        if (r == t.rows.size()) t.rows.emplace_back();
        auto& row = t.rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), val);
        if (it == row.end()) {
            row.push_back(val);
            return {r, row.size() - 1};
        }
        std::swap(val, *it);
    }
}
}  // namespace detail

/// Classical RSK: the biword of X (pairs (i,j) with multiplicity x_{i,j},
/// in lexicographic order; letters are 1-based) is row-inserted into P
/// while Q records. P's content is X's column sums, Q's content its row sums.
inline TableauPair rsk_forward(const RatMatrix& x)
{
    const std::size_t n = x.n();
    TableauPair pq;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& e = x(i, j);
            if (e < 0) throw NegativeEntry();
            if (!is_integer(e)) throw NonIntegerInput();
            for (Int c = 0; c < rat_num(e); ++c) {
                auto [r, col] = detail::row_insert(pq.p, static_cast<int>(j) + 1);
                if (r == pq.q.rows.size()) pq.q.rows.emplace_back();
                pq.q.rows[r].push_back(static_cast<int>(i) + 1);
                (void)col;
            }
        }
    return pq;
}

/// Inverse RSK: recovers the unique X with rsk_forward(X) = pq.
/// n bounds the letter alphabet (and fixes the output matrix size).
inline RatMatrix rsk_inverse(const TableauPair& pq, std::size_t n)
{
    if (pq.p.shape() != pq.q.shape()) throw ShapeMismatch();
    SSYTableau p = pq.p;
    RatMatrix x(n);

    // Cells of Q grouped by value; within one value the cells form a
    // horizontal strip and are removed right to left.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_value(n + 1);
    for (std::size_t r = 0; r < pq.q.rows.size(); ++r)
        for (std::size_t c = 0; c < pq.q.rows[r].size(); ++c) {
            const int v = pq.q.rows[r][c];
            if (v < 1 || v > static_cast<int>(n))
                throw std::invalid_argument("rsk_inverse: recording entry out of range");
            by_value[static_cast<std::size_t>(v)].push_back({r, c});
        }

    for (std::size_t a = n; a >= 1; --a) {
        auto cells = by_value[a];
        std::sort(cells.begin(), cells.end(),
                  [](const auto& u, const auto& v) { return u.second > v.second; });
        for (const auto& [r, c] : cells) {
            if (r >= p.rows.size() || c + 1 != p.rows[r].size())
                throw std::invalid_argument("rsk_inverse: recording tableau is not valid");
            int carry = p.rows[r].back();
            p.rows[r].pop_back();
            if (p.rows[r].empty()) p.rows.pop_back();
            for (std::size_t i = r; i-- > 0;) {
                auto& row = p.rows[i];
                auto it = std::lower_bound(row.begin(), row.end(), carry);
                if (it == row.begin())
                    throw std::invalid_argument("rsk_inverse: reverse bump failed");
                --it;
                std::swap(carry, *it);
            }
            if (carry < 1 || carry > static_cast<int>(n))
                throw std::invalid_argument("rsk_inverse: insertion entry out of range");
            x(a - 1, static_cast<std::size_t>(carry) - 1) += 1;
        }
    }
    return x;
}

/// The GT pattern of a tableau with entries in {1..n}: diagonal l = n-a
/// carries the shape of the restriction to entries <= a, zero-padded.
inline GTPattern tableau_to_gt(const SSYTableau& t, std::size_t n)
{
    GTPattern g(n);
    for (std::size_t a = 1; a <= n; ++a) {
        auto lam = t.restricted_shape(static_cast<int>(a));
        if (lam.size() > a) throw std::invalid_argument("tableau_to_gt: entries exceed n");
        for (std::size_t i = 0; i < a; ++i)
            g.g(i, i + n - a) = i < lam.size() ? Rat(Int(lam[i])) : Rat(0);
    }
    return g;
}

/// Glues a tableau pair into the n x n monotone matrix Y: diagonal l >= 0
/// holds Q's restriction shapes (reversed), diagonal l <= 0 holds P's, and
/// the main diagonal is the reversed common shape.
inline RatMatrix glue(const TableauPair& pq, std::size_t n)
{
    if (pq.p.shape() != pq.q.shape()) throw ShapeMismatch();
    if (pq.p.rows.size() > n) throw std::invalid_argument("glue: more than n rows");
    RatMatrix y(n);
    for (std::size_t l = 0; l < n; ++l) {
        const std::size_t a = n - l;
        auto lam_q = pq.q.restricted_shape(static_cast<int>(a));
        auto lam_p = pq.p.restricted_shape(static_cast<int>(a));
        lam_q.resize(a, 0);
        lam_p.resize(a, 0);
        for (std::size_t i = 0; i < a; ++i) {
            y(i, i + l) = Rat(Int(lam_q[a - 1 - i]));
            if (l > 0) y(i + l, i) = Rat(Int(lam_p[a - 1 - i]));
        }
    }
    return y;
}

/// Inverse of glue: reads the restriction-shape chains off Y's diagonals
/// and rebuilds the pair. Throws NotAValidGluing when a diagonal fails the
/// partition or interlacing (horizontal strip) conditions.
inline TableauPair unglue(const RatMatrix& y)
{
    const std::size_t n = y.n();
    if (!y.is_integral()) throw NonIntegerInput();

    auto chain_side = [&](bool upper) {
        std::vector<std::vector<Int>> lam(n + 1);
        for (std::size_t a = 1; a <= n; ++a) {
            const std::size_t l = n - a;
            lam[a].resize(a);
            for (std::size_t p = 0; p < a; ++p) {
                const std::size_t i = a - 1 - p;
                lam[a][p] = rat_num(upper ? y(i, i + l) : y(i + l, i));
            }
            for (std::size_t p = 0; p < a; ++p) {
                if (lam[a][p] < 0) throw NotAValidGluing("negative part");
                if (p + 1 < a && lam[a][p] < lam[a][p + 1])
                    throw NotAValidGluing("diagonal is not a partition");
            }
            // horizontal strip: lam[a]_i >= lam[a-1]_i >= lam[a]_{i+1}
            for (std::size_t p = 0; p + 1 < a; ++p) {
                const Int prev = p < lam[a - 1].size() ? lam[a - 1][p] : Int(0);
                if (lam[a][p] < prev || prev < lam[a][p + 1])
                    throw NotAValidGluing("diagonals do not interlace");
            }
        }
        SSYTableau t;
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t r = 0; r < a; ++r) {
                const Int prev = r < lam[a - 1].size() ? lam[a - 1][r] : Int(0);
                for (Int c = prev; c < lam[a][r]; ++c) {
                    if (t.rows.size() <= r) t.rows.resize(r + 1);
                    t.rows[r].push_back(static_cast<int>(a));
                }
            }
        return t;
    };

    TableauPair pq;
    pq.q = chain_side(true);
    pq.p = chain_side(false);
    if (pq.p.shape() != pq.q.shape()) throw NotAValidGluing("side shapes disagree");
    return pq;
}

/// Piecewise-linear RSK on rational matrices with nonnegative entries:
/// rho(X) = (1/m) glue(rsk_forward(m X)) with m the lcm of entry
/// denominators. Homogeneous, bijective on lattice points of every dilate,
/// diagonal sums = partial row/column sums, bottom-right = max chain sum.
inline RatMatrix rho(const RatMatrix& x)
{
    if (!x.is_nonnegative()) throw NegativeEntry();
    const Int m = x.denominator_lcm();
    RatMatrix z = Rat(m) * x;
    RatMatrix y = glue(rsk_forward(z), x.n());
    if (m > 1) y *= Rat(1, m);
    return y;
}

/// Inverse of rho on the monotone nonnegative cone.
inline RatMatrix rho_inverse(const RatMatrix& y)
{
    if (!y.is_monotone() || (y.n() > 0 && y(0, 0) < 0)) throw NotInCone();
    const Int m = y.denominator_lcm();
    RatMatrix w = Rat(m) * y;
    RatMatrix x = rsk_inverse(unglue(w), y.n());
    if (m > 1) x *= Rat(1, m);
    return x;
}

}  // namespace rbp
