/**
 * Gelfand-Tsetlin patterns and polytopes, the monotone-matrix family M_n^k
 * (and its transportation generalization), the integral-equivalence maps
 * between them, Kostka numbers, and the diagonal transfer-matrix counter.
 *
 * Conventions. A size-n GT pattern is the triangular array g_{i,j},
 * 0 <= i <= j < n, weakly decreasing along rows and down columns. Its shape
 * is the main diagonal (g_{0,0},...,g_{n-1,n-1}); d_l denotes the sum along
 * the diagonal j - i = l, with d_n := 0; the content is read off as
 * (d_{n-1} - d_n, d_{n-2} - d_{n-1}, ..., d_0 - d_1), so the first content
 * entry corresponds to the shortest diagonal. Polytope coordinates flatten
 * the triangle row-major: (0,0),...,(0,n-1),(1,1),...,(n-1,n-1).
 */

#pragma once

#include "rbp/hpolytope.hpp"
#include "rbp/lattice_enum.hpp"
#include "rbp/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace rbp {

struct CapExceeded : GeometryError {
    CapExceeded() : GeometryError("entry exceeds the cap k") {}
};

class GTPattern {
public:
    GTPattern() : n_(0) {}
    explicit GTPattern(std::size_t n) : n_(n)
    {
        rows_.resize(n);
        for (std::size_t i = 0; i < n; ++i) rows_[i].assign(n - i, Rat(0));
    }

    std::size_t n() const { return n_; }

    /// Entry g_{i,j}, 0 <= i <= j < n.
    Rat& g(std::size_t i, std::size_t j) { return rows_[i][j - i]; }
    const Rat& g(std::size_t i, std::size_t j) const { return rows_[i][j - i]; }

    bool operator==(const GTPattern& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    /// Weak decrease along rows and down columns.
    bool is_valid() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                if (j + 1 < n_ && g(i, j) < g(i, j + 1)) return false;
                if (i < j && g(i, j) < g(i + 1, j)) return false;
            }
        return true;
    }

    RatVector shape() const
    {
        RatVector s;
        for (std::size_t i = 0; i < n_; ++i) s.push_back(g(i, i));
        return s;
    }

    /// Sum along the diagonal j - i = l, 0 <= l <= n (d_n = 0 by convention).
    Rat diag_sum(std::size_t l) const
    {
        Rat s = 0;
        for (std::size_t i = 0; i + l < n_; ++i) s += g(i, i + l);
        return s;
    }

    /// (d_{n-1}-d_n, d_{n-2}-d_{n-1}, ..., d_0-d_1).
    RatVector content() const
    {
        RatVector c;
        for (std::size_t a = 1; a <= n_; ++a) c.push_back(diag_sum(n_ - a) - diag_sum(n_ - a + 1));
        return c;
    }

    /// Row-major triangular flattening, matching build_GT's coordinates.
    RatVector flatten() const
    {
        RatVector v;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) v.push_back(g(i, j));
        return v;
    }

private:
    std::size_t n_;
    std::vector<RatVector> rows_;
};

namespace detail {
/// Flat index of triangle cell (i,j), row-major.
inline std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j)
{
    // row i starts after n + (n-1) + ... + (n-i+1) cells
    return i * n - i * (i - 1) / 2 + (j - i);
}
}  // namespace detail

/// M^k_{alpha,beta}: n x n matrices, weakly increasing along rows and down
/// columns, y_{0,0} >= 0, y_{n-1,n-1} <= k, with the 2n-1 diagonal sums
/// pinned to the partial sums of the margins.
inline HPolytope build_M_transportation(const Margins& m, const Int& k)
{
    if (!m.balanced()) throw InfeasibleMargins();
    const std::size_t n = m.n();
    HPolytope p(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) p.add_le(i * n + j, i * n + j + 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i + 1 < n; ++i) p.add_le(i * n + j, (i + 1) * n + j);
    p.add_lower_bound(0, Rat(0));
    p.add_upper_bound(n * n - 1, Rat(k));

    auto diag_equality = [&](long off, Rat rhs) {
        RatVector a(n * n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            long j = static_cast<long>(i) + off;
            if (j >= 0 && j < static_cast<long>(n)) a[i * n + static_cast<std::size_t>(j)] = 1;
        }
        p.add_equality(std::move(a), std::move(rhs));
    };
    Int acc = 0;
    for (std::size_t a = 1; a <= n; ++a) {  // d_{n-a} = alpha_1 + ... + alpha_a
        acc += m.alpha[a - 1];
        diag_equality(static_cast<long>(n - a), Rat(acc));
    }
    acc = 0;
    for (std::size_t a = 1; a < n; ++a) {  // d_{-(n-a)} = beta_1 + ... + beta_a
        acc += m.beta[a - 1];
        diag_equality(-static_cast<long>(n - a), Rat(acc));
    }
    return p;
}

/// M_n^k, the partner of B_n^k: diagonal sums (1,2,...,n,...,2,1).
inline HPolytope build_M(std::size_t n, long k)
{
    if (k < 1 || k > static_cast<long>(n)) throw std::invalid_argument("build_M: need 1 <= k <= n");
    return build_M_transportation(Margins::uniform(n), Int(k));
}

/// GT polytope of shape lambda and content mu, in triangular coordinates.
/// mu may be any nonnegative vector; infeasible data gives an empty polytope.
inline HPolytope build_GT(const std::vector<Int>& lambda, const std::vector<Int>& mu)
{
    const std::size_t n = lambda.size();
    if (mu.size() != n) throw std::invalid_argument("build_GT: |lambda| != |mu| lengths");
    const std::size_t dim = n * (n + 1) / 2;
    HPolytope p(dim);
    auto idx = [&](std::size_t i, std::size_t j) { return detail::tri_index(n, i, j); };
    // g_{i,j} >= g_{i,j+1} and g_{i,j} >= g_{i+1,j}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (j + 1 < n) p.add_le(idx(i, j + 1), idx(i, j));
            if (i < j) p.add_le(idx(i + 1, j), idx(i, j));
        }
    for (std::size_t i = 0; i < n; ++i) {
        RatVector a(dim, Rat(0));
        a[idx(i, i)] = 1;
        p.add_equality(std::move(a), Rat(lambda[i]));
    }
    Int acc = 0;
    for (std::size_t a = 1; a <= n; ++a) {  // d_{n-a} = mu_1 + ... + mu_a
        acc += mu[a - 1];
        RatVector c(dim, Rat(0));
        for (std::size_t i = 0; i + (n - a) < n; ++i) c[idx(i, i + n - a)] = 1;
        p.add_equality(std::move(c), Rat(acc));
    }
    return p;
}

/// The integral equivalence of M_n^k with GT_{(k^n,0^n),(1^n,(k-1)^n)}:
/// a size-2n pattern made of a fixed triangle of k's, a fixed triangle of
/// 0's, and the 180-degree rotation of Y in the middle n x n block.
inline GTPattern embed_M_to_GT(const RatMatrix& y, const Int& k)
{
    const std::size_t n = y.n();
    if (!y.is_monotone() || y(0, 0) < 0)
        throw std::invalid_argument("embed_M_to_GT: not a monotone nonnegative matrix");
    if (y(n - 1, n - 1) > k) throw CapExceeded();
    GTPattern g(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = i; j < 2 * n; ++j) {
            if (i >= n) g.g(i, j) = 0;
            else if (j < n) g.g(i, j) = Rat(k);
            else g.g(i, j) = y(n - 1 - i, 2 * n - 1 - j);
        }
    return g;
}

/// Inverse of embed_M_to_GT. Validates the fixed triangles.
inline RatMatrix extract_M_from_GT(const GTPattern& g, const Int& k)
{
    if (g.n() % 2 != 0) throw std::invalid_argument("extract_M_from_GT: odd pattern size");
    const std::size_t n = g.n() / 2;
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = i; j < 2 * n; ++j) {
            if (i >= n && g.g(i, j) != 0)
                throw std::invalid_argument("extract_M_from_GT: zero triangle violated");
            if (i < n && j < n && g.g(i, j) != k)
                throw std::invalid_argument("extract_M_from_GT: k triangle violated");
        }
    RatMatrix y(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) y(a, b) = g.g(n - 1 - a, 2 * n - 1 - b);
    return y;
}

/// The unimodular stencil from the M_n^k vertex argument: first row and
/// column unchanged; below/on the diagonal subtract the left neighbour,
/// above it subtract the neighbour from the row above.
inline RatMatrix unimodular_map(const RatMatrix& y)
{
    const std::size_t n = y.n();
    RatMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == 0 || j == 0) out(i, j) = y(i, j);
            else if (j <= i) out(i, j) = y(i, j) - y(i, j - 1);
            else out(i, j) = y(i, j) - y(i - 1, j);
        }
    return out;
}

namespace detail {

struct StateHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using DPState = std::vector<std::int64_t>;
using DPLayer = std::unordered_map<DPState, unsigned __int128, StateHash>;

// Enumerates weakly increasing tuples fitting the interval product
// [lo_i, hi_i] with the prescribed total, adding `weight` to each.
inline void distribute(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                       std::int64_t total, unsigned __int128 weight, DPLayer& out,
                       std::uint64_t max_states)
{
    const std::size_t len = lo.size();
    std::vector<std::int64_t> suf_lo(len + 1, 0), suf_hi(len + 1, 0);
    for (std::size_t i = len; i-- > 0;) {
        suf_lo[i] = suf_lo[i + 1] + lo[i];
        suf_hi[i] = suf_hi[i + 1] + hi[i];
    }
    DPState cur(len);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t rem) -> void {
        if (i == len) {
            auto& slot = out[cur];
            slot += weight;
            if (slot >> 120)
                throw std::overflow_error("diagonal DP count overflow");
            if (max_states && out.size() > max_states)
                throw BudgetExceeded("diagonal DP state budget exceeded");
            return;
        }
        std::int64_t vlo = std::max(lo[i], rem - suf_hi[i + 1]);
        std::int64_t vhi = std::min(hi[i], rem - suf_lo[i + 1]);
        for (std::int64_t v = vlo; v <= vhi; ++v) {
            cur[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, total);
}

}  // namespace detail

/// Exact lattice-point count of t * M^k_{alpha,beta} by a transfer-matrix
/// sweep over the 2n-1 diagonals. Both monotonicity families couple only
/// adjacent diagonals, and adjacent diagonals interlace, so the state is
/// one diagonal (a weakly increasing tuple with prescribed sum, entries in
/// [0, t*k]). Sweeps from l = -(n-1) (bottom-left corner) to l = n-1.
inline Int count_M_diagonal_DP(const Margins& m, const Int& k, const Int& t,
                               std::uint64_t max_states = 0)
{
    if (!m.balanced()) throw InfeasibleMargins();
    const std::size_t n = m.n();
    const std::int64_t cap = static_cast<std::int64_t>(t * k);
    if (cap < 0) return 0;

    // Prescribed diagonal sums in sweep order: d_{-(n-1)}, ..., d_0, ..., d_{n-1}.
    std::vector<std::int64_t> diag_sum(2 * n - 1);
    Int acc = 0;
    for (std::size_t a = 1; a <= n; ++a) {
        acc += m.beta[a - 1];
        diag_sum[a - 1] = static_cast<std::int64_t>(t * acc);
    }
    acc = 0;
    for (std::size_t a = 1; a < n; ++a) {
        acc += m.alpha[a - 1];
        diag_sum[2 * n - 1 - a] = static_cast<std::int64_t>(t * acc);
    }

    detail::DPLayer layer;
    {
        // Corner diagonal: a single entry.
        if (diag_sum[0] < 0 || diag_sum[0] > cap) return 0;
        layer[{diag_sum[0]}] = 1;
    }
    for (std::size_t step = 1; step < 2 * n - 1; ++step) {
        const std::size_t len = step < n ? step + 1 : 2 * n - 1 - step;
        const bool expanding = step < n;
        detail::DPLayer next;
        for (const auto& [state, weight] : layer) {
            std::vector<std::int64_t> lo(len), hi(len);
            if (expanding) {
                // new_i in [old_{i-1}, old_i], outer bounds 0 and cap
                for (std::size_t i = 0; i < len; ++i) {
                    lo[i] = i == 0 ? 0 : state[i - 1];
                    hi[i] = i + 1 == len ? cap : state[i];
                }
            } else {
                // new_i in [old_i, old_{i+1}]
                for (std::size_t i = 0; i < len; ++i) {
                    lo[i] = state[i];
                    hi[i] = state[i + 1];
                }
            }
            detail::distribute(lo, hi, diag_sum[step], weight, next, max_states);
        }
        layer.swap(next);
        if (layer.empty()) return 0;
    }

    unsigned __int128 total = 0;
    for (const auto& [state, weight] : layer) total += weight;
    Int out = 0;
    const unsigned __int128 lo64 = total & 0xffffffffffffffffull;
    const unsigned __int128 hi64 = total >> 64;
    out = Int(static_cast<std::uint64_t>(hi64));
    out <<= 64;
    out += Int(static_cast<std::uint64_t>(lo64));
    return out;
}

inline Int count_M_diagonal_DP(std::size_t n, long k, const Int& t, std::uint64_t max_states = 0)
{
    return count_M_diagonal_DP(Margins::uniform(n), Int(k), t, max_states);
}

/// Kostka number K_{lambda,mu}: the number of integral GT patterns of
/// shape lambda and content mu. Uses the diagonal DP for the (k^n, 0^n)
/// family and generic lattice enumeration otherwise.
inline Int kostka(const std::vector<Int>& lambda, const std::vector<Int>& mu)
{
    const std::size_t len = lambda.size();
    if (mu.size() != len) throw std::invalid_argument("kostka: lambda and mu lengths differ");
    // Route (k^n,0^n) with admissible mu through M^k_{alpha,beta}.
    if (len >= 2 && len % 2 == 0) {
        const std::size_t n = len / 2;
        const Int k = lambda[0];
        bool family = k > 0;
        for (std::size_t i = 0; i < n && family; ++i) family = lambda[i] == k;
        for (std::size_t i = n; i < len && family; ++i) family = lambda[i] == 0;
        if (family) {
            Margins m;
            m.alpha.assign(mu.begin(), mu.begin() + n);
            for (std::size_t j = 0; j < n; ++j) m.beta.push_back(k - mu[len - 1 - j]);
            bool admissible = true;
            for (const auto& a : m.alpha) admissible = admissible && a >= 0;
            for (const auto& b : m.beta) admissible = admissible && b >= 0;
            if (admissible && m.balanced()) return count_M_diagonal_DP(m, k, Int(1));
        }
    }
    return count_lattice_points(build_GT(lambda, mu));
}

}  // namespace rbp
