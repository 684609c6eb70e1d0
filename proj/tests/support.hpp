/**
 * Shared test support: independent oracles (brute-force permutation
 * filters, SSYT enumeration, path enumeration, exact determinants),
 * deterministic random generators, and frozen reference data.
 *
 * Everything here is deliberately implemented by the most naive route
 * available so it stays independent of the library's algorithms.
 */

#pragma once

#include "rbp/rbp.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using namespace rbp;

/// Longest strictly increasing subsequence of a permutation (one-line).
inline std::size_t lis_length(const std::vector<std::size_t>& w)
{
    std::vector<std::size_t> best;
    for (auto v : w) {
        auto it = std::lower_bound(best.begin(), best.end(), v);
        if (it == best.end()) best.push_back(v);
        else *it = v;
    }
    return best.size();
}

/// All permutations of S_n whose longest increasing subsequence is <= k.
inline std::vector<std::vector<std::size_t>> perms_with_lis_at_most(std::size_t n, std::size_t k)
{
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        if (lis_length(w) <= k) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Brute-force SSYT count: fills the diagram of lambda cell by cell with
/// entries 1..m, checking row/column conditions and the content at the end.
inline Int ssyt_count(const std::vector<Int>& lambda, const std::vector<Int>& mu)
{
    std::vector<std::size_t> shape;
    for (const auto& l : lambda)
        if (l > 0) shape.push_back(static_cast<std::size_t>(l));
    for (std::size_t i = 0; i + 1 < shape.size(); ++i)
        if (shape[i] < shape[i + 1]) return 0;
    const std::size_t m = mu.size();
    std::vector<Int> need(mu);
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) t[i].assign(shape[i], 0);
    Int count = 0;
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == shape.size()) {
            for (const auto& x : need)
                if (x != 0) return;
            ++count;
            return;
        }
        const auto [nr, nc] = c + 1 < shape[r] ? std::pair{r, c + 1} : std::pair{r + 1, std::size_t{0}};
        for (int v = 1; v <= static_cast<int>(m); ++v) {
            if (need[static_cast<std::size_t>(v - 1)] <= 0) continue;
            if (c > 0 && t[r][c - 1] > v) continue;
            if (r > 0 && c < shape[r - 1] && t[r - 1][c] >= v) continue;
            t[r][c] = v;
            need[static_cast<std::size_t>(v - 1)] -= 1;
            self(self, nr, nc);
            need[static_cast<std::size_t>(v - 1)] += 1;
        }
        t[r][c] = 0;
    };
    if (shape.empty()) {
        for (const auto& x : need)
            if (x != 0) return 0;
        return 1;
    }
    rec(rec, 0, 0);
    return count;
}

/// Max chain sum by enumerating all binom(2n-2, n-1) step sequences.
inline Rat max_chain_sum_bruteforce(const RatMatrix& x)
{
    const std::size_t n = x.n();
    if (n == 0) return Rat(0);
    const std::size_t steps = 2 * n - 2;
    Rat best = 0;
    bool first = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << steps); ++mask) {
        std::size_t i = 0, j = 0;
        Rat s = x(0, 0);
        bool ok = true;
        for (std::size_t b = 0; b < steps && ok; ++b) {
            if (mask & (std::size_t{1} << b)) ++i;
            else ++j;
            if (i >= n || j >= n) ok = false;
            else s += x(i, j);
        }
        if (ok && (first || s > best)) {
            best = s;
            first = false;
        }
    }
    return best;
}

/// Exact determinant by rational elimination.
inline Rat determinant(std::vector<RatVector> rows)
{
    const std::size_t n = rows.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && rows[sel][c] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            std::swap(rows[sel], rows[c]);
            det = -det;
        }
        det *= rows[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (rows[i][c] == 0) continue;
            const Rat f = rows[i][c] / rows[c][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[c][j];
        }
    }
    return det;
}

/// Example 3.3 closed form for n = 2.
inline RatMatrix rho_2x2_closed_form(const RatMatrix& x)
{
    RatMatrix y(2);
    y(0, 0) = std::min(x(0, 1), x(1, 0));
    y(0, 1) = x(0, 0) + x(0, 1);
    y(1, 0) = x(0, 0) + x(1, 0);
    y(1, 1) = x(0, 0) + x(1, 1) + std::max(x(0, 1), x(1, 0));
    return y;
}

/// Random rational in [0, hi] with denominator from {1,2,3,4,6}.
inline Rat random_rat(std::mt19937_64& rng, long hi = 4)
{
    static const long dens[] = {1, 2, 3, 4, 6};
    const long d = dens[rng() % 5];
    const long n = static_cast<long>(rng() % static_cast<unsigned long>(hi * d + 1));
    return Rat(n, d);
}

inline RatMatrix random_rat_matrix(std::mt19937_64& rng, std::size_t n, long hi = 4)
{
    RatMatrix x(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = random_rat(rng, hi);
    return x;
}

inline RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, long hi = 4)
{
    RatMatrix x(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x(i, j) = Rat(static_cast<long>(rng() % static_cast<unsigned long>(hi + 1)));
    return x;
}

/// Random poset on sz elements: a random relation set over a shuffled
/// order, closed transitively by the Poset constructor.
inline Poset random_poset(std::mt19937_64& rng, std::size_t sz, unsigned percent = 50)
{
    std::vector<std::size_t> perm(sz);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i + 1; j < sz; ++j)
            if (rng() % 100 < percent) rel.emplace_back(perm[i], perm[j]);
    return Poset(sz, rel);
}

/// Random point of the order polytope: monotone closure of random values.
inline RatVector random_order_point(std::mt19937_64& rng, const Poset& p)
{
    RatVector f(p.size());
    for (auto& v : f) v = Rat(static_cast<long>(rng() % 13), 12);
    RatVector g(p.size(), Rat(0));
    for (auto q : p.linear_extension()) {
        Rat best = f[q];
        for (auto r : p.covered_by(q))
            if (g[r] > best) best = g[r];
        g[q] = best;
    }
    return g;
}

/// The six vertices of B_3^2 (five 123-avoiding permutation matrices and
/// one half-integral point).
inline std::vector<RatMatrix> b32_vertices_reference()
{
    auto m = [](std::initializer_list<std::initializer_list<const char*>> rows) {
        std::vector<RatVector> rr;
        for (const auto& row : rows) {
            RatVector r;
            for (const char* s : row) r.push_back(parse_rat(s));
            rr.push_back(r);
        }
        return RatMatrix(rr);
    };
    return {
        m({{"1", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}}),
        m({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}}),
        m({{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}}),
        m({{"0", "0", "1"}, {"1", "0", "0"}, {"0", "1", "0"}}),
        m({{"0", "0", "1"}, {"0", "1", "0"}, {"1", "0", "0"}}),
        m({{"1/2", "0", "1/2"}, {"0", "1", "0"}, {"1/2", "0", "1/2"}}),
    };
}

/// The seven vertices of M_3^2.
inline std::vector<RatMatrix> m32_vertices_reference()
{
    auto m = [](std::initializer_list<std::initializer_list<const char*>> rows) {
        std::vector<RatVector> rr;
        for (const auto& row : rows) {
            RatVector r;
            for (const char* s : row) r.push_back(parse_rat(s));
            rr.push_back(r);
        }
        return RatMatrix(rr);
    };
    return {
        m({{"1", "1", "1"}, {"1", "1", "1"}, {"1", "1", "1"}}),
        m({{"0", "1", "1"}, {"1", "1", "1"}, {"1", "1", "2"}}),
        m({{"0", "1", "1"}, {"0", "1", "1"}, {"1", "2", "2"}}),
        m({{"0", "0", "1"}, {"1", "1", "2"}, {"1", "1", "2"}}),
        m({{"0", "0", "1"}, {"0", "1", "2"}, {"1", "2", "2"}}),
        m({{"1/2", "1/2", "1"}, {"1/2", "1/2", "3/2"}, {"1", "3/2", "2"}}),
        m({{"0", "1/2", "1"}, {"1/2", "3/2", "3/2"}, {"1", "3/2", "3/2"}}),
    };
}

/// The published vertex of B_5^3 with denominator 5.
inline RatMatrix b53_vertex_reference()
{
    std::vector<RatVector> rows = {
        {Rat(0), Rat(1, 5), Rat(4, 5), Rat(0), Rat(0)},
        {Rat(3, 5), Rat(0), Rat(1, 5), Rat(0), Rat(1, 5)},
        {Rat(0), Rat(3, 5), Rat(0), Rat(2, 5), Rat(0)},
        {Rat(2, 5), Rat(0), Rat(0), Rat(3, 5), Rat(0)},
        {Rat(0), Rat(1, 5), Rat(0), Rat(0), Rat(4, 5)},
    };
    return RatMatrix(rows);
}

/// Ehrhart coefficients of B_3^2, low to high.
inline RatVector b32_ehrhart_reference()
{
    return {Rat(1), Rat(2), Rat(17, 12), Rat(1, 2), Rat(1, 12)};
}

/// Ehrhart coefficients of B_5^3, low to high (17 entries).
inline RatVector b53_ehrhart_reference()
{
    static const char* s[17] = {"1",
                                "677/144",
                                "64192517/5765760",
                                "9229105657/518918400",
                                "3070672490609/145297152000",
                                "698212357/35925120",
                                "8999625683/638668800",
                                "4245350429/522547200",
                                "26012124739/6967296000",
                                "7126361/5225472",
                                "958262023/2438553600",
                                "23022107/261273600",
                                "192164881/12773376000",
                                "542779/287400960",
                                "8186069/49816166400",
                                "661643/74724249600",
                                "1553003/6974263296000"};
    RatVector v;
    for (const char* c : s) v.push_back(parse_rat(c));
    return v;
}

/// Table of facet/vertex counts for 2 <= k <= n <= 5 (k = 1 is a point).
struct TableRow {
    std::size_t n;
    std::vector<std::size_t> facets;    // k = 2..n
    std::vector<std::size_t> vertices;  // k = 2..n
};

inline std::vector<TableRow> facet_vertex_table_reference()
{
    return {
        {2, {2}, {2}},
        {3, {9, 9}, {6, 6}},
        {4, {32, 24, 16}, {49, 34, 24}},
        {5, {91, 77, 41, 25}, {3692, 1232, 187, 120}},
    };
}

inline RatVector flat(const RatMatrix& m) { return m.flat(); }

inline std::vector<RatVector> sorted_flats(const std::vector<RatMatrix>& ms)
{
    std::vector<RatVector> v;
    for (const auto& m : ms) v.push_back(m.flat());
    std::sort(v.begin(), v.end());
    return v;
}

/// Lattice points of the t-dilate, as integer matrices.
inline std::vector<RatMatrix> dilate_lattice_matrices(const HPolytope& p, long t, std::size_t n)
{
    std::vector<RatMatrix> out;
    for (const auto& pt : lattice_points(dilate(p, Int(t)))) {
        RatVector v(pt.begin(), pt.end());
        out.emplace_back(n, std::move(v));
    }
    return out;
}

}  // namespace testsupport
