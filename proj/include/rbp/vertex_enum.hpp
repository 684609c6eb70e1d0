/**
 * Exact vertex enumeration by the double description method, plus the
 * V-representation consumers built on top of it: affine dimension, facet
 * counting from tight vertex sets, vertexhood certification.
 *
 * Pipeline for vertices():
 *   1. eliminate the equality system by exact Gaussian elimination,
 *      parametrizing the affine hull as x = x0 + N u;
 *   2. homogenize the reduced inequalities A'u <= b' into the pointed cone
 *      { (u,s) : A'u - b's <= 0, s >= 0 } over primitive integer rows;
 *   3. run incremental double description with the combinatorial
 *      adjacency test (a pair of rays is adjacent iff no third ray's tight
 *      set contains the intersection of theirs);
 *   4. scale rays back to vertices and map them up to the ambient space.
 *
 * Rays found with s = 0 certify unboundedness; no ray with s > 0 means the
 * polytope is empty. Output vertices are lexicographically sorted, so the
 * result is independent of constraint order.
 */

#pragma once

#include "rbp/hpolytope.hpp"
#include "rbp/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace rbp {

namespace detail {

using Words = std::vector<std::uint64_t>;

inline Words bits_and(const Words& a, const Words& b)
{
    Words r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

inline bool bits_subset(const Words& sub, const Words& sup)
{
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (sub[i] & ~sup[i]) return false;
    return true;
}

inline std::size_t bits_count(const Words& a)
{
    std::size_t c = 0;
    for (auto w : a) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

inline void primitive_scale(IntVector& v)
{
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

inline Int idot(const IntVector& a, const IntVector& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

struct Ray {
    IntVector z;
    Words zero;  // tight bits over processed rows
    Int d;       // dot with the row currently being inserted
};

/// Extreme rays of the pointed cone { z : rows . z <= 0 }.
/// Throws UnboundedPolytope when the cone has nontrivial lineality
/// (rank of rows < dim), which for homogenized polytopes means exactly
/// an unbounded feasible set.
inline std::vector<IntVector> dd_extreme_rays(const std::vector<IntVector>& rows, std::size_t dim)
{
    const std::size_t m = rows.size();
    const std::size_t words = (m + 63) / 64;

    // Greedy full-rank initial subsystem.
    RankAccumulator acc(dim);
    std::vector<std::size_t> base;
    std::vector<bool> in_base(m, false);
    for (std::size_t i = 0; i < m && base.size() < dim; ++i) {
        RatVector r(rows[i].begin(), rows[i].end());
        if (acc.add(std::move(r))) {
            base.push_back(i);
            in_base[i] = true;
        }
    }
    if (base.size() < dim) throw UnboundedPolytope();

    // Initial simplicial cone: rays r_j with  row_{base[i]} . r_j = -delta_ij.
    RatRows mb;
    for (auto i : base) mb.emplace_back(rows[i].begin(), rows[i].end());
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        RatVector e(dim, Rat(0));
        e[j] = -1;
        auto sol = solve(mb, e, dim);
        if (!sol) throw UnboundedPolytope();
        Int scale = denominator_lcm(*sol);
        IntVector z(dim);
        for (std::size_t t = 0; t < dim; ++t) z[t] = rat_num((*sol)[t] * Rat(scale));
        primitive_scale(z);
        rays.push_back({std::move(z), Words(words, 0), Int(0)});
    }

    std::vector<bool> processed(m, false);
    auto mark_zero_bits = [&](Ray& r) {
        r.zero.assign(words, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (processed[i] && idot(rows[i], r.z) == 0) r.zero[i / 64] |= 1ull << (i % 64);
    };
    for (auto i : base) processed[i] = true;
    for (auto& r : rays) mark_zero_bits(r);

    for (std::size_t row_idx = 0; row_idx < m; ++row_idx) {
        if (in_base[row_idx]) continue;
        const IntVector& row = rows[row_idx];
        bool any_pos = false;
        for (auto& r : rays) {
            r.d = idot(row, r.z);
            if (r.d > 0) any_pos = true;
        }
        processed[row_idx] = true;
        if (!any_pos) {
            for (auto& r : rays)
                if (r.d == 0) r.zero[row_idx / 64] |= 1ull << (row_idx % 64);
            continue;
        }

        std::vector<std::size_t> neg, pos;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (rays[i].d < 0) neg.push_back(i);
            else if (rays[i].d > 0) pos.push_back(i);
        }

        std::vector<Ray> created;
        for (auto ip : neg)
            for (auto iq : pos) {
                const Ray& p = rays[ip];
                const Ray& q = rays[iq];
                Words w = bits_and(p.zero, q.zero);
                if (dim >= 2 && bits_count(w) < dim - 2) continue;
                bool adjacent = true;
                for (std::size_t ir = 0; ir < rays.size() && adjacent; ++ir) {
                    if (ir == ip || ir == iq) continue;
                    if (bits_subset(w, rays[ir].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector z(dim);
                for (std::size_t t = 0; t < dim; ++t) z[t] = q.d * p.z[t] - p.d * q.z[t];
                primitive_scale(z);
                Ray nr{std::move(z), Words(words, 0), Int(0)};
                mark_zero_bits(nr);
                created.push_back(std::move(nr));
            }

        std::vector<Ray> next;
        next.reserve(rays.size() + created.size());
        for (auto& r : rays) {
            if (r.d > 0) continue;
            if (r.d == 0) r.zero[row_idx / 64] |= 1ull << (row_idx % 64);
            next.push_back(std::move(r));
        }
        for (auto& r : created) next.push_back(std::move(r));
        rays.swap(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.z));
    return out;
}

struct AffineHull {
    RatVector x0;       // one solution of the equality system
    RatRows basis;      // nullspace basis, x = x0 + basis^T u
};

inline AffineHull equality_hull(const HPolytope& p)
{
    const std::size_t n = p.ambient_dim();
    if (p.equalities().empty()) {
        AffineHull h;
        h.x0.assign(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            RatVector e(n, Rat(0));
            e[i] = 1;
            h.basis.push_back(std::move(e));
        }
        return h;
    }
    RatRows c;
    RatVector d;
    for (const auto& eq : p.equalities()) {
        c.push_back(eq.a);
        d.push_back(eq.b);
    }
    auto x0 = solve(c, d, n);
    if (!x0) throw EmptyPolytope();
    AffineHull h;
    h.x0 = std::move(*x0);
    h.basis = nullspace(std::move(c), n);
    return h;
}

}  // namespace detail

/// Complete vertex set of a bounded nonempty H-polytope (sorted).
inline VRep vertices(const HPolytope& p)
{
    const std::size_t n = p.ambient_dim();
    const auto hull = detail::equality_hull(p);
    const std::size_t d0 = hull.basis.size();

    if (d0 == 0) {
        if (!p.contains(hull.x0)) throw EmptyPolytope();
        return VRep{n, {hull.x0}};
    }

    // Reduced homogeneous rows (a'|-b') over primitive integers, deduplicated.
    std::set<IntVector> seen;
    std::vector<IntVector> rows;
    for (const auto& c : p.inequalities()) {
        RatVector red(d0 + 1);
        bool nonzero = false;
        for (std::size_t k = 0; k < d0; ++k) {
            red[k] = dot(c.a, hull.basis[k]);
            if (red[k] != 0) nonzero = true;
        }
        const Rat b = c.b - dot(c.a, hull.x0);
        if (!nonzero) {
            if (b < 0) throw EmptyPolytope();
            continue;
        }
        red[d0] = -b;
        Int scale = denominator_lcm(red);
        IntVector irow(d0 + 1);
        for (std::size_t k = 0; k <= d0; ++k) irow[k] = rat_num(red[k] * Rat(scale));
        detail::primitive_scale(irow);
        if (seen.insert(irow).second) rows.push_back(std::move(irow));
    }
    {
        IntVector srow(d0 + 1, Int(0));
        srow[d0] = -1;
        if (seen.insert(srow).second) rows.push_back(std::move(srow));
    }

    auto raw = detail::dd_extreme_rays(rows, d0 + 1);

    std::vector<RatVector> verts;
    bool any = false;
    for (const auto& z : raw) {
        const Int& s = z[d0];
        if (s == 0) throw UnboundedPolytope();
        any = true;
        RatVector x = hull.x0;
        for (std::size_t k = 0; k < d0; ++k) {
            if (z[k] == 0) continue;
            const Rat u = Rat(z[k]) / Rat(s);
            for (std::size_t t = 0; t < n; ++t) x[t] += u * hull.basis[k][t];
        }
        verts.push_back(std::move(x));
    }
    if (!any) throw EmptyPolytope();
    std::sort(verts.begin(), verts.end());
    return VRep{n, std::move(verts)};
}

/// Affine rank (dimension of the affine span) of a point set.
inline std::size_t affine_rank(const std::vector<RatVector>& pts)
{
    if (pts.empty()) return 0;
    RankAccumulator acc(pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVector diff(pts[i]);
        for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= pts[0][j];
        acc.add(std::move(diff));
    }
    return acc.rank();
}

inline std::size_t affine_dim(const VRep& v) { return affine_rank(v.vertices); }

/// Dimension of the affine hull of P. Throws EmptyPolytope when P is empty.
inline std::size_t affine_dim(const HPolytope& p) { return affine_dim(vertices(p)); }

/// Number of facets, computed from the V-representation: an inequality
/// yields a facet iff its tight vertex set spans affine dimension D-1;
/// identical tight sets are counted once.
inline std::size_t facet_count(const HPolytope& p, const VRep& v)
{
    const std::size_t nv = v.vertices.size();
    const std::size_t d = affine_dim(v);
    if (d == 0) throw ZeroDimensional();

    std::set<std::vector<std::uint32_t>> facets;
    for (const auto& con : p.inequalities()) {
        std::vector<std::uint32_t> tight;
        for (std::size_t i = 0; i < nv; ++i)
            if (dot(con.a, v.vertices[i]) == con.b) tight.push_back(static_cast<std::uint32_t>(i));
        if (tight.empty() || tight.size() == nv) continue;
        RankAccumulator acc(p.ambient_dim());
        std::size_t r = 0;
        for (std::size_t i = 1; i < tight.size() && r < d - 1; ++i) {
            RatVector diff = v.vertices[tight[i]];
            for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= v.vertices[tight[0]][j];
            if (acc.add(std::move(diff))) ++r;
        }
        if (r == d - 1) facets.insert(std::move(tight));
    }
    return facets.size();
}

inline std::size_t facet_count(const HPolytope& p) { return facet_count(p, vertices(p)); }

/// True iff x is a 0-face of P: the constraints tight at x have full rank.
/// Throws NotInPolytope when x is not even a member.
inline bool is_vertex(const HPolytope& p, const RatVector& x)
{
    if (!p.contains(x)) throw NotInPolytope();
    RankAccumulator acc(p.ambient_dim());
    for (const auto& c : p.equalities()) acc.add(c.a);
    for (const auto& c : p.inequalities()) {
        if (acc.rank() == p.ambient_dim()) return true;
        if (dot(c.a, x) == c.b) acc.add(c.a);
    }
    return acc.rank() == p.ambient_dim();
}

}  // namespace rbp
