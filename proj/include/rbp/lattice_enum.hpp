/**
 * Generic lattice-point enumeration for bounded rational H-polytopes.
 *
 * Strategy: derive a finite bounding box by exact interval propagation
 * (each constraint, restricted to one coordinate at a time, tightens the
 * box; rounds repeat until stable), then depth-first search coordinate by
 * coordinate. At every DFS level the admissible integer range of the next
 * coordinate is recomputed from each constraint's residual plus the best
 * possible contribution of the still-free coordinates, so every leaf
 * reached is a lattice point and no integer point is missed.
 *
 * Output is in lexicographic order and fully deterministic.
 */

#pragma once

#include "rbp/hpolytope.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace rbp {

namespace detail {

struct Bound {
    std::optional<Rat> lo, hi;
};

// One inequality a.x <= b in dense form.
struct DenseCon {
    RatVector a;
    Rat b;
    bool strict_in_interior = false;  // true for original inequalities (vs. equality halves)
};

inline std::vector<DenseCon> all_inequalities(const HPolytope& p)
{
    std::vector<DenseCon> cons;
    cons.reserve(p.inequalities().size() + 2 * p.equalities().size());
    for (const auto& c : p.inequalities()) cons.push_back({c.a, c.b, true});
    for (const auto& c : p.equalities()) {
        cons.push_back({c.a, c.b, false});
        RatVector neg(c.a);
        for (auto& x : neg) x = -x;
        cons.push_back({std::move(neg), -c.b, false});
    }
    return cons;
}

/// Tightens the per-coordinate box implied by the constraints. Returns the
/// box; entries stay unbounded if propagation cannot pin them down.
inline std::vector<Bound> propagate_box(const std::vector<DenseCon>& cons, std::size_t dim)
{
    std::vector<Bound> box(dim);
    const std::size_t max_rounds = 2 * dim + 8;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        bool changed = false;
        for (const auto& con : cons) {
            for (std::size_t i = 0; i < dim; ++i) {
                if (con.a[i] == 0) continue;
                // a_i x_i <= b - sum_{j != i} min(a_j x_j)
                Rat rest = 0;
                bool ok = true;
                for (std::size_t j = 0; j < dim && ok; ++j) {
                    if (j == i || con.a[j] == 0) continue;
                    const auto& bd = con.a[j] > 0 ? box[j].lo : box[j].hi;
                    if (!bd) ok = false;
                    else rest += con.a[j] * *bd;
                }
                if (!ok) continue;
                const Rat bound = (con.b - rest) / con.a[i];
                if (con.a[i] > 0) {
                    if (!box[i].hi || bound < *box[i].hi) {
                        box[i].hi = bound;
                        changed = true;
                    }
                } else {
                    if (!box[i].lo || bound > *box[i].lo) {
                        box[i].lo = bound;
                        changed = true;
                    }
                }
            }
        }
        if (!changed) break;
    }
    return box;
}

}  // namespace detail

/// Integer bounding box of P. Throws UnboundedPolytope if interval
/// propagation cannot bound every coordinate.
inline std::pair<IntVector, IntVector> integer_bounding_box(const HPolytope& p)
{
    const auto cons = detail::all_inequalities(p);
    const auto box = detail::propagate_box(cons, p.ambient_dim());
    IntVector lo(p.ambient_dim()), hi(p.ambient_dim());
    for (std::size_t i = 0; i < p.ambient_dim(); ++i) {
        if (!box[i].lo || !box[i].hi) throw UnboundedPolytope();
        lo[i] = rat_ceil(*box[i].lo);
        hi[i] = rat_floor(*box[i].hi);
    }
    return {lo, hi};
}

/// Enumerates P's lattice points in lexicographic order, invoking `emit`
/// for each. With `strict` set, inequality constraints are required to
/// hold strictly (relative-interior points); equalities still bind.
/// `max_nodes` caps the DFS size (0 = unlimited).
inline void for_each_lattice_point(const HPolytope& p,
                                   const std::function<void(const IntVector&)>& emit,
                                   bool strict = false, std::uint64_t max_nodes = 0)
{
    const std::size_t dim = p.ambient_dim();
    const auto cons = detail::all_inequalities(p);
    const auto box = detail::propagate_box(cons, dim);
    IntVector lo(dim), hi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!box[i].lo || !box[i].hi) throw UnboundedPolytope();
        lo[i] = rat_ceil(*box[i].lo);
        hi[i] = rat_floor(*box[i].hi);
        if (lo[i] > hi[i]) return;  // real box empty: no lattice points
    }

    // Per-constraint best/worst contribution of coordinates >= j, from the box.
    const std::size_t m = cons.size();
    std::vector<RatVector> suf_min(m, RatVector(dim + 1, Rat(0)));
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t j = dim; j-- > 0;) {
            Rat v = suf_min[c][j + 1];
            if (cons[c].a[j] > 0) v += cons[c].a[j] * Rat(lo[j]);
            else if (cons[c].a[j] < 0) v += cons[c].a[j] * Rat(hi[j]);
            suf_min[c][j] = v;
        }

    IntVector x(dim, Int(0));
    std::vector<Rat> partial(m, Rat(0));  // running a.x over fixed coordinates
    std::uint64_t nodes = 0;

    const std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == dim) {
            if (strict) {
                RatVector xr(x.begin(), x.end());
                if (!p.contains(xr, true)) return;
            }
            emit(x);
            return;
        }
        // Admissible integer range for x[j] across all constraints.
        Int l = lo[j], h = hi[j];
        for (std::size_t c = 0; c < m && l <= h; ++c) {
            if (cons[c].a[j] == 0) continue;
            const Rat slack = cons[c].b - partial[c] - suf_min[c][j + 1];
            const Rat bound = slack / cons[c].a[j];
            if (cons[c].a[j] > 0) {
                const Int ub = rat_floor(bound);
                if (ub < h) h = ub;
            } else {
                const Int lb = rat_ceil(bound);
                if (lb > l) l = lb;
            }
        }
        for (Int v = l; v <= h; ++v) {
            if (max_nodes && ++nodes > max_nodes)
                throw BudgetExceeded("lattice enumeration node budget exceeded");
            x[j] = v;
            for (std::size_t c = 0; c < m; ++c)
                if (cons[c].a[j] != 0) partial[c] += cons[c].a[j] * Rat(v);
            rec(j + 1);
            for (std::size_t c = 0; c < m; ++c)
                if (cons[c].a[j] != 0) partial[c] -= cons[c].a[j] * Rat(v);
        }
        x[j] = 0;
    };
    rec(0);
}

/// All lattice points of P, lexicographically sorted (by construction).
inline std::vector<IntVector> lattice_points(const HPolytope& p, bool strict = false,
                                             std::uint64_t max_nodes = 0)
{
    std::vector<IntVector> out;
    for_each_lattice_point(p, [&](const IntVector& x) { out.push_back(x); }, strict, max_nodes);
    return out;
}

inline Int count_lattice_points(const HPolytope& p, std::uint64_t max_nodes = 0)
{
    Int c = 0;
    for_each_lattice_point(p, [&](const IntVector&) { ++c; }, false, max_nodes);
    return c;
}

}  // namespace rbp
