/**
 * Exact H-representation polytopes: a system a.x <= b, c.x = d over the
 * rationals, plus the V-representation returned by vertex enumeration.
 *
 * Constructors in this library always produce feasible systems; feasibility
 * is checked lazily by the operations that would notice (vertex enumeration,
 * lattice enumeration).
 */

#pragma once

#include "rbp/linalg.hpp"
#include "rbp/matrix.hpp"
#include "rbp/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rbp {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyPolytope : GeometryError {
    EmptyPolytope() : GeometryError("polytope is empty") {}
};
struct UnboundedPolytope : GeometryError {
    UnboundedPolytope() : GeometryError("polytope is unbounded") {}
};
struct ZeroDimensional : GeometryError {
    ZeroDimensional() : GeometryError("facets of a 0-dimensional polytope are undefined") {}
};
struct NotInPolytope : GeometryError {
    NotInPolytope() : GeometryError("point violates a constraint") {}
};
struct BudgetExceeded : GeometryError {
    explicit BudgetExceeded(const std::string& what) : GeometryError(what) {}
};

/// One linear constraint a.x (<= or =) b.
struct LinCon {
    RatVector a;
    Rat b;
};

class HPolytope {
public:
    explicit HPolytope(std::size_t ambient_dim) : dim_(ambient_dim) {}

    std::size_t ambient_dim() const { return dim_; }

    void add_inequality(RatVector a, Rat b)
    {
        check_len(a);
        ineqs_.push_back({std::move(a), std::move(b)});
    }
    void add_equality(RatVector c, Rat d)
    {
        check_len(c);
        eqs_.push_back({std::move(c), std::move(d)});
    }

    /// Convenience: lower/upper bound on a single coordinate.
    void add_lower_bound(std::size_t i, Rat lo)
    {
        RatVector a(dim_, Rat(0));
        a[i] = -1;
        add_inequality(std::move(a), -lo);
    }
    void add_upper_bound(std::size_t i, Rat hi)
    {
        RatVector a(dim_, Rat(0));
        a[i] = 1;
        add_inequality(std::move(a), std::move(hi));
    }
    /// x[i] <= x[j].
    void add_le(std::size_t i, std::size_t j)
    {
        RatVector a(dim_, Rat(0));
        a[i] = 1;
        a[j] = -1;
        add_inequality(std::move(a), Rat(0));
    }

    const std::vector<LinCon>& inequalities() const { return ineqs_; }
    const std::vector<LinCon>& equalities() const { return eqs_; }

    bool contains(const RatVector& x, bool strict_inequalities = false) const
    {
        for (const auto& c : eqs_)
            if (dot(c.a, x) != c.b) return false;
        for (const auto& c : ineqs_) {
            const Rat v = dot(c.a, x);
            if (strict_inequalities ? (v >= c.b) : (v > c.b)) return false;
        }
        return true;
    }

    /// The dilate {t*x : x in P}: right-hand sides scale by t.
    HPolytope dilate(const Int& t) const
    {
        if (t < 1) throw std::invalid_argument("dilate: t must be >= 1");
        HPolytope q(dim_);
        q.ineqs_ = ineqs_;
        q.eqs_ = eqs_;
        for (auto& c : q.ineqs_) c.b *= t;
        for (auto& c : q.eqs_) c.b *= t;
        return q;
    }

private:
    void check_len(const RatVector& v) const
    {
        if (v.size() != dim_) throw std::invalid_argument("constraint length != ambient dim");
    }

    std::size_t dim_;
    std::vector<LinCon> ineqs_;
    std::vector<LinCon> eqs_;
};

inline HPolytope dilate(const HPolytope& p, const Int& t) { return p.dilate(t); }

/// Vertex set of a bounded polytope, exact and lexicographically sorted.
struct VRep {
    std::size_t ambient_dim = 0;
    std::vector<RatVector> vertices;
};

/// Per-vertex lcm of coordinate denominators, plus the overall maximum.
struct DenominatorReport {
    std::vector<Int> per_vertex;
    Int max = 1;
};

inline DenominatorReport vertex_denominators(const VRep& v)
{
    DenominatorReport rep;
    rep.per_vertex.reserve(v.vertices.size());
    for (const auto& vert : v.vertices) {
        Int m = denominator_lcm(vert);
        rep.per_vertex.push_back(m);
        if (m > rep.max) rep.max = m;
    }
    return rep;
}

}  // namespace rbp
