/**
 * Finite posets, Stanley's order and chain polytopes, the transfer map and
 * its inverse, piecewise-linear rowmotion via toggles, and Stanley-Thomas
 * words on products of two chains.
 *
 * A poset function is a RatVector indexed by element id. The transfer maps
 * validate membership in the respective *cones* (nonnegative / monotone
 * nonnegative) rather than the unit-capped polytopes: the formulas are
 * homogeneous and the library applies them to dilated points as well.
 */

#pragma once

#include "rbp/hpolytope.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rbp {

struct NotInOrderPolytope : std::runtime_error {
    NotInOrderPolytope() : std::runtime_error("function is not monotone nonnegative") {}
};
struct NotInChainPolytope : std::runtime_error {
    NotInChainPolytope() : std::runtime_error("function has a negative value") {}
};
struct NotProductOfChains : std::runtime_error {
    NotProductOfChains() : std::runtime_error("operation requires the poset [n] x [m]") {}
};

class Poset {
public:
    /// Builds from a relation list (p < q); stores the transitive closure
    /// and the transitively irredundant cover relations.
    Poset(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& relations)
        : m_(size), lt_(size, std::vector<bool>(size, false))
    {
        for (auto [p, q] : relations) {
            if (p >= m_ || q >= m_ || p == q)
                throw std::invalid_argument("Poset: bad relation");
            lt_[p][q] = true;
        }
        for (std::size_t k = 0; k < m_; ++k)
            for (std::size_t i = 0; i < m_; ++i)
                if (lt_[i][k])
                    for (std::size_t j = 0; j < m_; ++j)
                        if (lt_[k][j]) lt_[i][j] = true;
        for (std::size_t i = 0; i < m_; ++i)
            if (lt_[i][i]) throw std::invalid_argument("Poset: relations contain a cycle");
        for (std::size_t p = 0; p < m_; ++p)
            for (std::size_t q = 0; q < m_; ++q) {
                if (!lt_[p][q]) continue;
                bool cover = true;
                for (std::size_t r = 0; r < m_ && cover; ++r)
                    if (lt_[p][r] && lt_[r][q]) cover = false;
                if (cover) covers_.emplace_back(p, q);
            }
    }

    std::size_t size() const { return m_; }
    bool less(std::size_t p, std::size_t q) const { return lt_[p][q]; }
    bool leq(std::size_t p, std::size_t q) const { return p == q || lt_[p][q]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

    std::vector<std::size_t> covered_by(std::size_t q) const
    {
        std::vector<std::size_t> r;
        for (auto [a, b] : covers_)
            if (b == q) r.push_back(a);
        return r;
    }
    std::vector<std::size_t> covers_of(std::size_t p) const
    {
        std::vector<std::size_t> r;
        for (auto [a, b] : covers_)
            if (a == p) r.push_back(b);
        return r;
    }

    bool is_minimal(std::size_t p) const
    {
        for (std::size_t q = 0; q < m_; ++q)
            if (lt_[q][p]) return false;
        return true;
    }
    bool is_maximal(std::size_t p) const
    {
        for (std::size_t q = 0; q < m_; ++q)
            if (lt_[p][q]) return false;
        return true;
    }

    /// One linear extension (smallest available id first): deterministic.
    std::vector<std::size_t> linear_extension() const
    {
        std::vector<std::size_t> order;
        std::vector<bool> placed(m_, false);
        while (order.size() < m_) {
            for (std::size_t p = 0; p < m_; ++p) {
                if (placed[p]) continue;
                bool ready = true;
                for (std::size_t q = 0; q < m_ && ready; ++q)
                    if (!placed[q] && lt_[q][p]) ready = false;
                if (ready) {
                    order.push_back(p);
                    placed[p] = true;
                    break;
                }
            }
        }
        return order;
    }

    /// All maximal chains, as element id sequences, in DFS order.
    std::vector<std::vector<std::size_t>> maximal_chains() const
    {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t p) -> void {
            cur.push_back(p);
            auto up = covers_of(p);
            if (up.empty()) out.push_back(cur);
            else
                for (auto q : up) self(self, q);
            cur.pop_back();
        };
        for (std::size_t p = 0; p < m_; ++p)
            if (is_minimal(p)) rec(rec, p);
        return out;
    }

    std::vector<std::vector<std::size_t>> antichains() const
    {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t next) -> void {
            out.push_back(cur);
            for (std::size_t p = next; p < m_; ++p) {
                bool ok = true;
                for (auto q : cur)
                    if (lt_[q][p] || lt_[p][q]) ok = false;
                if (ok) {
                    cur.push_back(p);
                    self(self, p + 1);
                    cur.pop_back();
                }
            }
        };
        rec(rec, 0);
        return out;
    }

    std::vector<std::vector<std::size_t>> order_filters() const
    {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& a : antichains()) {
            std::vector<std::size_t> f;
            for (std::size_t p = 0; p < m_; ++p) {
                bool in = false;
                for (auto q : a)
                    if (p == q || lt_[q][p]) in = true;
                if (in) f.push_back(p);
            }
            std::sort(f.begin(), f.end());
            out.push_back(std::move(f));
        }
        return out;
    }

private:
    std::size_t m_;
    std::vector<std::vector<bool>> lt_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// [n] x [m] with componentwise order; element (i,j) has id i*m + j.
inline Poset product_of_chains(std::size_t n, std::size_t m)
{
    if (n < 1 || m < 1) throw std::invalid_argument("product_of_chains: need n, m >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i + 1 < n) rel.emplace_back(i * m + j, (i + 1) * m + j);
            if (j + 1 < m) rel.emplace_back(i * m + j, i * m + j + 1);
        }
    return Poset(n * m, rel);
}

/// O(P): 0 <= f <= 1 and f monotone. Emitted reduced: bounds only at
/// extremes, monotonicity only on covers (an equivalent H-description).
inline HPolytope order_polytope(const Poset& p)
{
    HPolytope h(p.size());
    for (std::size_t q = 0; q < p.size(); ++q)
        if (p.is_minimal(q)) h.add_lower_bound(q, Rat(0));
    for (std::size_t q = 0; q < p.size(); ++q)
        if (p.is_maximal(q)) h.add_upper_bound(q, Rat(1));
    for (auto [a, b] : p.covers()) h.add_le(a, b);
    return h;
}

/// C(P): f >= 0 and every maximal chain sums to at most 1.
inline HPolytope chain_polytope(const Poset& p)
{
    HPolytope h(p.size());
    for (std::size_t q = 0; q < p.size(); ++q) h.add_lower_bound(q, Rat(0));
    for (const auto& chain : p.maximal_chains()) {
        RatVector a(p.size(), Rat(0));
        for (auto q : chain) a[q] = 1;
        h.add_inequality(std::move(a), Rat(1));
    }
    return h;
}

inline RatVector indicator(const Poset& p, const std::vector<std::size_t>& subset)
{
    RatVector f(p.size(), Rat(0));
    for (auto q : subset) f[q] = 1;
    return f;
}

/// Membership in the order cone {f >= 0 monotone}; cap <= 1 additionally
/// for the order polytope itself.
inline bool in_order_cone(const Poset& p, const RatVector& f)
{
    for (std::size_t q = 0; q < p.size(); ++q)
        if (f[q] < 0) return false;
    for (auto [a, b] : p.covers())
        if (f[a] > f[b]) return false;
    return true;
}

inline bool in_order_polytope(const Poset& p, const RatVector& f)
{
    if (!in_order_cone(p, f)) return false;
    for (std::size_t q = 0; q < p.size(); ++q)
        if (f[q] > 1) return false;
    return true;
}

inline bool in_chain_polytope(const Poset& p, const RatVector& f)
{
    for (std::size_t q = 0; q < p.size(); ++q)
        if (f[q] < 0) return false;
    for (const auto& chain : p.maximal_chains()) {
        Rat s = 0;
        for (auto q : chain) s += f[q];
        if (s > 1) return false;
    }
    return true;
}

/// Stanley's transfer map: phi(f)(p) = f(p) minus the best value just
/// below p (0 at minimal elements). Defined on the whole order cone.
inline RatVector transfer(const Poset& p, const RatVector& f)
{
    if (!in_order_cone(p, f)) throw NotInOrderPolytope();
    RatVector g(p.size());
    for (std::size_t q = 0; q < p.size(); ++q) {
        Rat below = 0;
        bool has = false;
        for (auto r : p.covered_by(q)) {
            if (!has || f[r] > below) below = f[r];
            has = true;
        }
        g[q] = has ? f[q] - below : f[q];
    }
    return g;
}

/// Inverse transfer: phi^{-1}(g)(p) = max chain sum over chains ending at
/// p. Defined on the nonnegative cone (chain caps are not required).
inline RatVector transfer_inverse(const Poset& p, const RatVector& g)
{
    for (std::size_t q = 0; q < p.size(); ++q)
        if (g[q] < 0) throw NotInChainPolytope();
    RatVector h(p.size());
    for (auto q : p.linear_extension()) {
        Rat best = 0;
        for (auto r : p.covered_by(q))
            if (h[r] > best) best = h[r];
        h[q] = g[q] + best;
    }
    return h;
}

/// The toggle t_q on O(P): replace f(q) by min-above + max-below - f(q),
/// with virtual top value 1 and bottom value 0.
inline RatVector toggle(const Poset& p, RatVector f, std::size_t q)
{
    Rat up = 1;
    for (auto r : p.covers_of(q))
        if (f[r] < up) up = f[r];
    Rat down = 0;
    for (auto r : p.covered_by(q))
        if (f[r] > down) down = f[r];
    f[q] = up + down - f[q];
    return f;
}

/// Piecewise-linear rowmotion on O(P): toggles along a linear extension
/// from top to bottom. The composite is independent of the extension.
inline RatVector rowmotion_order(const Poset& p, RatVector f,
                                 const std::vector<std::size_t>& extension)
{
    if (!in_order_polytope(p, f)) throw NotInPolytope();
    for (std::size_t i = extension.size(); i-- > 0;) f = toggle(p, std::move(f), extension[i]);
    return f;
}

inline RatVector rowmotion_order(const Poset& p, RatVector f)
{
    return rowmotion_order(p, std::move(f), p.linear_extension());
}

/// Rowmotion on C(P), conjugated through the transfer map.
inline RatVector rowmotion_chain(const Poset& p, const RatVector& g)
{
    return transfer(p, rowmotion_order(p, transfer_inverse(p, g)));
}

/// Stanley-Thomas word of g in C([n] x [m]): row sums of g, then 1 minus
/// its column sums.
inline RatVector stanley_thomas_word(std::size_t n, std::size_t m, const RatVector& g)
{
    if (g.size() != n * m) throw NotProductOfChains();
    RatVector w(n + m, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) w[i] += g[i * m + j];
    for (std::size_t j = 0; j < m; ++j) {
        Rat c = 0;
        for (std::size_t i = 0; i < n; ++i) c += g[i * m + j];
        w[n + j] = 1 - c;
    }
    return w;
}

}  // namespace rbp
