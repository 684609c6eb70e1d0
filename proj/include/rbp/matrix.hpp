/**
 * Square rational matrices and margin (row/column-sum) data.
 *
 * Matrices are stored row-major and indexed (row, column), 0-based.
 * Flattening to a coordinate vector always uses row-major order; every
 * polytope over matrix space in this library shares that convention.
 */

#pragma once

#include "rbp/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rbp {

class RatMatrix {
public:
    RatMatrix() : n_(0) {}
    explicit RatMatrix(std::size_t n) : n_(n), a_(n * n, Rat(0)) {}
    RatMatrix(std::size_t n, RatVector flat) : n_(n), a_(std::move(flat))
    {
        if (a_.size() != n_ * n_) throw std::invalid_argument("RatMatrix: bad flat size");
    }
    /// From nested initializer-style rows.
    explicit RatMatrix(const std::vector<RatVector>& rows) : n_(rows.size())
    {
        a_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw std::invalid_argument("RatMatrix: not square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    std::size_t n() const { return n_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    const RatVector& flat() const { return a_; }

    bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }
    bool operator<(const RatMatrix& o) const
    {
        if (n_ != o.n_) return n_ < o.n_;
        return std::lexicographical_compare(a_.begin(), a_.end(), o.a_.begin(), o.a_.end());
    }

    RatMatrix& operator*=(const Rat& c)
    {
        for (auto& x : a_) x *= c;
        return *this;
    }
    friend RatMatrix operator*(const Rat& c, RatMatrix m)
    {
        m *= c;
        return m;
    }

    Rat row_sum(std::size_t i) const
    {
        Rat s = 0;
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
        return s;
    }
    Rat col_sum(std::size_t j) const
    {
        Rat s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, j);
        return s;
    }

    /// Sum along the diagonal j - i = off, off in [-(n-1), n-1].
    Rat diag_sum(long off) const
    {
        Rat s = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            long j = static_cast<long>(i) + off;
            if (j >= 0 && j < static_cast<long>(n_)) s += (*this)(i, static_cast<std::size_t>(j));
        }
        return s;
    }

    /// All 2n-1 diagonal sums ordered off = n-1 (top right) down to -(n-1).
    RatVector diag_sums() const
    {
        RatVector d;
        for (long off = static_cast<long>(n_) - 1; off >= -(static_cast<long>(n_) - 1); --off)
            d.push_back(diag_sum(off));
        return d;
    }

    bool is_integral() const
    {
        for (const auto& x : a_)
            if (!is_integer(x)) return false;
        return true;
    }

    bool is_nonnegative() const
    {
        for (const auto& x : a_)
            if (x < 0) return false;
        return true;
    }

    /// Weakly increasing along rows and down columns.
    bool is_monotone() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j + 1 < n_; ++j)
                if ((*this)(i, j) > (*this)(i, j + 1)) return false;
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i + 1 < n_; ++i)
                if ((*this)(i, j) > (*this)(i + 1, j)) return false;
        return true;
    }

    Int denominator_lcm() const { return rbp::denominator_lcm(a_); }

    std::string str() const
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) os << ' ';
                os << (*this)(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.str(); }

private:
    std::size_t n_;
    RatVector a_;
};

inline RatMatrix identity_matrix(std::size_t n)
{
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

/// Permutation matrix of w given in one-line notation (w[i] = image of i, 0-based).
inline RatMatrix permutation_matrix(const std::vector<std::size_t>& w)
{
    RatMatrix m(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) m(i, w[i]) = 1;
    return m;
}

/// The reverse permutation matrix X_{w0} (anti-diagonal).
inline RatMatrix antidiagonal_matrix(std::size_t n)
{
    RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
    return m;
}

/// Row and column sums for transportation polytopes. Sizes must match.
struct Margins {
    std::vector<Int> alpha;  // row sums
    std::vector<Int> beta;   // column sums

    std::size_t n() const { return alpha.size(); }

    Int total() const
    {
        Int s = 0;
        for (const auto& a : alpha) s += a;
        return s;
    }

    Int max_margin() const
    {
        Int r = 0;
        for (const auto& a : alpha) r = std::max(r, a);
        for (const auto& b : beta) r = std::max(r, b);
        return r;
    }

    bool balanced() const
    {
        if (alpha.size() != beta.size()) return false;
        Int sa = 0, sb = 0;
        for (const auto& a : alpha) sa += a;
        for (const auto& b : beta) sb += b;
        return sa == sb;
    }

    static Margins uniform(std::size_t n)
    {
        return Margins{std::vector<Int>(n, Int(1)), std::vector<Int>(n, Int(1))};
    }
};

}  // namespace rbp
