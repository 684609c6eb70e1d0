/**
 * Exact Ehrhart (quasi-)polynomial fitting.
 *
 * Polynomials are interpolated through counts at t = 1..d+1 and verified
 * at further points; t = 0 (which must give 1) is kept as an independent
 * sanity check, never as an interpolation node. Quasi-polynomial fitting
 * searches the divisors of the vertex-denominator lcm in increasing order
 * and returns the smallest verified period, so a result below the lcm is
 * a certificate of period collapse.
 */

#pragma once

#include "rbp/rational.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rbp {

struct DegreeOverflow : std::runtime_error {
    DegreeOverflow() : std::runtime_error("points are inconsistent with the requested degree") {}
};
struct NotAPolynomial : std::runtime_error {
    explicit NotAPolynomial(long t)
        : std::runtime_error("verification failed at t = " + std::to_string(t) +
                             ": count function is genuinely quasi-periodic"),
          failed_at(t)
    {
    }
    long failed_at;
};
struct NoPeriodFound : std::runtime_error {
    NoPeriodFound()
        : std::runtime_error("no period up to the denominator lcm verifies; counting bug likely")
    {
    }
};

/// Deterministic evaluator of t -> #(tP cap Z^N) together with the
/// dimension d of P (the fitted degree).
struct CountFunction {
    std::function<Int(long)> eval;
    std::size_t dim = 0;
    std::string counter_name = "generic";
};

/// Coefficients low-to-high.
using Polynomial = RatVector;

inline Rat poly_eval(const Polynomial& coeffs, const Rat& t)
{
    Rat v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
    return v;
}

/// The unique polynomial of degree <= degree through the first degree+1
/// points; any further points are consistency-checked (DegreeOverflow).
inline Polynomial interpolate_polynomial(const std::vector<std::pair<Rat, Rat>>& points,
                                         std::size_t degree)
{
    if (points.size() < degree + 1)
        throw std::invalid_argument("interpolate_polynomial: need degree+1 points");
    // Newton divided differences on the first degree+1 nodes.
    const std::size_t m = degree + 1;
    RatVector xs(m), coef(m);
    for (std::size_t i = 0; i < m; ++i) {
        xs[i] = points[i].first;
        coef[i] = points[i].second;
    }
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m; i-- > level;)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    // Expand Newton form into monomial coefficients.
    Polynomial out(m, Rat(0));
    Polynomial basis{Rat(1)};  // running product (t - x_0)...(t - x_{level-1})
    for (std::size_t level = 0; level < m; ++level) {
        for (std::size_t j = 0; j < basis.size(); ++j) out[j] += coef[level] * basis[j];
        if (level + 1 < m) {
            basis.push_back(Rat(0));
            for (std::size_t j = basis.size(); j-- > 1;)
                basis[j] = basis[j - 1] - xs[level] * basis[j];
            basis[0] = -xs[level] * basis[0];
        }
    }
    for (std::size_t i = m; i < points.size(); ++i)
        if (poly_eval(out, points[i].first) != points[i].second) throw DegreeOverflow();
    return out;
}

struct EhrhartResult {
    Polynomial coeffs;                        // degree d, low-to-high
    bool value_at_zero_ok = false;            // L(0) == 1 sanity report
    std::vector<std::pair<long, Int>> counts; // every count used (fit + verify)
};

/// Fits the degree-d Ehrhart polynomial from t = 1..d+1 and verifies it at
/// t = d+2..d+1+verify_extra. Throws NotAPolynomial if verification fails.
inline EhrhartResult ehrhart_polynomial(const CountFunction& f, std::size_t verify_extra = 3)
{
    const std::size_t d = f.dim;
    EhrhartResult res;
    std::vector<std::pair<Rat, Rat>> pts;
    for (long t = 1; t <= static_cast<long>(d + 1 + verify_extra); ++t) {
        Int c = f.eval(t);
        res.counts.emplace_back(t, c);
        pts.emplace_back(Rat(t), Rat(c));
    }
    try {
        res.coeffs = interpolate_polynomial(pts, d);
    } catch (const DegreeOverflow&) {
        // find the first failing verification point for the error report
        Polynomial fit = interpolate_polynomial({pts.begin(), pts.begin() + d + 1}, d);
        for (std::size_t i = d + 1; i < pts.size(); ++i)
            if (poly_eval(fit, pts[i].first) != pts[i].second)
                throw NotAPolynomial(static_cast<long>(rat_num(pts[i].first)));
        throw;
    }
    res.value_at_zero_ok = poly_eval(res.coeffs, Rat(0)) == 1;
    return res;
}

struct QuasiPolynomial {
    std::size_t period = 0;
    std::vector<Polynomial> constituents;  // indexed by t mod period
    std::vector<std::size_t> failed_periods;  // proper divisors that failed

    Rat eval(long t) const
    {
        const long p = static_cast<long>(period);
        long r = t % p;
        if (r < 0) r += p;
        return poly_eval(constituents[static_cast<std::size_t>(r)], Rat(t));
    }
};

namespace detail {
inline std::vector<std::size_t> divisors_ascending(std::size_t m)
{
    std::vector<std::size_t> d;
    for (std::size_t i = 1; i <= m; ++i)
        if (m % i == 0) d.push_back(i);
    return d;
}
}  // namespace detail

/// Smallest verified period dividing denominator_lcm: for each candidate p
/// (ascending), constituents are fitted per residue class from counts at
/// t = 1..p(d+1) and verified at p further points. A result with
/// period < denominator_lcm demonstrates Ehrhart period collapse.
inline QuasiPolynomial quasi_polynomial(const CountFunction& f, std::size_t denominator_lcm)
{
    if (denominator_lcm == 0) throw std::invalid_argument("quasi_polynomial: lcm must be >= 1");
    const std::size_t d = f.dim;
    std::map<long, Int> cache;
    auto count = [&](long t) -> const Int& {
        auto it = cache.find(t);
        if (it == cache.end()) it = cache.emplace(t, f.eval(t)).first;
        return it->second;
    };

    QuasiPolynomial result;
    for (std::size_t p : detail::divisors_ascending(denominator_lcm)) {
        bool ok = true;
        std::vector<Polynomial> constituents(p);
        for (std::size_t r = 0; r < p && ok; ++r) {
            std::vector<std::pair<Rat, Rat>> pts;
            for (std::size_t j = 0; j <= d; ++j) {
                const long t = static_cast<long>(r == 0 ? (j + 1) * p : r + j * p);
                pts.emplace_back(Rat(t), Rat(count(t)));
            }
            constituents[r] = interpolate_polynomial(pts, d);
        }
        for (long t = static_cast<long>(p * (d + 1) + 1);
             ok && t <= static_cast<long>(p * (d + 1) + p); ++t) {
            const auto& c = constituents[static_cast<std::size_t>(t) % p];
            if (poly_eval(c, Rat(t)) != count(t)) ok = false;
        }
        if (ok) {
            result.period = p;
            result.constituents = std::move(constituents);
            return result;
        }
        result.failed_periods.push_back(p);
    }
    throw NoPeriodFound();
}

}  // namespace rbp
