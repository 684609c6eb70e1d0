#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <iostream>

using namespace rbp;
using namespace testsupport;

namespace {

CountFunction birkhoff_counter(std::size_t n, long k)
{
    const std::size_t d = k == 1 ? 0 : n * n - 2 * n + 1;
    return CountFunction{
        [n, k](long t) { return count_lattice_points_direct(BirkhoffSpec{n, k}, Int(t)); }, d,
        "direct DFS"};
}

HPolytope segment(const Rat& lo, const Rat& hi)
{
    HPolytope p(1);
    p.add_lower_bound(0, lo);
    p.add_upper_bound(0, hi);
    return p;
}

CountFunction segment_counter(const Rat& lo, const Rat& hi)
{
    return CountFunction{[=](long t) { return count_lattice_points(dilate(segment(lo, hi), Int(t))); },
                         1, "generic"};
}

}  // namespace

TEST_CASE("exact interpolation")
{
    // B_3^2 counts at t = 1..5 pin down the quartic exactly.
    std::vector<std::pair<Rat, Rat>> pts;
    for (long t = 1; t <= 5; ++t)
        pts.emplace_back(Rat(t), Rat(count_lattice_points_direct(BirkhoffSpec{3, 2}, Int(t))));
    REQUIRE(interpolate_polynomial(pts, 4) == b32_ehrhart_reference());

    // A single lattice point: the constant polynomial 1.
    std::vector<std::pair<Rat, Rat>> ones{{Rat(1), Rat(1)}, {Rat(2), Rat(1)}};
    REQUIRE(interpolate_polynomial(ones, 0) == RatVector{Rat(1)});

    // Inconsistent extra point.
    std::vector<std::pair<Rat, Rat>> bad{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(3), Rat(5)}};
    REQUIRE_THROWS_AS(interpolate_polynomial(bad, 1), DegreeOverflow);

    // Nodes starting at t = 0 give the same polynomial.
    std::vector<std::pair<Rat, Rat>> with_zero{{Rat(0), Rat(1)}};
    for (auto& p : pts) with_zero.push_back(p);
    REQUIRE(interpolate_polynomial(with_zero, 4) == b32_ehrhart_reference());
}

TEST_CASE("ehrhart polynomial of B_3^2 and of the point")
{
    auto res = ehrhart_polynomial(birkhoff_counter(3, 2));
    REQUIRE(res.coeffs == b32_ehrhart_reference());
    REQUIRE(res.value_at_zero_ok);
    // 2*C(t+3,4) + C(t+2,2) is the same polynomial.
    for (long t = 1; t <= 6; ++t) {
        const Rat tt(t);
        Rat binom = 2 * (tt + 3) * (tt + 2) * (tt + 1) * tt / 24 + (tt + 2) * (tt + 1) / 2;
        REQUIRE(poly_eval(res.coeffs, tt) == binom);
    }

    auto point = ehrhart_polynomial(birkhoff_counter(4, 1));
    REQUIRE(point.coeffs == RatVector{Rat(1)});
}

TEST_CASE("non-polynomial counting is detected")
{
    REQUIRE_THROWS_AS(ehrhart_polynomial(segment_counter(Rat(0), Rat(1, 2))), NotAPolynomial);
}

TEST_CASE("quasi-polynomial of the half-open segment has period 2")
{
    auto qp = quasi_polynomial(segment_counter(Rat(0), Rat(1, 2)), 2);
    REQUIRE(qp.period == 2);
    REQUIRE(qp.failed_periods == std::vector<std::size_t>{1});
    for (long t = 1; t <= 12; ++t) REQUIRE(qp.eval(t) == Rat(t / 2 + 1));
}

TEST_CASE("integral segment: period 1, polynomial t + 1")
{
    auto qp = quasi_polynomial(segment_counter(Rat(0), Rat(1)), 1);
    REQUIRE(qp.period == 1);
    REQUIRE(qp.constituents[0] == RatVector{Rat(1), Rat(1)});
}

TEST_CASE("period collapse of M_3^3 and B_3^2")
{
    CountFunction m33{[](long t) { return count_M_diagonal_DP(3, 3, Int(t)); }, 4, "diagonal DP"};
    auto qp = quasi_polynomial(m33, 2);
    REQUIRE(qp.period == 1);
    REQUIRE(qp.failed_periods.empty());
    // The polynomial is the classical 3x3 magic-square count: cross-check
    // against direct DFS enumeration of t*B_3.
    for (long t = 1; t <= 10; ++t)
        REQUIRE(qp.eval(t) == Rat(count_lattice_points_direct(BirkhoffSpec{3, 3}, Int(t))));

    auto qb = quasi_polynomial(birkhoff_counter(3, 2), 2);
    REQUIRE(qb.period == 1);
    REQUIRE(qb.constituents[0] == b32_ehrhart_reference());
}

TEST_CASE("fitted polynomials have zero residual, full degree, positive leading coefficient")
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (long k = 2; k <= static_cast<long>(n); ++k) {
            CountFunction f{
                [n, k](long t) { return count_M_diagonal_DP(n, k, Int(t)); },
                n * n - 2 * n + 1, "diagonal DP"};
            auto res = ehrhart_polynomial(f);
            REQUIRE(res.coeffs.size() == n * n - 2 * n + 2);
            REQUIRE(res.coeffs.back() > 0);
            REQUIRE(affine_dim(build_restricted_birkhoff(n, k)) == n * n - 2 * n + 1);
            for (const auto& [t, c] : res.counts) REQUIRE(poly_eval(res.coeffs, Rat(t)) == Rat(c));
        }
}

TEST_CASE("reciprocity spot check for B_3^2 (reported)")
{
    auto coeffs = b32_ehrhart_reference();
    const Rat lm1 = poly_eval(coeffs, Rat(-1));
    const auto interior = lattice_points(build_restricted_birkhoff(3, 2), true).size();
    std::cout << "[report] (-1)^4 L(B_3^2;-1) = " << lm1 << ", interior lattice points = "
              << interior << "\n";
}
