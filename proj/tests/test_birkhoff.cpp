#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace rbp;
using namespace testsupport;

TEST_CASE("monotone path counts and ordering")
{
    REQUIRE(monotone_paths(2).size() == 2);
    REQUIRE(monotone_paths(3).size() == 6);
    REQUIRE(monotone_paths(5).size() == 70);
    REQUIRE(monotone_paths(1).size() == 1);

    auto paths = monotone_paths(2);
    MonotonePath right_first{{0, 0}, {0, 1}, {1, 1}};
    MonotonePath down_first{{0, 0}, {1, 0}, {1, 1}};
    REQUIRE(paths[0] == right_first);
    REQUIRE(paths[1] == down_first);
    REQUIRE(std::is_sorted(paths.begin(), paths.end()));
}

TEST_CASE("restricted Birkhoff constructors")
{
    auto b33 = build_restricted_birkhoff(3, 3);
    REQUIRE(b33.inequalities().size() == 9 + 6);
    REQUIRE(b33.equalities().size() == 6);
    REQUIRE(lattice_points(b33).size() == 6);

    auto b32 = build_restricted_birkhoff(3, 2);
    RatMatrix half(std::vector<RatVector>{{Rat(1, 2), Rat(0), Rat(1, 2)},
                                          {Rat(0), Rat(1), Rat(0)},
                                          {Rat(1, 2), Rat(0), Rat(1, 2)}});
    REQUIRE(b32.contains(half.flat()));

    auto pts = lattice_points(build_restricted_birkhoff(3, 1));
    REQUIRE(pts.size() == 1);
    RatVector w0(pts[0].begin(), pts[0].end());
    REQUIRE(w0 == antidiagonal_matrix(3).flat());

    REQUIRE_THROWS_AS(build_restricted_birkhoff(3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(build_restricted_birkhoff(3, 4), std::invalid_argument);
}

TEST_CASE("transportation polytopes")
{
    // Uniform margins recover B_n^k.
    auto a = vertices(build_transportation(Margins::uniform(3), Int(2))).vertices;
    auto b = vertices(build_restricted_birkhoff(3, 2)).vertices;
    REQUIRE(a == b);

    // Margins (2,0),(2,0) force a single matrix.
    Margins forced{{Int(2), Int(0)}, {Int(2), Int(0)}};
    auto pts = lattice_points(build_transportation(forced, Int(2)));
    REQUIRE(pts.size() == 1);
    REQUIRE(pts[0] == IntVector{Int(2), Int(0), Int(0), Int(0)});

    REQUIRE(count_lattice_points(build_transportation(Margins::uniform(2), Int(2))) == 2);

    Margins bad{{Int(1), Int(2)}, {Int(1), Int(1)}};
    REQUIRE_THROWS_AS(build_transportation(bad, Int(2)), InfeasibleMargins);
}

TEST_CASE("direct counter matches combinatorial oracles")
{
    REQUIRE(count_lattice_points_direct(BirkhoffSpec{3, 2}, Int(1)) == 5);
    // 123-avoiding permutations of S_4: Catalan(4).
    const auto s4 = perms_with_lis_at_most(4, 2);
    REQUIRE(s4.size() == 14);
    REQUIRE(count_lattice_points_direct(BirkhoffSpec{4, 2}, Int(1)) == Int(s4.size()));
    // Permutations of S_5 with no increasing subsequence of length 4,
    // cross-checked against the published Ehrhart polynomial at t = 1.
    const auto s5 = perms_with_lis_at_most(5, 3);
    REQUIRE(s5.size() == 103);
    REQUIRE(poly_eval(b53_ehrhart_reference(), Rat(1)) == 103);
    REQUIRE(count_lattice_points_direct(BirkhoffSpec{5, 3}, Int(1)) == Int(s5.size()));
}

TEST_CASE("direct counter respects its node budget")
{
    REQUIRE_THROWS_AS(count_lattice_points_direct(BirkhoffSpec{4, 4}, Int(3), 10),
                      BudgetExceeded);
}

TEST_CASE("max chain sum")
{
    REQUIRE(max_chain_sum(RatMatrix(3)) == 0);

    RatMatrix half(std::vector<RatVector>{{Rat(1, 2), Rat(0), Rat(1, 2)},
                                          {Rat(0), Rat(1), Rat(0)},
                                          {Rat(1, 2), Rat(0), Rat(1, 2)}});
    REQUIRE(max_chain_sum_bruteforce(half) == 2);
    REQUIRE(max_chain_sum(half) == 2);

    REQUIRE(max_chain_sum(antidiagonal_matrix(3)) == 1);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto x = random_rat_matrix(rng, 2 + i % 4);
        REQUIRE(max_chain_sum(x) == max_chain_sum_bruteforce(x));
    }
}

TEST_CASE("remark 6.2 family")
{
    auto x = remark62_matrix(2);
    REQUIRE(x.n() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        REQUIRE(x(i, i) == Rat(4, 5));
        REQUIRE(x(i, (i + 2) % 5) == Rat(1, 5));
        REQUIRE(x.row_sum(i) == 1);
        REQUIRE(x.col_sum(i) == 1);
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        auto m = remark62_matrix(n);
        auto p = build_restricted_birkhoff(2 * n + 1, static_cast<long>(2 * n));
        REQUIRE(max_chain_sum(m) <= Rat(Int(2 * n)));
        REQUIRE(p.contains(m.flat()));
    }
    REQUIRE(is_vertex(build_restricted_birkhoff(7, 6), remark62_matrix(3).flat()));
}

TEST_CASE("lattice counts weakly increase in k")
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (long t = 1; t <= 3; ++t) {
            Int prev = -1;
            for (long k = 1; k <= static_cast<long>(n); ++k) {
                Int c = count_lattice_points_direct(BirkhoffSpec{n, k}, Int(t));
                REQUIRE(c >= prev);
                prev = c;
            }
        }
}

TEST_CASE("integral vertices are exactly the pattern-avoiding permutation matrices")
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (long k = 1; k <= static_cast<long>(n); ++k) {
            auto v = vertices(build_restricted_birkhoff(n, k));
            std::set<RatVector> integral;
            for (const auto& vert : v.vertices) {
                bool ok = true;
                for (const auto& c : vert) ok = ok && is_integer(c);
                if (ok) integral.insert(vert);
            }
            std::set<RatVector> expected;
            for (const auto& w : perms_with_lis_at_most(n, static_cast<std::size_t>(k)))
                expected.insert(permutation_matrix(w).flat());
            REQUIRE(integral == expected);
        }
}

TEST_CASE("random convex combinations satisfy the chain cap")
{
    std::mt19937_64 rng(11);
    for (auto [n, k] : {std::pair<std::size_t, long>{3, 2}, {4, 3}}) {
        auto v = vertices(build_restricted_birkhoff(n, k));
        for (int trial = 0; trial < 40; ++trial) {
            RatVector x(n * n, Rat(0));
            Rat total = 0;
            std::vector<Rat> weights;
            for (std::size_t i = 0; i < v.vertices.size(); ++i) {
                weights.push_back(Rat(static_cast<long>(rng() % 5)));
                total += weights.back();
            }
            if (total == 0) continue;
            for (std::size_t i = 0; i < v.vertices.size(); ++i)
                for (std::size_t j = 0; j < x.size(); ++j)
                    x[j] += weights[i] / total * v.vertices[i][j];
            REQUIRE(max_chain_sum(RatMatrix(n, x)) <= Rat(Int(k)));
        }
    }
}
