#include "christoffel/residue.hpp"

#include "christoffel/rational.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <random>

using namespace christoffel;
using testing::random_coprime_vector;
using testing::random_normals;
using testing::random_point;
using testing::vec;

TEST_CASE("checked arithmetic reports overflow instead of wrapping") {
    constexpr Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big / 2, 3), std::overflow_error);
    CHECK(checked_add(big - 1, 1) == big);
    CHECK_THROWS_AS(Rational(1, big) + Rational(1, big - 2), std::overflow_error);
    CHECK_THROWS_AS(residue(NormalData(testing::vec({big / 2, big / 2 + 1})),
                            testing::vec({3, 3})),
                    std::overflow_error);
}

TEST_CASE("normal data validation") {
    NormalData nd(vec({2, 5}));
    CHECK(nd.s() == 7);
    CHECK(nd.omega() == 7);  // width defaults to the sum

    NormalData wide(vec({15, 11, 10}), 18);
    CHECK(wide.s() == 36);
    CHECK(wide.omega() == 18);

    CHECK_THROWS_AS(NormalData(vec({2, 4})), std::invalid_argument);       // gcd 2
    CHECK_THROWS_AS(NormalData(vec({5})), std::invalid_argument);         // d < 2
    CHECK_THROWS_AS(NormalData(vec({2, 0, 3})), std::invalid_argument);  // nonpositive entry
    CHECK_THROWS_AS(NormalData(vec({2, 5}), 3), std::invalid_argument);    // 3 does not divide 7
    CHECK_THROWS_AS(NormalData(vec({1, 1}), 1), std::invalid_argument);    // s/w == d
    CHECK_THROWS_AS(NormalData(vec({19, 11, 6}), 18), std::invalid_argument);  // entry >= width
}

TEST_CASE("residue values and homomorphism") {
    NormalData nd25(vec({2, 5}));
    CHECK(residue(nd25, vec({1, 1})) == 0);
    CHECK(residue(nd25, vec({1, 0})) == 2);
    CHECK(residue(nd25, vec({-2, 1})) == 1);

    NormalData wide(vec({15, 11, 10}), 18);
    CHECK(residue(wide, vec({1, 0, 0})) == 15);

    CHECK_THROWS_AS(residue(nd25, vec({1, 2, 3})), std::invalid_argument);

    std::mt19937_64 rng(101);
    auto nds = random_normals(rng, 8, 4, 40);
    for (const auto& nd : nds) {
        for (int it = 0; it < 125; ++it) {
            IVec x = random_point(rng, nd.dim(), 50);
            IVec y = random_point(rng, nd.dim(), 50);
            CHECK(residue(nd, x + y) == (residue(nd, x) + residue(nd, y)) % nd.omega());
        }
    }
}

TEST_CASE("edge membership: interval test equals the defining comparison") {
    NormalData nd(vec({2, 3, 5}));
    CHECK(edge_in_graph(nd, Edge{vec({0, 0, 0}), 0}));
    CHECK_FALSE(edge_in_graph(nd, Edge{vec({-1, 0, 0}), 0}));

    // Oracle for the frozen value below: membership is by definition a strict
    // increase of the residue along the edge.
    auto increases = [](const NormalData& n, const Edge& e) {
        return residue(n, e.tail) < residue(n, e.head());
    };
    NormalData nd25(vec({2, 5}));
    Edge frozen{vec({3, 0}), 1};
    CHECK_FALSE(increases(nd25, frozen));  // residue 6, not in [0, 1]
    CHECK_FALSE(edge_in_graph(nd25, frozen));

    std::mt19937_64 rng(102);
    auto nds = random_normals(rng, 10, 4, 40);
    for (const auto& n : nds) {
        for (int it = 0; it < 100; ++it) {
            Edge e{random_point(rng, n.dim(), 40),
                   std::uniform_int_distribution<Index>(0, n.dim() - 1)(rng)};
            CHECK(edge_in_graph(n, e) == increases(n, e));
            // Dichotomy: either the edge is present or the tail residue lies
            // in the top interval [omega - a_i, omega - 1].
            Int r = residue(n, e.tail);
            CHECK(edge_in_graph(n, e) != (r >= n.omega() - n.a(e.dir)));
        }
    }
}

TEST_CASE("edge membership is invariant under kernel translations") {
    std::mt19937_64 rng(103);
    auto nds = random_normals(rng, 8, 4, 30);
    for (const auto& nd : nds) {
        for (int it = 0; it < 50; ++it) {
            Edge e{random_point(rng, nd.dim(), 20),
                   std::uniform_int_distribution<Index>(0, nd.dim() - 1)(rng)};
            // Random kernel element: omega * e_j plus a multiple of the
            // all-ones vector scaled by s/omega.
            IVec k = IVec::Zero(nd.dim());
            k[std::uniform_int_distribution<Index>(0, nd.dim() - 1)(rng)] = nd.omega();
            k += IVec::Ones(nd.dim()) * std::uniform_int_distribution<Int>(-3, 3)(rng);
            REQUIRE(residue(nd, k) == 0);
            CHECK(edge_in_graph(nd, e) == edge_in_graph(nd, Edge{e.tail + k, e.dir}));
        }
    }
}

TEST_CASE("sigma-path misses exactly one edge") {
    NormalData nd235(vec({2, 3, 5}));
    CHECK(missing_edge(nd235, SigmaPath{vec({0, 0, 0}), {0, 1, 2}}) == 2);
    NormalData nd25(vec({2, 5}));
    CHECK(missing_edge(nd25, SigmaPath{vec({0, 0}), {0, 1}}) == 1);

    CHECK_THROWS_AS(missing_edge(NormalData(vec({15, 11, 10}), 18),
                                 SigmaPath{vec({0, 0, 0}), {0, 1, 2}}),
                    std::invalid_argument);

    std::mt19937_64 rng(104);
    for (int it = 0; it < 500; ++it) {
        Index d = std::uniform_int_distribution<Index>(2, 5)(rng);
        NormalData nd(random_coprime_vector(rng, d, 50));
        SigmaPath path{random_point(rng, d, 30), {}};
        path.perm.resize(d);
        std::iota(path.perm.begin(), path.perm.end(), Index{0});
        std::shuffle(path.perm.begin(), path.perm.end(), rng);

        // Brute-force oracle: test all d edges of the path.
        auto edges = sigma_path_edges(path);
        std::vector<Index> missing;
        for (Index k = 0; k < d; ++k)
            if (!edge_in_graph(nd, edges[k])) missing.push_back(k);
        REQUIRE(missing.size() == 1);
        CHECK(missing_edge(nd, path) == missing[0]);

        // A start with residue s - a_{sigma(0)} always misses the first edge.
        Int want = nd.s() - nd.a(path.perm[0]);
        IVec start0 = solve_unit_translation(nd) * want;
        REQUIRE(residue(nd, start0) == want);
        CHECK(missing_edge(nd, SigmaPath{start0, path.perm}) == 0);
    }
}

TEST_CASE("hypercube edges") {
    auto square = hypercube_edges(vec({0, 0}), {0, 1});
    REQUIRE(square.size() == 4);
    CHECK(square[0] == Edge{vec({0, 0}), 0});
    CHECK(square[1] == Edge{vec({0, 0}), 1});
    CHECK(square[2] == Edge{vec({0, 1}), 0});
    CHECK(square[3] == Edge{vec({1, 0}), 1});

    CHECK(hypercube_edges(vec({0, 0, 0}), {0}).size() == 1);
    CHECK(hypercube_edges(vec({4, -1, 7}), {0, 1, 2}).size() == 12);
    CHECK_THROWS_AS(hypercube_edges(vec({0, 0}), {}), std::invalid_argument);
}

TEST_CASE("a nonedge forces the orthogonal hypercube") {
    std::mt19937_64 rng(105);
    int found = 0;
    while (found < 500) {
        Index d = std::uniform_int_distribution<Index>(2, 5)(rng);
        NormalData nd(random_coprime_vector(rng, d, 40));
        Edge e{random_point(rng, d, 25), std::uniform_int_distribution<Index>(0, d - 1)(rng)};
        if (edge_in_graph(nd, e)) continue;
        ++found;
        std::vector<Index> others;
        for (Index j = 0; j < d; ++j)
            if (j != e.dir) others.push_back(j);
        for (const Edge& h : hypercube_edges(e.head(), others)) CHECK(edge_in_graph(nd, h));
    }
}

TEST_CASE("unit translation solve") {
    CHECK(solve_unit_translation(NormalData(vec({1, 1}))) == vec({1, 0}));

    // Oracle: extended gcd of 2 and 5 gives -2*2 + 1*5 == 1.
    ExtGcd e = ext_gcd(2, 5);
    REQUIRE(e.g == 1);
    REQUIRE(e.x * 2 + e.y * 5 == 1);
    IVec t25 = solve_unit_translation(NormalData(vec({2, 5})));
    CHECK(t25 == vec({-2, 1}));

    NormalData wide(vec({3, 7, 8}), 18);
    IVec t = solve_unit_translation(wide);
    CHECK(residue(wide, t) == 1);
    CHECK(residue(wide, vec({0, -1, 1})) == 1);  // e_3 - e_2 is an equally valid witness

    std::mt19937_64 rng(106);
    for (const auto& nd : random_normals(rng, 30, 5, 40))
        CHECK(residue(nd, solve_unit_translation(nd)) == 1);
}
