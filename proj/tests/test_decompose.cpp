#include "support.hpp"

#include <woody/decompose.hpp>

#include <doctest.h>

using namespace woody;
using namespace woody::testing;

TEST_CASE("arboricity of small families")
{
    CHECK(arboricity(families::path(6)).k == 1);
    CHECK(arboricity(families::star(5)).k == 1);
    CHECK(arboricity(families::cycle(7)).k == 2);
    CHECK(arboricity(families::complete(4)).k == 2);
    CHECK(arboricity(families::complete(5)).k == 3);
    CHECK(arboricity(families::complete(8)).k == 4);
    CHECK(arboricity(families::complete_bipartite(3, 3)).k == 2);
    CHECK(arboricity(families::petersen()).k == 2);
    CHECK(arboricity(families::hypercube(4)).k == 3);

    auto empty = arboricity(Graph(4, {}));
    CHECK(empty.k == 0);
    CHECK(empty.decomposition.assignment.empty());
}

TEST_CASE("decompositions are valid and carry tight density certificates")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 5 + trial % 12, 0.15 + 0.05 * (trial % 12));
        if (g.m() == 0)
            continue;
        auto r = arboricity(g);
        CAPTURE(encode_graph6(g));
        REQUIRE(r.decomposition.is_valid(g));
        CHECK(r.decomposition.forests == r.k);
        REQUIRE(r.lower_bound);
        CHECK(r.lower_bound->reverifies());
        CHECK(r.lower_bound->density.ceil() == r.k);
    }
}

TEST_CASE("arboricity equals the ceiling of the brute-force density")
{
    for (auto & g : load_corpus("connected_n1-8.g6", 7)) {
        if (g.m() == 0)
            continue;
        auto cert = fractional_arboricity_bruteforce(g);
        REQUIRE(cert.reverifies());
        REQUIRE(arboricity(g).k == cert.density.ceil());
    }
}

TEST_CASE("brute-force density examples")
{
    auto k4 = fractional_arboricity_bruteforce(families::complete(4));
    CHECK(k4.density == Density{2, 1});
    CHECK(k4.subgraph.vertex_count() == 4);

    auto c5 = fractional_arboricity_bruteforce(families::cycle(5));
    CHECK(c5.density == Density{5, 4});
    CHECK(c5.density.num == 5);
    CHECK(c5.density.den == 4);

    for (auto & g : load_corpus("planar_connected_n1-8.g6")) {
        if (g.m() == 0)
            continue;
        REQUIRE(fractional_arboricity_bruteforce(g).density <= Density{3, 1});
    }

    CHECK_THROWS_AS(fractional_arboricity_bruteforce(families::path(25)), SizeGuardError);
}

TEST_CASE("density arithmetic is exact")
{
    CHECK(Density{6, 3} == Density{2, 1});
    CHECK(Density{7, 3} > Density{2, 1});
    CHECK(Density{7, 3}.ceil() == 3);
    CHECK(Density{6, 3}.ceil() == 2);
    CHECK(Density{1, 3} < Density{1, 2});
}

TEST_CASE("deleting an edge never raises the arboricity")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 10, 0.5);
        if (g.m() == 0)
            continue;
        int k = arboricity(g).k;
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
        CHECK(arboricity(Graph(g.n(), edges)).k <= k);
    }
}

TEST_CASE("two-forest decomposition")
{
    for (auto g : {families::cycle(4), families::complete(4), families::hypercube(3), families::petersen()}) {
        auto d = two_forest_decomposition(g);
        CHECK(d.forests == 2);
        CHECK(d.is_valid(g));
    }
    auto k4 = two_forest_decomposition(families::complete(4));
    CHECK(std::count(k4.assignment.begin(), k4.assignment.end(), 0) == 3);

    auto k5 = families::complete(5);
    try {
        two_forest_decomposition(k5);
        FAIL("K5 accepted");
    }
    catch (const ArboricityTooLarge & e) {
        CHECK(e.certificate.reverifies());
        CHECK(e.certificate.density == Density{5, 2});
    }
}

TEST_CASE("forest decomposition validity check")
{
    auto c4 = families::cycle(4);
    CHECK(ForestDecomposition{2, {0, 1, 0, 1}}.is_valid(c4));
    CHECK(! ForestDecomposition{1, {0, 0, 0, 0}}.is_valid(c4));
    CHECK(! ForestDecomposition{2, {0, 1, 0}}.is_valid(c4));
    CHECK(! ForestDecomposition{2, {0, 1, 2, 1}}.is_valid(c4));
}
