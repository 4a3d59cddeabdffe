#include "support.hpp"

#include <woody/construct.hpp>
#include <woody/decompose.hpp>
#include <woody/exact.hpp>

#include <doctest.h>

using namespace woody;
using namespace woody::testing;

TEST_CASE("zeta of small graphs")
{
    CHECK(zeta_exact(families::path(6)).value() == 1);
    CHECK(zeta_exact(families::star(4)).value() == 1);
    CHECK(zeta_exact(families::complete(3)).value() == 3);
    CHECK(zeta_exact(families::cycle(5)).value() == 2);
    CHECK(zeta_exact(families::cycle(4)).value() == 2);
    CHECK(zeta_exact(families::complete(4)).value() == 3);
    CHECK(zeta_exact(families::complete(5)).value() == 5);
    CHECK(zeta_exact(families::complete(6)).value() == 5);
    CHECK(zeta_exact(Graph(4, {})).value() == 0);
}

TEST_CASE("zeta certificates are verified and canonical")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, 8, 0.2 + 0.01 * trial);
        auto r = zeta_exact(g);
        REQUIRE(r.exact);
        CHECK(r.lower == r.upper);
        CHECK(is_strongly_woody(g, r.certificate));
        CHECK(r.certificate.distinct_colors() == r.value());
        CHECK(r.certificate.is_normalized());
        CHECK(r.value() >= zeta_lower_bound(g));
        if (g.m() > 0)
            CHECK(r.value() >= arboricity(g).k);
    }
}

TEST_CASE("pruning modes agree with leaf-only search on small graphs")
{
    int compared = 0;
    for (auto & g : load_corpus("connected_n1-8.g6", 6)) {
        if (g.m() > 9)
            continue;
        auto fast = zeta_exact(g, {}, ZetaPruning::incremental);
        auto scratch = zeta_exact(g, {}, ZetaPruning::scratch);
        auto oracle = zeta_exact(g, {}, ZetaPruning::leaf_only);
        REQUIRE(fast.exact);
        REQUIRE(oracle.exact);
        REQUIRE(fast.value() == oracle.value());
        REQUIRE(scratch.value() == oracle.value());
        ++compared;
    }
    CHECK(compared > 100);
}

TEST_CASE("the octahedron is a planar graph with zeta = 4")
{
    auto octahedron = parse_graph6("E]~o");
    CHECK(octahedron.m() == 12);
    CHECK(euler_planar_sanity(octahedron, false));
    CHECK(arboricity(octahedron).k == 3);
    for (auto mode : {ZetaPruning::incremental, ZetaPruning::scratch, ZetaPruning::leaf_only})
        CHECK(zeta_exact(octahedron, {}, mode).value() == 4);
    CHECK(strongly_woody_coloring_exists(octahedron, 3, {}, ZetaPruning::leaf_only).status == Feasibility::infeasible);
}

TEST_CASE("feasibility is monotone in k near zeta")
{
    for (auto g : {families::complete(4), families::petersen(), families::cycle(7), families::complete(5)}) {
        int z = zeta_exact(g).value();
        CHECK(strongly_woody_coloring_exists(g, z).status == Feasibility::found);
        CHECK(strongly_woody_coloring_exists(g, z + 1).status == Feasibility::found);
        CHECK(strongly_woody_coloring_exists(g, z - 1).status == Feasibility::infeasible);
    }
}

TEST_CASE("zeta is invariant under relabeling")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 8, 0.45);
        int z = zeta_exact(g).value();
        for (int rep = 0; rep < 3; ++rep) {
            auto perm = random_permutation(rng, g.n());
            auto h = relabel(g, perm);
            REQUIRE(zeta_exact(h).value() == z);
        }
    }
}

TEST_CASE("budget exhaustion reports bounds")
{
    auto k10 = families::complete(10);
    auto r = zeta_exact(k10, Budget{100, std::nullopt});
    CHECK(! r.exact);
    CHECK(r.lower < r.upper);
    CHECK(r.lower >= 5);
    CHECK(is_strongly_woody(k10, r.certificate));
    CHECK(r.certificate.distinct_colors() == r.upper);

    auto timed = zeta_exact(families::complete(11), Budget{std::nullopt, 0.05});
    CHECK(! timed.exact);

    auto f = strongly_woody_coloring_exists(k10, 9, Budget{10, std::nullopt});
    CHECK(f.status == Feasibility::exhausted);
}

TEST_CASE("acyclic chromatic number")
{
    CHECK(acyclic_chromatic_exact(families::complete(4)).value() == 4);
    CHECK(acyclic_chromatic_exact(families::cycle(4)).value() == 3);
    CHECK(acyclic_chromatic_exact(families::cycle(5)).value() == 3);
    CHECK(acyclic_chromatic_exact(families::path(6)).value() == 2);
    CHECK(acyclic_chromatic_exact(families::star(3)).value() == 2);
    CHECK(acyclic_chromatic_exact(Graph(1, {})).value() == 1);

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 8, 0.35);
        auto r = acyclic_chromatic_exact(g);
        REQUIRE(r.exact);
        CHECK(is_acyclic_vertex(g, r.certificate));
        CHECK(r.certificate.distinct_colors() == r.value());
    }
}

namespace
{
    auto acyclic_by_enumeration(const Graph & g) -> int
    {
        for (int k = 1; k < g.n(); ++k) {
            std::vector<Color> f(g.n(), 0);
            while (true) {
                if (is_acyclic_vertex(g, VertexColoring(f)).ok)
                    return k;
                int i = 0;
                while (i < g.n() && ++f[i] == k)
                    f[i++] = 0;
                if (i == g.n())
                    break;
            }
        }
        return g.n();
    }
}

TEST_CASE("acyclic chromatic number matches exhaustive search on tiny graphs")
{
    for (auto & g : load_corpus("connected_n1-8.g6", 5))
        REQUIRE(acyclic_chromatic_exact(g).value() == acyclic_by_enumeration(g));
    for (auto g : {families::petersen(), families::hypercube(3), families::complete_bipartite(3, 4)})
        CHECK(acyclic_chromatic_exact(g).value() == acyclic_by_enumeration(g));
}

TEST_CASE("chromatic number and index")
{
    CHECK(chromatic_exact(families::complete(4)).value() == 4);
    CHECK(chromatic_exact(families::cycle(5)).value() == 3);
    CHECK(chromatic_exact(families::cycle(6)).value() == 2);
    CHECK(chromatic_exact(families::petersen()).value() == 3);
    CHECK(chromatic_index_exact(families::complete(4)).value() == 3);
    CHECK(chromatic_index_exact(families::complete(5)).value() == 5);
    CHECK(chromatic_index_exact(families::complete(6)).value() == 5);
    CHECK(chromatic_index_exact(families::petersen()).value() == 4);
    CHECK(chromatic_index_exact(families::star(5)).value() == 5);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 9, 0.4);
        auto chi = chromatic_exact(g);
        CHECK(is_proper_vertex(g, chi.certificate));
        CHECK(chi.value() <= degeneracy_greedy_vertex_coloring(g).distinct_colors());
        auto idx = chromatic_index_exact(g);
        CHECK(is_proper_edge(g, idx.certificate));
        CHECK(idx.value() >= g.max_degree());
        CHECK(idx.value() <= g.max_degree() + 1);
    }
}

TEST_CASE("forest and 2-independent partition search")
{
    auto c13 = families::cycle(13);
    auto c = find_forest_2independent_partition(c13);
    REQUIRE(c.found);
    CHECK(is_strongly_woody(c13, partition_coloring(c13, c.a, c.f)));

    auto k4 = find_forest_2independent_partition(families::complete(4));
    CHECK(! k4.found);
    CHECK(k4.exact);

    auto petersen = families::subdivide(families::petersen(), 5);
    auto p = find_forest_2independent_partition(petersen);
    REQUIRE(p.found);
    CHECK(is_2_independent(petersen, p.a));
    CHECK(induces_forest(petersen, p.f));
    auto pc = partition_coloring(petersen, p.a, p.f);
    CHECK(pc.distinct_colors() == 2);
    CHECK(is_strongly_woody(petersen, pc));

    auto tight = find_forest_2independent_partition(families::subdivide(families::complete(5), 1), Budget{1, std::nullopt});
    CHECK((tight.found || ! tight.exact));
}
