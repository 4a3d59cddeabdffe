#include "support.hpp"

#include <woody/construct.hpp>
#include <woody/exact.hpp>

#include <doctest.h>

using namespace woody;
using namespace woody::testing;

namespace
{
    // Longest monochromatic path, by DFS over simple paths within each class.
    auto longest_monochromatic_path(const Graph & g, const EdgeColoring & c) -> int
    {
        int best = 0;
        std::vector<char> on_path(g.n(), 0);
        std::function<void(Vertex, Color, int)> walk = [&](Vertex x, Color color, int length) {
            best = std::max(best, length);
            on_path[x] = 1;
            for (std::size_t i = 0; i < g.neighbors(x).size(); ++i) {
                Vertex y = g.neighbors(x)[i];
                if (! on_path[y] && c[g.incident_edges(x)[i]] == color)
                    walk(y, color, length + 1);
            }
            on_path[x] = 0;
        };
        for (Vertex v = 0; v < g.n(); ++v)
            for (EdgeId e : g.incident_edges(v)) {
                on_path[v] = 1;
                walk(g.other_end(e, v), c[e], 1);
                on_path[v] = 0;
            }
        return best;
    }
}

TEST_CASE("derived coloring examples")
{
    auto k3 = families::complete(3);
    auto c = derived_coloring(k3, VertexColoring({0, 1, 2}), 3);
    CHECK(c.colors == std::vector<Color>{1, 2, 0});
    CHECK(is_strongly_woody(k3, c));

    auto p3 = families::path(3);
    auto d = derived_coloring(p3, VertexColoring({0, 1, 0}), 2);
    CHECK(d.colors == std::vector<Color>{1, 1});
    CHECK(is_strongly_woody(p3, d));

    auto c4 = families::cycle(4);
    auto e = derived_coloring(c4, VertexColoring({0, 1, 0, 2}), 3);
    CHECK(e.colors == std::vector<Color>{1, 1, 2, 2});
    CHECK(is_strongly_woody(c4, e));

    CHECK_THROWS(derived_coloring(k3, VertexColoring({0, 1, 3}), 3));
    CHECK_THROWS(derived_coloring(k3, VertexColoring({0, 1}), 3));
}

TEST_CASE("derived colorings of acyclic colorings are strongly woody")
{
    std::mt19937_64 rng(41);
    int acyclic = 0;
    for (auto & g : load_corpus("connected_n1-8.g6", 6)) {
        for (int trial = 0; trial < 10; ++trial) {
            int k = 3 + trial % 3;
            std::vector<Color> f(g.n());
            for (auto & x : f)
                x = static_cast<Color>(rng() % k);
            VertexColoring vf(f);
            if (! is_acyclic_vertex(g, vf))
                continue;
            auto c = derived_coloring(g, vf, k);
            REQUIRE(is_strongly_woody(g, c));
            REQUIRE(c.distinct_colors() <= k);
            ++acyclic;
        }
    }
    CHECK(acyclic > 100);
}

TEST_CASE("depth-parity shading")
{
    auto star = families::star(3);
    auto s = depth_parity_shading(star, ForestDecomposition{1, {0, 0, 0}});
    CHECK(s.colors == std::vector<Color>{0, 0, 0});

    auto path = families::path(5);
    auto p = depth_parity_shading(path, ForestDecomposition{1, {0, 0, 0, 0}});
    CHECK(p.colors == std::vector<Color>{0, 1, 0, 1});

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 12, 0.3);
        if (g.m() == 0)
            continue;
        auto a = arboricity(g);
        auto shaded = depth_parity_shading(g, a.decomposition);
        CHECK(shaded.palette_size() <= 2 * a.k);
        CHECK(longest_monochromatic_path(g, shaded) <= 2);
        for (EdgeId e = 0; e < g.m(); ++e)
            CHECK(shaded[e] / 2 == a.decomposition.assignment[e]);
    }
}

TEST_CASE("triangle-free planar coloring")
{
    for (auto g : {families::cycle(6), families::hypercube(3), families::complete_bipartite(2, 5)}) {
        auto c = triangle_free_planar_coloring(g);
        CHECK(c.distinct_colors() <= 4);
        CHECK(is_strongly_woody(g, c));
    }
    CHECK_THROWS_AS(triangle_free_planar_coloring(families::complete(4)), PreconditionError);
    CHECK_THROWS_AS(triangle_free_planar_coloring(families::complete_bipartite(4, 4)), ArboricityTooLarge);
}

TEST_CASE("product coloring")
{
    auto k4 = families::complete(4);
    EdgeColoring a({0, 1, 0, 1, 0, 1});
    EdgeColoring b({0, 1, 2, 0, 1, 2});
    auto p = product_coloring(k4, a, b);
    CHECK(p.distinct_colors() <= 6);
    CHECK(p.colors == std::vector<Color>{0, 1, 2, 3, 4, 5});

    auto same = product_coloring(k4, a, a);
    CHECK(same.normalized() == a.normalized());

    CHECK_THROWS(product_coloring(k4, a, EdgeColoring({0, 1})));

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 9, 0.4);
        auto x = random_edge_coloring(rng, g.m(), 3);
        auto y = random_edge_coloring(rng, g.m(), 4);
        auto z = product_coloring(g, x, y);
        CHECK(z.distinct_colors() <= x.distinct_colors() * y.distinct_colors());
        for (EdgeId e = 0; e < g.m(); ++e)
            for (EdgeId f = 0; f < g.m(); ++f)
                CHECK((z[e] == z[f]) == (x[e] == x[f] && y[e] == y[f]));
    }
}

TEST_CASE("degeneracy greedy coloring")
{
    CHECK(degeneracy_greedy_vertex_coloring(families::complete(4)).distinct_colors() == 4);
    CHECK(degeneracy_greedy_vertex_coloring(families::star(7)).distinct_colors() <= 2);
    CHECK(degeneracy_greedy_vertex_coloring(families::cycle(5)).distinct_colors() <= 3);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 15, 0.3);
        auto f = degeneracy_greedy_vertex_coloring(g);
        CHECK(is_proper_vertex(g, f));
        CHECK(f.distinct_colors() <= coloring_number(g).value);
    }
}

TEST_CASE("product pipeline on K4")
{
    auto k4 = families::complete(4);
    auto chi = chromatic_exact(k4);
    auto r = product_pipeline(k4, chi.certificate);
    CHECK(r.arboricity == 2);
    CHECK(r.vertex_colors == 4);
    CHECK(! r.triangle_free_route);
    CHECK(r.coloring.distinct_colors() <= 2 * 4 * 2);
    CHECK(is_strongly_woody(k4, r.coloring));

    CHECK_THROWS(product_pipeline(k4, VertexColoring({0, 0, 1, 2})));
}

TEST_CASE("degeneracy pipeline")
{
    auto k4 = degeneracy_pipeline(families::complete(4));
    CHECK(k4.coloring.distinct_colors() <= 16);
    CHECK(is_strongly_woody(families::complete(4), k4.coloring));

    auto tree = families::star(4);
    auto t = degeneracy_pipeline(tree);
    CHECK(t.arboricity == 1);
    CHECK(is_strongly_woody(tree, t.coloring));

    auto cube = families::hypercube(4);
    auto q = degeneracy_pipeline(cube);
    CHECK(q.triangle_free_route);
    CHECK(q.coloring.distinct_colors() <= 2 * q.arboricity);
    CHECK(is_strongly_woody(cube, q.coloring));

    auto empty = degeneracy_pipeline(Graph(3, {}));
    CHECK(empty.coloring.size() == 0);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 14, 0.1 + 0.05 * (trial % 10));
        auto r = degeneracy_pipeline(g);
        REQUIRE(is_strongly_woody(g, r.coloring));
        CHECK(r.coloring.distinct_colors() <= r.bound);
        CHECK(r.bound <= 4 * r.arboricity * r.arboricity);
    }
}

TEST_CASE("partition coloring")
{
    auto c13 = families::cycle(13);
    std::vector<Vertex> rest;
    for (Vertex v = 1; v < 13; ++v)
        rest.push_back(v);
    auto c = partition_coloring(c13, make_vertex_set(13, std::vector<Vertex>{0}), make_vertex_set(13, rest));
    CHECK(c.distinct_colors() == 2);
    CHECK(is_strongly_woody(c13, c));

    auto star = families::star(4);
    auto s = partition_coloring(star, make_vertex_set(5, std::vector<Vertex>{0}),
        make_vertex_set(5, std::vector<Vertex>{1, 2, 3, 4}));
    CHECK(s.colors == std::vector<Color>{1, 1, 1, 1});
    CHECK(is_strongly_woody(star, s));

    auto k3 = families::complete(3);
    auto girth_error = [&] {
        partition_coloring(k3, make_vertex_set(3, std::vector<Vertex>{0}), make_vertex_set(3, std::vector<Vertex>{1, 2}));
    };
    CHECK_THROWS_WITH_AS(girth_error(), doctest::Contains("girth"), PreconditionError);

    auto c6 = families::cycle(6);
    auto not_partition = [&] {
        partition_coloring(c6, make_vertex_set(6, std::vector<Vertex>{0}), make_vertex_set(6, std::vector<Vertex>{1, 2}));
    };
    CHECK_THROWS_AS(not_partition(), PreconditionError);
    auto too_close = [&] {
        partition_coloring(c6, make_vertex_set(6, std::vector<Vertex>{0, 2}),
            make_vertex_set(6, std::vector<Vertex>{1, 3, 4, 5}));
    };
    CHECK_THROWS_WITH_AS(too_close(), doctest::Contains("2-independent"), PreconditionError);
    auto cyclic = [&] {
        partition_coloring(c6, make_vertex_set(6, std::vector<Vertex>{}),
            make_vertex_set(6, std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
    };
    CHECK_THROWS_WITH_AS(cyclic(), doctest::Contains("forest"), PreconditionError);
}
