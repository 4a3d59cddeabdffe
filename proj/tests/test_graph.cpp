#include "support.hpp"

#include <doctest.h>

using namespace woody;
using namespace woody::testing;

TEST_CASE("construction normalizes endpoints and keeps edge order")
{
    Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.edge(0) == Edge{1, 2});
    CHECK(g.edge(1) == Edge{0, 3});
    CHECK(g.edge(2) == Edge{0, 1});
    CHECK(g.edge_id(2, 1) == 0);
    CHECK(! g.edge_id(2, 3));

    auto nbrs = g.neighbors(1);
    REQUIRE(nbrs.size() == 2);
    CHECK(nbrs[0] == 0);
    CHECK(nbrs[1] == 2);
    CHECK(g.incident_edges(1)[0] == 2);
    CHECK(g.incident_edges(1)[1] == 0);
    CHECK(g.other_end(1, 3) == 0);
}

TEST_CASE("adjacency agrees with the edge list")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(rng, 12, 0.35);
        int degree_sum = 0;
        for (Vertex v = 0; v < g.n(); ++v) {
            degree_sum += g.degree(v);
            CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
            for (std::size_t i = 0; i < g.neighbors(v).size(); ++i) {
                auto e = g.incident_edges(v)[i];
                CHECK(g.other_end(e, v) == g.neighbors(v)[i]);
            }
        }
        CHECK(degree_sum == 2 * g.m());
        for (EdgeId e = 0; e < g.m(); ++e)
            CHECK(g.edge_id(g.edge(e).u, g.edge(e).v) == e);
    }
}

TEST_CASE("simple-graph violations are rejected")
{
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), GraphError);
    CHECK_THROWS_AS(Graph(-1, {}), GraphError);
}

TEST_CASE("edge list parsing")
{
    auto k3 = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
    CHECK(k3.n() == 3);
    CHECK(k3.m() == 3);
    CHECK(has_triangle(k3));

    auto k4 = parse_edge_list("4 6  0 1 0 2 0 3 1 2 1 3 2 3");
    CHECK(k4 == families::complete(4));
    CHECK(parse_edge_list(format_edge_list(k4)) == k4);

    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x"), ParseError);

    try {
        parse_edge_list("3 2\n0 1\n0 1\n");
        FAIL("duplicate accepted");
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
}

TEST_CASE("girth")
{
    CHECK(girth(families::cycle(5)) == 5);
    CHECK(! girth(families::path(7)));
    CHECK(! girth(families::star(4)));
    CHECK(! girth(Graph(3, {})));
    CHECK(girth(families::petersen()) == 5);
    CHECK(girth(families::complete(4)) == 3);
    CHECK(girth(families::hypercube(3)) == 4);
    CHECK(girth(families::complete_bipartite(3, 3)) == 4);
    CHECK(girth(families::mcgee()) == 7);
    CHECK(girth(families::subdivide(families::complete(4), 2)) == 9);
}

TEST_CASE("girth matches a per-edge shortest-cycle oracle")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 4 + trial % 14, 0.08 + 0.02 * (trial % 10));
        CHECK(girth(g) == girth_by_edge_removal(g));
    }
    for (auto & g : load_corpus("connected_n1-8.g6", 7))
        REQUIRE(girth(g) == girth_by_edge_removal(g));
}

TEST_CASE("girth is infinite exactly for forests")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, 10, 0.05 + 0.01 * (trial % 20));
        auto comp = connected_components(g);
        int components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
        bool acyclic_by_count = g.m() <= g.n() - components;
        CHECK(! girth(g).has_value() == acyclic_by_count);
        CHECK(is_forest(g) == acyclic_by_count);
    }
}

TEST_CASE("coloring number and its ordering")
{
    CHECK(coloring_number(families::complete(4)).value == 4);
    CHECK(coloring_number(families::path(5)).value == 2);
    CHECK(coloring_number(families::star(6)).value == 2);
    CHECK(coloring_number(families::cycle(6)).value == 3);
    CHECK(coloring_number(families::petersen()).value == 4);
    CHECK(coloring_number(Graph(3, {})).value == 1);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_graph(rng, 14, 0.3);
        auto col = coloring_number(g);
        REQUIRE(static_cast<int>(col.ordering.size()) == g.n());
        auto sorted = col.ordering;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < g.n(); ++i)
            CHECK(sorted[i] == i);
        CHECK(max_back_degree(g, col.ordering) == col.value - 1);
    }
}

TEST_CASE("coloring number is optimal on small graphs")
{
    // exhaustive over orderings: col = 1 + min over orders of the max back-degree
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 6, 0.5);
        std::vector<Vertex> order(g.n());
        std::iota(order.begin(), order.end(), 0);
        int best = g.n();
        do
            best = std::min(best, max_back_degree(g, order));
        while (std::next_permutation(order.begin(), order.end()));
        CHECK(coloring_number(g).value == best + 1);
    }
}

TEST_CASE("2-independence")
{
    auto c6 = families::cycle(6);
    CHECK(is_2_independent(c6, make_vertex_set(6, std::vector<Vertex>{0, 3})));
    CHECK(! is_2_independent(c6, make_vertex_set(6, std::vector<Vertex>{0, 2})));
    CHECK(! is_2_independent(c6, make_vertex_set(6, std::vector<Vertex>{0, 1})));
    CHECK(is_2_independent(c6, make_vertex_set(6, std::vector<Vertex>{4})));
    CHECK(is_2_independent(c6, make_vertex_set(6, std::vector<Vertex>{})));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(rng, 12, 0.2);
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.n(); ++v)
            if (rng() % 4 == 0)
                members.push_back(v);
        auto a = make_vertex_set(g.n(), members);
        if (! is_2_independent(g, a))
            continue;
        for (Vertex u : members)
            for (Vertex v : members) {
                if (u == v)
                    continue;
                CHECK(! g.has_edge(u, v));
                for (Vertex w : g.neighbors(u))
                    CHECK(! g.has_edge(w, v));
            }
    }
}

TEST_CASE("induced forests")
{
    auto c5 = families::cycle(5);
    CHECK(induces_forest(c5, make_vertex_set(5, std::vector<Vertex>{0, 1, 2, 3})));
    CHECK(! induces_forest(c5, make_vertex_set(5, std::vector<Vertex>{0, 1, 2, 3, 4})));
    CHECK(induces_forest(c5, make_vertex_set(5, std::vector<Vertex>{})));
}

TEST_CASE("triangles and the Euler bound")
{
    auto k4 = families::complete(4);
    CHECK(has_triangle(k4));
    CHECK(euler_planar_sanity(k4, false));
    auto t = find_triangle(k4);
    REQUIRE(t);
    CHECK(k4.has_edge((*t)[0], (*t)[1]));
    CHECK(k4.has_edge((*t)[1], (*t)[2]));
    CHECK(k4.has_edge((*t)[0], (*t)[2]));

    auto c4 = families::cycle(4);
    CHECK(! has_triangle(c4));
    CHECK(! find_triangle(c4));
    CHECK(euler_planar_sanity(c4, true));

    CHECK(! euler_planar_sanity(families::complete(5), false));
    CHECK(! euler_planar_sanity(families::complete_bipartite(3, 3), true));
    CHECK(euler_planar_sanity(Graph(2, {{0, 1}}), true));
}

TEST_CASE("vertex subset views")
{
    auto k4 = families::complete(4);
    VertexSubsetView view(k4, make_vertex_set(4, std::vector<Vertex>{0, 2, 3}));
    CHECK(view.vertex_count() == 3);
    CHECK(view.induced_edge_count() == 3);
    for (EdgeId e : view.induced_edges())
        CHECK(k4.edge(e).u != 1);
    CHECK(vertex_set_members(view.members()) == std::vector<Vertex>{0, 2, 3});
}

TEST_CASE("families")
{
    CHECK(families::petersen().m() == 15);
    CHECK(families::hypercube(4).m() == 32);
    CHECK(families::star(5).n() == 6);
    auto mcgee = families::mcgee();
    CHECK(mcgee.n() == 24);
    CHECK(mcgee.m() == 36);
    for (Vertex v = 0; v < mcgee.n(); ++v)
        CHECK(mcgee.degree(v) == 3);
    auto sub = families::subdivide(families::petersen(), 5);
    CHECK(sub.n() == 10 + 15 * 5);
    CHECK(sub.m() == 15 * 6);
    CHECK(girth(sub) == 30);
}
