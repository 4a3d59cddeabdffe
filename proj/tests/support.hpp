#ifndef WOODY_TESTS_SUPPORT_HPP
#define WOODY_TESTS_SUPPORT_HPP

#include <woody/coloring.hpp>
#include <woody/graph.hpp>
#include <woody/report.hpp>
#include <woody/union_find.hpp>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

namespace woody::testing
{
    inline auto corpus_path(const std::string & name) -> std::filesystem::path
    {
        return std::filesystem::path(WOODY_DATA_DIR) / "corpora" / name;
    }

    inline auto fixture_path(const std::string & name) -> std::filesystem::path
    {
        return std::filesystem::path(WOODY_TEST_DIR) / "fixtures" / name;
    }

    inline auto load_corpus(const std::string & name, int max_n = 1 << 30) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (auto & entry : read_graph6_corpus(corpus_path(name))) {
            if (! entry.graph)
                throw std::runtime_error("corpus entry " + entry.id() + " failed to parse");
            if (entry.graph->n() <= max_n)
                out.push_back(*entry.graph);
        }
        return out;
    }

    inline auto random_edge_coloring(std::mt19937_64 & rng, int m, int palette) -> EdgeColoring
    {
        std::uniform_int_distribution<int> pick(0, palette - 1);
        std::vector<Color> c(m);
        for (auto & x : c)
            x = pick(rng);
        return EdgeColoring(std::move(c));
    }

    inline auto random_permutation(std::mt19937_64 & rng, int n) -> std::vector<Vertex>
    {
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    inline auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng))
                    edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }

    /// Shortest cycle through each edge uv: BFS from u to v without using uv.
    inline auto girth_by_edge_removal(const Graph & g) -> std::optional<int>
    {
        std::optional<int> best;
        for (EdgeId e = 0; e < g.m(); ++e) {
            auto [s, t] = g.edge(e);
            std::vector<int> dist(g.n(), -1);
            std::queue<Vertex> q;
            dist[s] = 0;
            q.push(s);
            while (! q.empty() && dist[t] < 0) {
                Vertex x = q.front();
                q.pop();
                for (std::size_t i = 0; i < g.neighbors(x).size(); ++i) {
                    if (g.incident_edges(x)[i] == e)
                        continue;
                    Vertex y = g.neighbors(x)[i];
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        q.push(y);
                    }
                }
            }
            if (dist[t] > 0 && (! best || dist[t] + 1 < *best))
                best = dist[t] + 1;
        }
        return best;
    }

    /// Is the coloring woody on the multigraph G/e? Vertex v of e is merged into u,
    /// e disappears, and parallel edges stay (two parallel edges of one color form a cycle).
    inline auto woody_after_contraction(const Graph & g, const EdgeColoring & c, EdgeId contracted) -> bool
    {
        auto [keep, gone] = g.edge(contracted);
        int palette = c.palette_size();
        std::vector<UnionFind> classes(palette, UnionFind(g.n()));
        for (EdgeId e = 0; e < g.m(); ++e) {
            if (e == contracted)
                continue;
            auto [u, v] = g.edge(e);
            if (u == gone)
                u = keep;
            if (v == gone)
                v = keep;
            if (! classes[c[e]].unite(u, v))
                return false;
        }
        return true;
    }

    inline auto strongly_woody_by_contraction(const Graph & g, const EdgeColoring & c) -> bool
    {
        for (EdgeId e = 0; e < g.m(); ++e)
            if (! woody_after_contraction(g, c, e))
                return false;
        return true;
    }

    /// Color of edge {u,v} after relabeling: transports c along perm.
    inline auto transport_coloring(const Graph & g, const Graph & relabeled, std::span<const Vertex> perm,
        const EdgeColoring & c) -> EdgeColoring
    {
        std::vector<Color> out(relabeled.m(), unassigned);
        for (EdgeId e = 0; e < g.m(); ++e) {
            auto id = relabeled.edge_id(perm[g.edge(e).u], perm[g.edge(e).v]);
            out[*id] = c[e];
        }
        return EdgeColoring(std::move(out));
    }
}

#endif
