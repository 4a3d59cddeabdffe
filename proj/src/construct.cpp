#include <woody/construct.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

using std::vector;

namespace woody
{
    namespace
    {
        void reverify(const Graph & g, const EdgeColoring & c, const char * what)
        {
            if (auto r = is_strongly_woody(g, c); ! r)
                throw std::logic_error(std::string(what) + " produced a coloring that is not strongly woody");
        }
    }

    auto derived_coloring(const Graph & g, const VertexColoring & f, int k) -> EdgeColoring
    {
        if (f.size() != g.n() || ! f.is_total())
            throw PreconditionError("vertex coloring must be total");
        if (k < 1)
            throw PreconditionError("palette size must be positive");
        for (Vertex v = 0; v < g.n(); ++v)
            if (f[v] >= k)
                throw PreconditionError("vertex " + std::to_string(v) + " has color " + std::to_string(f[v])
                    + " outside Z_" + std::to_string(k));

        EdgeColoring c = EdgeColoring::uniform(g.m(), 0);
        for (EdgeId e = 0; e < g.m(); ++e)
            c.colors[e] = (f[g.edge(e).u] + f[g.edge(e).v]) % k;

        if (is_acyclic_vertex(g, f))
            reverify(g, c, "derived coloring");
        return c;
    }

    auto depth_parity_shading(const Graph & g, const ForestDecomposition & d) -> EdgeColoring
    {
        if (! d.is_valid(g))
            throw PreconditionError("forest decomposition is not valid for this graph");

        EdgeColoring c = EdgeColoring::uniform(g.m(), unassigned);
        vector<vector<std::pair<Vertex, EdgeId>>> adj(g.n());
        vector<int> depth(g.n());
        std::deque<Vertex> queue;
        for (int i = 0; i < d.forests; ++i) {
            for (auto & list : adj)
                list.clear();
            for (EdgeId e = 0; e < g.m(); ++e)
                if (d.assignment[e] == i) {
                    adj[g.edge(e).u].emplace_back(g.edge(e).v, e);
                    adj[g.edge(e).v].emplace_back(g.edge(e).u, e);
                }
            std::fill(depth.begin(), depth.end(), -1);
            for (Vertex root = 0; root < g.n(); ++root) {
                if (depth[root] >= 0 || adj[root].empty())
                    continue;
                depth[root] = 0;
                queue.assign(1, root);
                while (! queue.empty()) {
                    Vertex x = queue.front();
                    queue.pop_front();
                    for (auto [y, e] : adj[x])
                        if (depth[y] < 0) {
                            depth[y] = depth[x] + 1;
                            c.colors[e] = 2 * i + (depth[y] - 1) % 2;
                            queue.push_back(y);
                        }
                }
            }
        }
        return c;
    }

    auto triangle_free_planar_coloring(const Graph & g) -> EdgeColoring
    {
        if (has_triangle(g))
            throw PreconditionError("graph contains a triangle");
        auto d = two_forest_decomposition(g);
        auto c = depth_parity_shading(g, d);
        reverify(g, c, "two-forest shading");
        return c;
    }

    auto product_coloring(const Graph & g, const EdgeColoring & a, const EdgeColoring & b) -> EdgeColoring
    {
        if (a.size() != g.m() || b.size() != g.m())
            throw PreconditionError("product factors must both color the edges of the same graph");
        if (! a.is_total() || ! b.is_total())
            throw PreconditionError("product factors must be total");

        std::map<std::pair<Color, Color>, Color> pairs;
        EdgeColoring c = EdgeColoring::uniform(g.m(), 0);
        for (EdgeId e = 0; e < g.m(); ++e)
            c.colors[e] = pairs.try_emplace({a[e], b[e]}, static_cast<Color>(pairs.size())).first->second;
        return c;
    }

    auto degeneracy_greedy_vertex_coloring(const Graph & g) -> VertexColoring
    {
        auto col = coloring_number(g);
        VertexColoring f(vector<Color>(g.n(), unassigned));
        vector<bool> taken;
        for (auto v : col.ordering) {
            taken.assign(g.degree(v) + 1, false);
            for (auto w : g.neighbors(v))
                if (f[w] >= 0 && f[w] <= g.degree(v))
                    taken[f[w]] = true;
            Color c = 0;
            while (taken[c])
                ++c;
            f.colors[v] = c;
        }
        return f;
    }

    auto product_pipeline(const Graph & g, const VertexColoring & proper) -> ProductPipelineResult
    {
        if (! is_proper_vertex(g, proper))
            throw PreconditionError("vertex coloring is not proper");

        ProductPipelineResult result;
        auto arb = arboricity(g);
        result.arboricity = arb.k;
        auto shading = depth_parity_shading(g, arb.decomposition);

        if (! has_triangle(g)) {
            result.triangle_free_route = true;
            result.coloring = shading.normalized();
            result.bound = 2 * arb.k;
        }
        else {
            int k = proper.palette_size();
            result.vertex_colors = k;
            auto sums = derived_coloring(g, proper, k);
            result.coloring = product_coloring(g, sums, shading);
            result.bound = 2 * k * arb.k;
        }
        reverify(g, result.coloring, "product pipeline");
        return result;
    }

    auto degeneracy_pipeline(const Graph & g) -> ProductPipelineResult
    {
        return product_pipeline(g, degeneracy_greedy_vertex_coloring(g));
    }

    auto partition_coloring(const Graph & g, const VertexSet & a, const VertexSet & f) -> EdgeColoring
    {
        if (static_cast<int>(a.size()) != g.n() || static_cast<int>(f.size()) != g.n())
            throw PreconditionError("vertex sets must be sized to the graph");
        if ((a & f).any() || (a | f).count() != static_cast<std::size_t>(g.n()))
            throw PreconditionError("A and F do not partition the vertex set");
        if (! induces_forest(g, f))
            throw PreconditionError("F does not induce a forest");
        if (! is_2_independent(g, a))
            throw PreconditionError("A is not 2-independent");
        if (auto gi = girth(g); gi && *gi < 4)
            throw PreconditionError("girth " + std::to_string(*gi) + " is below 4");

        EdgeColoring c = EdgeColoring::uniform(g.m(), 0);
        for (EdgeId e = 0; e < g.m(); ++e)
            c.colors[e] = f[g.edge(e).u] && f[g.edge(e).v] ? 0 : 1;
        reverify(g, c, "partition coloring");
        return c;
    }
}
