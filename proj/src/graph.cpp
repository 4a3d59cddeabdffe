#include <woody/graph.hpp>
#include <woody/union_find.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

using std::optional;
using std::pair;
using std::span;
using std::vector;

namespace woody
{
    namespace
    {
        auto checked_count(int n) -> int
        {
            if (n < 0)
                throw GraphError("negative vertex count");
            return n;
        }
    }

    Graph::Graph(int n, vector<Edge> edges) :
        _n(checked_count(n)),
        _edges(std::move(edges)),
        _nbrs(n),
        _inc(n)
    {

        vector<vector<pair<Vertex, EdgeId>>> adj(n);
        for (EdgeId e = 0; e < m(); ++e) {
            auto & [u, v] = _edges[e];
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("edge " + std::to_string(e) + " has an endpoint outside 0.." + std::to_string(n - 1));
            if (u == v)
                throw GraphError("edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }

        for (Vertex v = 0; v < n; ++v) {
            std::sort(adj[v].begin(), adj[v].end());
            for (std::size_t i = 0; i < adj[v].size(); ++i) {
                if (i > 0 && adj[v][i].first == adj[v][i - 1].first)
                    throw GraphError("duplicate edge " + std::to_string(std::min(v, adj[v][i].first)) + " "
                        + std::to_string(std::max(v, adj[v][i].first)));
                _nbrs[v].push_back(adj[v][i].first);
                _inc[v].push_back(adj[v][i].second);
            }
        }
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (Vertex v = 0; v < _n; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::edge_id(Vertex u, Vertex v) const -> optional<EdgeId>
    {
        if (u < 0 || u >= _n || v < 0 || v >= _n)
            return std::nullopt;
        auto & nu = _nbrs[u];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it == nu.end() || *it != v)
            return std::nullopt;
        return _inc[u][it - nu.begin()];
    }

    auto make_vertex_set(int n, span<const Vertex> members) -> VertexSet
    {
        VertexSet s(n);
        for (auto v : members)
            s.set(v);
        return s;
    }

    auto vertex_set_members(const VertexSet & s) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
            result.push_back(static_cast<Vertex>(v));
        return result;
    }

    VertexSubsetView::VertexSubsetView(const Graph & parent, VertexSet members) :
        _parent(&parent),
        _members(std::move(members))
    {
        if (static_cast<int>(_members.size()) != parent.n())
            throw GraphError("vertex subset size does not match parent graph");
    }

    auto VertexSubsetView::induced_edges() const -> vector<EdgeId>
    {
        vector<EdgeId> result;
        for (EdgeId e = 0; e < _parent->m(); ++e) {
            auto [u, v] = _parent->edge(e);
            if (_members[u] && _members[v])
                result.push_back(e);
        }
        return result;
    }

    auto VertexSubsetView::induced_edge_count() const -> int
    {
        return static_cast<int>(induced_edges().size());
    }

    auto girth(const Graph & g) -> optional<int>
    {
        int best = std::numeric_limits<int>::max();
        vector<int> dist(g.n()), parent_edge(g.n());
        std::deque<Vertex> queue;
        for (Vertex s = 0; s < g.n(); ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            parent_edge[s] = -1;
            queue.assign(1, s);
            while (! queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                if (2 * dist[x] >= best)
                    break;
                auto nbrs = g.neighbors(x);
                auto inc = g.incident_edges(x);
                for (std::size_t i = 0; i < nbrs.size(); ++i) {
                    Vertex y = nbrs[i];
                    if (inc[i] == parent_edge[x])
                        continue;
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        parent_edge[y] = inc[i];
                        queue.push_back(y);
                    }
                    else
                        best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        if (best == std::numeric_limits<int>::max())
            return std::nullopt;
        return best;
    }

    auto coloring_number(const Graph & g) -> ColoringNumber
    {
        ColoringNumber result;
        if (g.n() == 0)
            return result;

        vector<int> deg(g.n());
        std::set<pair<int, Vertex>> queue;
        for (Vertex v = 0; v < g.n(); ++v) {
            deg[v] = g.degree(v);
            queue.emplace(deg[v], v);
        }

        vector<bool> removed(g.n(), false);
        vector<Vertex> peel;
        int degeneracy = 0;
        while (! queue.empty()) {
            auto [d, v] = *queue.begin();
            queue.erase(queue.begin());
            degeneracy = std::max(degeneracy, d);
            removed[v] = true;
            peel.push_back(v);
            for (auto w : g.neighbors(v))
                if (! removed[w]) {
                    queue.erase({deg[w], w});
                    queue.emplace(--deg[w], w);
                }
        }

        result.value = degeneracy + 1;
        result.ordering.assign(peel.rbegin(), peel.rend());
        return result;
    }

    auto max_back_degree(const Graph & g, span<const Vertex> ordering) -> int
    {
        vector<int> position(g.n(), -1);
        for (std::size_t i = 0; i < ordering.size(); ++i)
            position[ordering[i]] = static_cast<int>(i);

        int result = 0;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (position[v] < 0)
                throw std::invalid_argument("ordering does not cover every vertex");
            int back = 0;
            for (auto w : g.neighbors(v))
                if (position[w] < position[v])
                    ++back;
            result = std::max(result, back);
        }
        return result;
    }

    auto is_2_independent(const Graph & g, const VertexSet & a) -> bool
    {
        for (auto v = a.find_first(); v != VertexSet::npos; v = a.find_next(v)) {
            for (auto w : g.neighbors(static_cast<Vertex>(v))) {
                if (a[w])
                    return false;
                for (auto x : g.neighbors(w))
                    if (x != static_cast<Vertex>(v) && a[x])
                        return false;
            }
        }
        return true;
    }

    auto induces_forest(const Graph & g, const VertexSet & f) -> bool
    {
        UnionFind uf(g.n());
        for (auto [u, v] : g.edges())
            if (f[u] && f[v] && ! uf.unite(u, v))
                return false;
        return true;
    }

    auto find_triangle(const Graph & g) -> optional<std::array<Vertex, 3>>
    {
        for (auto [u, v] : g.edges()) {
            auto a = g.neighbors(u), b = g.neighbors(v);
            auto i = a.begin(), j = b.begin();
            while (i != a.end() && j != b.end()) {
                if (*i == *j)
                    return std::array<Vertex, 3>{u, v, *i};
                if (*i < *j)
                    ++i;
                else
                    ++j;
            }
        }
        return std::nullopt;
    }

    auto has_triangle(const Graph & g) -> bool
    {
        return find_triangle(g).has_value();
    }

    auto euler_planar_sanity(const Graph & g, bool triangle_free) -> bool
    {
        if (g.n() < 3)
            return true;
        long limit = triangle_free ? 2L * g.n() - 4 : 3L * g.n() - 6;
        return g.m() <= limit;
    }

    auto is_forest(const Graph & g) -> bool
    {
        UnionFind uf(g.n());
        for (auto [u, v] : g.edges())
            if (! uf.unite(u, v))
                return false;
        return true;
    }

    auto connected_components(const Graph & g) -> vector<int>
    {
        vector<int> comp(g.n(), -1);
        int next = 0;
        vector<Vertex> stack;
        for (Vertex s = 0; s < g.n(); ++s) {
            if (comp[s] >= 0)
                continue;
            comp[s] = next;
            stack.assign(1, s);
            while (! stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (auto y : g.neighbors(x))
                    if (comp[y] < 0) {
                        comp[y] = next;
                        stack.push_back(y);
                    }
            }
            ++next;
        }
        return comp;
    }

    auto relabel(const Graph & g, span<const Vertex> perm) -> Graph
    {
        if (static_cast<int>(perm.size()) != g.n())
            throw GraphError("permutation size does not match vertex count");
        vector<Edge> edges;
        edges.reserve(g.m());
        for (auto [u, v] : g.edges())
            edges.push_back({perm[u], perm[v]});
        return Graph(g.n(), std::move(edges));
    }

    namespace families
    {
        auto path(int n) -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i + 1 < n; ++i)
                edges.push_back({i, i + 1});
            return Graph(n, std::move(edges));
        }

        auto cycle(int n) -> Graph
        {
            if (n < 3)
                throw GraphError("cycles need at least 3 vertices");
            vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                edges.push_back({i, (i + 1) % n});
            return Graph(n, std::move(edges));
        }

        auto complete(int n) -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    edges.push_back({i, j});
            return Graph(n, std::move(edges));
        }

        auto star(int leaves) -> Graph
        {
            vector<Edge> edges;
            for (int i = 1; i <= leaves; ++i)
                edges.push_back({0, i});
            return Graph(leaves + 1, std::move(edges));
        }

        auto complete_bipartite(int a, int b) -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    edges.push_back({i, a + j});
            return Graph(a + b, std::move(edges));
        }

        auto petersen() -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i < 5; ++i) {
                edges.push_back({i, (i + 1) % 5});
                edges.push_back({i, i + 5});
                edges.push_back({5 + i, 5 + (i + 2) % 5});
            }
            return Graph(10, std::move(edges));
        }

        auto hypercube(int d) -> Graph
        {
            int n = 1 << d;
            vector<Edge> edges;
            for (int x = 0; x < n; ++x)
                for (int b = 0; b < d; ++b)
                    if (! (x & (1 << b)))
                        edges.push_back({x, x | (1 << b)});
            return Graph(n, std::move(edges));
        }

        auto lcf(span<const int> code, int repeats) -> Graph
        {
            int n = static_cast<int>(code.size()) * repeats;
            vector<Edge> edges;
            std::set<pair<int, int>> seen;
            auto add = [&](int u, int v) {
                if (u > v)
                    std::swap(u, v);
                if (seen.emplace(u, v).second)
                    edges.push_back({u, v});
            };
            for (int i = 0; i < n; ++i)
                add(i, (i + 1) % n);
            for (int i = 0; i < n; ++i) {
                int jump = code[i % code.size()];
                add(i, ((i + jump) % n + n) % n);
            }
            return Graph(n, std::move(edges));
        }

        auto mcgee() -> Graph
        {
            const int code[] = {12, 7, -7};
            return lcf(code, 8);
        }

        auto subdivide(const Graph & g, int times) -> Graph
        {
            vector<Edge> edges;
            int next = g.n();
            for (auto [u, v] : g.edges()) {
                Vertex prev = u;
                for (int i = 0; i < times; ++i) {
                    edges.push_back({prev, next});
                    prev = next++;
                }
                edges.push_back({prev, v});
            }
            return Graph(next, std::move(edges));
        }
    }
}
