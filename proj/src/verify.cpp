#include <woody/coloring.hpp>
#include <woody/union_find.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

using std::optional;
using std::span;
using std::vector;

namespace woody
{
    namespace detail
    {
        auto ColorArray::is_total() const -> bool
        {
            return std::none_of(colors.begin(), colors.end(), [](Color c) { return c < 0; });
        }

        auto ColorArray::palette_size() const -> int
        {
            Color top = -1;
            for (auto c : colors)
                top = std::max(top, c);
            return top + 1;
        }

        auto ColorArray::distinct_colors() const -> int
        {
            vector<Color> seen;
            for (auto c : colors)
                if (c >= 0)
                    seen.push_back(c);
            std::sort(seen.begin(), seen.end());
            return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
        }

        auto ColorArray::normalized_colors() const -> vector<Color>
        {
            std::unordered_map<Color, Color> rename;
            vector<Color> out;
            out.reserve(colors.size());
            for (auto c : colors) {
                if (c < 0)
                    out.push_back(unassigned);
                else
                    out.push_back(rename.try_emplace(c, static_cast<Color>(rename.size())).first->second);
            }
            return out;
        }

        auto ColorArray::is_normalized() const -> bool
        {
            return normalized_colors() == colors;
        }
    }

    namespace
    {
        void require_total(const Graph & g, const EdgeColoring & c)
        {
            if (c.size() != g.m())
                throw PreconditionError("edge coloring has " + std::to_string(c.size()) + " entries for "
                    + std::to_string(g.m()) + " edges");
            if (! c.is_total())
                throw PreconditionError("edge coloring is partial");
        }

        /// A class of edges viewed as a rooted forest, roots at the lowest vertex of each tree.
        struct RootedForest
        {
            vector<int> depth;
            vector<EdgeId> parent_edge;
            vector<Vertex> parent;

            RootedForest(const Graph & g, const vector<EdgeId> & edges) :
                depth(g.n(), -1),
                parent_edge(g.n(), -1),
                parent(g.n(), -1)
            {
                vector<vector<std::pair<Vertex, EdgeId>>> adj(g.n());
                for (auto e : edges) {
                    auto [u, v] = g.edge(e);
                    adj[u].emplace_back(v, e);
                    adj[v].emplace_back(u, e);
                }
                std::deque<Vertex> queue;
                for (Vertex r = 0; r < g.n(); ++r) {
                    if (depth[r] >= 0 || adj[r].empty())
                        continue;
                    depth[r] = 0;
                    queue.assign(1, r);
                    while (! queue.empty()) {
                        Vertex x = queue.front();
                        queue.pop_front();
                        for (auto [y, e] : adj[x])
                            if (depth[y] < 0) {
                                depth[y] = depth[x] + 1;
                                parent[y] = x;
                                parent_edge[y] = e;
                                queue.push_back(y);
                            }
                    }
                }
            }

            /// Tree path from u to v by walking both ends up to their common ancestor.
            void path(Vertex u, Vertex v, vector<EdgeId> & edges, vector<Vertex> & vertices) const
            {
                vector<EdgeId> up_u, up_v;
                vector<Vertex> vu{u}, vv{v};
                while (u != v) {
                    if (depth[u] >= depth[v]) {
                        up_u.push_back(parent_edge[u]);
                        u = parent[u];
                        vu.push_back(u);
                    }
                    else {
                        up_v.push_back(parent_edge[v]);
                        v = parent[v];
                        vv.push_back(v);
                    }
                }
                edges = up_u;
                edges.insert(edges.end(), up_v.rbegin(), up_v.rend());
                vertices = vu;
                vertices.insert(vertices.end(), vv.rbegin() + 1, vv.rend());
            }
        };

        struct ClassForests
        {
            vector<Color> dense;
            int classes = 0;
            vector<UnionFind> forests;
            vector<vector<EdgeId>> members;
            optional<BrokenCycleWitness> cycle;
        };

        /// Builds the per-class union-find structures, stopping at the first
        /// monochromatic cycle.
        auto build_classes(const Graph & g, const EdgeColoring & c) -> ClassForests
        {
            ClassForests result;
            result.dense = c.normalized_colors();
            result.classes = c.distinct_colors();
            result.forests.assign(result.classes, UnionFind(g.n()));
            result.members.resize(result.classes);

            for (EdgeId e = 0; e < g.m(); ++e) {
                auto [u, v] = g.edge(e);
                Color k = result.dense[e];
                if (! result.forests[k].unite(u, v)) {
                    BrokenCycleWitness w;
                    w.kind = WitnessKind::monochromatic_cycle;
                    w.color = c[e];
                    RootedForest(g, result.members[k]).path(v, u, w.path_edges, w.vertex_path);
                    w.path_edges.push_back(e);
                    w.vertex_path.push_back(v);
                    result.cycle = std::move(w);
                    return result;
                }
                result.members[k].push_back(e);
            }
            return result;
        }
    }

    auto witness_reverifies(const Graph & g, const EdgeColoring & c, const BrokenCycleWitness & w) -> bool
    {
        if (c.size() != g.m() || w.path_edges.empty())
            return false;
        if (w.vertex_path.size() != w.path_edges.size() + 1)
            return false;
        for (auto v : w.vertex_path)
            if (v < 0 || v >= g.n())
                return false;

        for (std::size_t i = 0; i < w.path_edges.size(); ++i) {
            EdgeId e = w.path_edges[i];
            if (e < 0 || e >= g.m() || c[e] != w.color)
                return false;
            auto id = g.edge_id(w.vertex_path[i], w.vertex_path[i + 1]);
            if (! id || *id != e)
                return false;
        }

        // interior vertices distinct; a cycle closes on its first vertex
        vector<Vertex> inner(w.vertex_path.begin(), w.vertex_path.end() - 1);
        if (w.kind == WitnessKind::monochromatic_broken_cycle)
            inner.push_back(w.vertex_path.back());
        std::sort(inner.begin(), inner.end());
        if (std::adjacent_find(inner.begin(), inner.end()) != inner.end())
            return false;

        if (w.kind == WitnessKind::monochromatic_cycle)
            return ! w.closing_edge && w.path_edges.size() >= 3 && w.vertex_path.front() == w.vertex_path.back();

        if (! w.closing_edge || w.path_edges.size() < 2)
            return false;
        EdgeId closing = *w.closing_edge;
        if (closing < 0 || closing >= g.m())
            return false;
        if (std::find(w.path_edges.begin(), w.path_edges.end(), closing) != w.path_edges.end())
            return false;
        auto [a, b] = g.edge(closing);
        Vertex s = w.vertex_path.front(), t = w.vertex_path.back();
        return (a == s && b == t) || (a == t && b == s);
    }

    auto is_woody(const Graph & g, const EdgeColoring & c) -> VerifyResult
    {
        require_total(g, c);
        auto classes = build_classes(g, c);
        if (classes.cycle)
            return {false, std::move(classes.cycle)};
        return {};
    }

    auto is_strongly_woody(const Graph & g, const EdgeColoring & c) -> VerifyResult
    {
        require_total(g, c);
        auto classes = build_classes(g, c);
        if (classes.cycle)
            return {false, std::move(classes.cycle)};

        for (EdgeId e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edge(e);
            for (Color k = 0; k < classes.classes; ++k) {
                if (k == classes.dense[e] || ! classes.forests[k].connected(u, v))
                    continue;
                BrokenCycleWitness w;
                w.kind = WitnessKind::monochromatic_broken_cycle;
                w.color = c[classes.members[k].front()];
                RootedForest(g, classes.members[k]).path(u, v, w.path_edges, w.vertex_path);
                w.closing_edge = e;
                return {false, std::move(w)};
            }
        }
        return {};
    }

    void for_each_cycle(const Graph & g, const std::function<bool(span<const EdgeId>, span<const Vertex>)> & visit)
    {
        vector<Vertex> path;
        vector<EdgeId> edges;
        vector<bool> on_path(g.n(), false);
        bool stop = false;

        std::function<void(Vertex, Vertex)> extend = [&](Vertex s, Vertex x) {
            auto nbrs = g.neighbors(x);
            auto inc = g.incident_edges(x);
            for (std::size_t i = 0; i < nbrs.size() && ! stop; ++i) {
                Vertex y = nbrs[i];
                if (y == s && path.size() >= 3 && path[1] < path.back()) {
                    edges.push_back(inc[i]);
                    if (! visit(edges, path))
                        stop = true;
                    edges.pop_back();
                }
                else if (y > s && ! on_path[y]) {
                    on_path[y] = true;
                    path.push_back(y);
                    edges.push_back(inc[i]);
                    extend(s, y);
                    edges.pop_back();
                    path.pop_back();
                    on_path[y] = false;
                }
            }
        };

        for (Vertex s = 0; s < g.n() && ! stop; ++s) {
            path.assign(1, s);
            on_path[s] = true;
            extend(s, s);
            on_path[s] = false;
        }
    }

    auto is_strongly_woody_oracle(const Graph & g, const EdgeColoring & c) -> bool
    {
        require_total(g, c);
        if (g.n() > cycle_enumeration_limit)
            throw SizeGuardError("cycle enumeration oracle is limited to "
                + std::to_string(cycle_enumeration_limit) + " vertices");

        bool ok = true;
        std::map<Color, int> count;
        for_each_cycle(g, [&](span<const EdgeId> cycle, span<const Vertex>) {
            // C - e is monochromatic for some e iff all but at most one edge share a color
            count.clear();
            for (auto e : cycle)
                ++count[c[e]];
            for (auto & [color, k] : count)
                if (k + 1 >= static_cast<int>(cycle.size())) {
                    ok = false;
                    return false;
                }
            return true;
        });
        return ok;
    }

    auto is_p_woody(const Graph & g, const EdgeColoring & c, int p, bool allow_large) -> bool
    {
        require_total(g, c);
        if (p < 1)
            throw PreconditionError("p must be positive");
        if (g.n() > cycle_enumeration_limit && ! allow_large)
            throw SizeGuardError("p-woody check enumerates cycles and is limited to "
                + std::to_string(cycle_enumeration_limit) + " vertices unless overridden");

        bool ok = true;
        vector<Color> seen;
        for_each_cycle(g, [&](span<const EdgeId> cycle, span<const Vertex>) {
            seen.clear();
            for (auto e : cycle)
                seen.push_back(c[e]);
            std::sort(seen.begin(), seen.end());
            auto distinct = std::unique(seen.begin(), seen.end()) - seen.begin();
            auto need = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(cycle.size()), p + 1);
            if (distinct < need) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    }

    namespace
    {
        void require_total(const Graph & g, const VertexColoring & f)
        {
            if (f.size() != g.n())
                throw PreconditionError("vertex coloring has " + std::to_string(f.size()) + " entries for "
                    + std::to_string(g.n()) + " vertices");
            if (! f.is_total())
                throw PreconditionError("vertex coloring is partial");
        }
    }

    auto is_proper_vertex(const Graph & g, const VertexColoring & f) -> bool
    {
        require_total(g, f);
        return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge & e) { return f[e.u] != f[e.v]; });
    }

    auto is_acyclic_vertex(const Graph & g, const VertexColoring & f) -> AcyclicVertexResult
    {
        if (! is_proper_vertex(g, f))
            return {false, false, std::nullopt};

        // each edge lies in exactly one bicolored subgraph, the one for its end colors
        std::map<std::pair<Color, Color>, vector<EdgeId>> groups;
        for (EdgeId e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edge(e);
            groups[{std::min(f[u], f[v]), std::max(f[u], f[v])}].push_back(e);
        }

        for (auto & [pair, edges] : groups) {
            UnionFind uf(g.n());
            for (std::size_t i = 0; i < edges.size(); ++i) {
                auto [u, v] = g.edge(edges[i]);
                if (uf.unite(u, v))
                    continue;
                vector<EdgeId> before(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(i));
                vector<EdgeId> path_edges;
                vector<Vertex> cycle;
                RootedForest(g, before).path(v, u, path_edges, cycle);
                return {false, true, std::move(cycle)};
            }
        }
        return {};
    }

    auto is_proper_edge(const Graph & g, const EdgeColoring & c) -> bool
    {
        require_total(g, c);
        for (Vertex v = 0; v < g.n(); ++v) {
            vector<Color> seen;
            for (auto e : g.incident_edges(v))
                seen.push_back(c[e]);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                return false;
        }
        return true;
    }
}
