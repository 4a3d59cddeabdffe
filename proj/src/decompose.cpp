#include <woody/decompose.hpp>
#include <woody/union_find.hpp>

#include <algorithm>
#include <bit>
#include <deque>

using std::vector;

namespace woody
{
    auto DensityCertificate::reverifies() const -> bool
    {
        int vertices = subgraph.vertex_count();
        if (vertices < 2)
            return false;
        return density == Density{subgraph.induced_edge_count(), vertices - 1};
    }

    auto ForestDecomposition::is_valid(const Graph & g) const -> bool
    {
        if (static_cast<int>(assignment.size()) != g.m())
            return false;
        vector<UnionFind> uf(forests, UnionFind(g.n()));
        for (EdgeId e = 0; e < g.m(); ++e) {
            int i = assignment[e];
            if (i < 0 || i >= forests)
                return false;
            if (! uf[i].unite(g.edge(e).u, g.edge(e).v))
                return false;
        }
        return true;
    }

    namespace
    {
        auto certificate_for(const Graph & g, VertexSet members) -> DensityCertificate
        {
            VertexSubsetView view(g, std::move(members));
            Density d{view.induced_edge_count(), view.vertex_count() - 1};
            return DensityCertificate{std::move(view), d};
        }

        /// Greedy forest covering plus exchange-chain augmentation. Each
        /// failed augmentation for an edge proves the current forest count is
        /// too small and yields a dense subgraph.
        class ForestPartitioner
        {
            public:
                explicit ForestPartitioner(const Graph & g) :
                    _g(g),
                    _forest_of(g.m(), -1)
                {
                }

                void add_forest()
                {
                    _adj.emplace_back(_g.n());
                }

                auto forests() const -> int { return static_cast<int>(_adj.size()); }
                auto assignment() const -> const vector<int> & { return _forest_of; }

                /// Tries to cover edge s; on failure returns the set of reached edges (including s).
                auto augment(EdgeId s) -> std::optional<vector<EdgeId>>
                {
                    vector<EdgeId> pred(_g.m(), -1);
                    vector<int> via(_g.m(), -1);
                    vector<bool> reached(_g.m(), false);
                    std::deque<EdgeId> queue{s};
                    reached[s] = true;
                    vector<EdgeId> order{s};

                    while (! queue.empty()) {
                        EdgeId y = queue.front();
                        queue.pop_front();
                        auto [u, v] = _g.edge(y);
                        for (int i = 0; i < forests(); ++i) {
                            if (_forest_of[y] == i)
                                continue;
                            auto path = forest_path(i, u, v);
                            if (! path) {
                                apply(y, i, pred, via);
                                return std::nullopt;
                            }
                            for (auto x : *path)
                                if (! reached[x]) {
                                    reached[x] = true;
                                    pred[x] = y;
                                    via[x] = i;
                                    queue.push_back(x);
                                    order.push_back(x);
                                }
                        }
                    }
                    return order;
                }

                /// Places an edge in a new forest without any search.
                void force(EdgeId e, int forest) { insert(e, forest); }

            private:
                const Graph & _g;
                vector<int> _forest_of;
                vector<vector<vector<std::pair<Vertex, EdgeId>>>> _adj;

                void insert(EdgeId e, int i)
                {
                    auto [u, v] = _g.edge(e);
                    _adj[i][u].emplace_back(v, e);
                    _adj[i][v].emplace_back(u, e);
                    _forest_of[e] = i;
                }

                void remove(EdgeId e)
                {
                    int i = _forest_of[e];
                    auto [u, v] = _g.edge(e);
                    auto drop = [e](vector<std::pair<Vertex, EdgeId>> & list) {
                        list.erase(std::find_if(list.begin(), list.end(), [e](auto & p) { return p.second == e; }));
                    };
                    drop(_adj[i][u]);
                    drop(_adj[i][v]);
                    _forest_of[e] = -1;
                }

                void apply(EdgeId y, int i, const vector<EdgeId> & pred, const vector<int> & via)
                {
                    // y joins forest i; each predecessor takes the slot its successor vacates
                    EdgeId x = y;
                    int target = i;
                    while (true) {
                        if (_forest_of[x] >= 0)
                            remove(x);
                        insert(x, target);
                        if (pred[x] < 0)
                            break;
                        target = via[x];
                        x = pred[x];
                    }
                }

                auto forest_path(int i, Vertex u, Vertex v) const -> std::optional<vector<EdgeId>>
                {
                    vector<EdgeId> via_edge(_g.n(), -1);
                    vector<bool> seen(_g.n(), false);
                    vector<Vertex> stack{u};
                    seen[u] = true;
                    while (! stack.empty() && ! seen[v]) {
                        Vertex x = stack.back();
                        stack.pop_back();
                        for (auto [y, e] : _adj[i][x])
                            if (! seen[y]) {
                                seen[y] = true;
                                via_edge[y] = e;
                                stack.push_back(y);
                            }
                    }
                    if (! seen[v])
                        return std::nullopt;
                    vector<EdgeId> path;
                    for (Vertex x = v; x != u; x = _g.other_end(via_edge[x], x))
                        path.push_back(via_edge[x]);
                    return path;
                }
        };

        /// The reached set S of a failed augmentation with k forests has
        /// |S| = k * rank(S) + 1, so one of its components is denser than k.
        auto dense_component(const Graph & g, const vector<EdgeId> & reached, int k) -> DensityCertificate
        {
            UnionFind uf(g.n());
            for (auto e : reached)
                uf.unite(g.edge(e).u, g.edge(e).v);
            vector<int> edges(g.n(), 0), vertices(g.n(), 0);
            vector<bool> touched(g.n(), false);
            for (auto e : reached) {
                ++edges[uf.find(g.edge(e).u)];
                touched[g.edge(e).u] = touched[g.edge(e).v] = true;
            }
            for (Vertex v = 0; v < g.n(); ++v)
                if (touched[v])
                    ++vertices[uf.find(v)];
            for (Vertex r = 0; r < g.n(); ++r) {
                if (vertices[r] >= 2 && edges[r] > k * (vertices[r] - 1)) {
                    VertexSet members(g.n());
                    for (Vertex v = 0; v < g.n(); ++v)
                        if (touched[v] && uf.find(v) == r)
                            members.set(v);
                    return certificate_for(g, std::move(members));
                }
            }
            throw std::logic_error("failed augmentation without a dense component");
        }
    }

    auto arboricity(const Graph & g) -> ArboricityResult
    {
        ArboricityResult result;
        if (g.m() == 0)
            return result;

        int k = static_cast<int>((g.m() + g.n() - 2) / (g.n() - 1));
        result.lower_bound = certificate_for(g, VertexSet(g.n()).set());

        ForestPartitioner partitioner(g);
        for (int i = 0; i < k; ++i)
            partitioner.add_forest();

        for (EdgeId e = 0; e < g.m(); ++e) {
            auto failure = partitioner.augment(e);
            if (! failure)
                continue;
            result.lower_bound = dense_component(g, *failure, partitioner.forests());
            partitioner.add_forest();
            partitioner.force(e, partitioner.forests() - 1);
        }

        result.k = partitioner.forests();
        result.decomposition = ForestDecomposition{result.k, partitioner.assignment()};
        return result;
    }

    auto fractional_arboricity_bruteforce(const Graph & g) -> DensityCertificate
    {
        if (g.n() > density_enumeration_limit)
            throw SizeGuardError("density enumeration is limited to " + std::to_string(density_enumeration_limit) + " vertices");
        if (g.n() < 2)
            throw PreconditionError("fractional arboricity needs at least two vertices");

        vector<std::uint32_t> adj(g.n(), 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }

        Density best{-1, 1};
        std::uint32_t best_mask = 0;
        std::uint32_t full = g.n() == 32 ? ~0u : (1u << g.n()) - 1;
        for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
            int size = std::popcount(mask);
            if (size < 2)
                continue;
            int twice = 0;
            for (auto rest = mask; rest; rest &= rest - 1)
                twice += std::popcount(adj[std::countr_zero(rest)] & mask);
            Density d{twice / 2, size - 1};
            if (d > best) {
                best = d;
                best_mask = mask;
            }
        }

        VertexSet members(g.n());
        for (Vertex v = 0; v < g.n(); ++v)
            if (best_mask & (1u << v))
                members.set(v);
        return certificate_for(g, std::move(members));
    }

    auto two_forest_decomposition(const Graph & g) -> ForestDecomposition
    {
        auto arb = arboricity(g);
        if (arb.k > 2)
            throw ArboricityTooLarge("graph does not split into two forests (arboricity "
                    + std::to_string(arb.k) + ")",
                *arb.lower_bound);
        arb.decomposition.forests = 2;
        return arb.decomposition;
    }
}
