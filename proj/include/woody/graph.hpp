#ifndef WOODY_GRAPH_HPP
#define WOODY_GRAPH_HPP

#include <woody/errors.hpp>

#include <boost/dynamic_bitset.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace woody
{
    using Vertex = int;
    using EdgeId = int;

    struct Edge
    {
        Vertex u;
        Vertex v;

        friend auto operator==(const Edge &, const Edge &) -> bool = default;
    };

    /// Immutable simple undirected graph on vertices 0..n-1.
    ///
    /// Edges are stored with u < v and keep the index they were given at
    /// construction. Neighbor lists are sorted, and incident_edges(v)[i] is the
    /// id of the edge joining v and neighbors(v)[i].
    class Graph
    {
        public:
            Graph() = default;

            /// Throws GraphError on loops, duplicate edges, or out-of-range endpoints.
            Graph(int n, std::vector<Edge> edges);

            auto n() const -> int { return _n; }
            auto m() const -> int { return static_cast<int>(_edges.size()); }

            auto edges() const -> std::span<const Edge> { return _edges; }
            auto edge(EdgeId e) const -> const Edge & { return _edges[e]; }

            auto neighbors(Vertex v) const -> std::span<const Vertex> { return _nbrs[v]; }
            auto incident_edges(Vertex v) const -> std::span<const EdgeId> { return _inc[v]; }
            auto degree(Vertex v) const -> int { return static_cast<int>(_nbrs[v].size()); }
            auto max_degree() const -> int;

            auto has_edge(Vertex u, Vertex v) const -> bool { return edge_id(u, v).has_value(); }
            auto edge_id(Vertex u, Vertex v) const -> std::optional<EdgeId>;

            /// The endpoint of e that is not x.
            auto other_end(EdgeId e, Vertex x) const -> Vertex
            {
                return _edges[e].u == x ? _edges[e].v : _edges[e].u;
            }

            friend auto operator==(const Graph & a, const Graph & b) -> bool
            {
                return a._n == b._n && a._edges == b._edges;
            }

        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex>> _nbrs;
            std::vector<std::vector<EdgeId>> _inc;
    };

    using VertexSet = boost::dynamic_bitset<>;

    auto make_vertex_set(int n, std::span<const Vertex> members) -> VertexSet;
    auto vertex_set_members(const VertexSet & s) -> std::vector<Vertex>;

    /// Induced subgraph H = G[members], without copying the parent.
    class VertexSubsetView
    {
        public:
            VertexSubsetView(const Graph & parent, VertexSet members);

            auto parent() const -> const Graph & { return *_parent; }
            auto members() const -> const VertexSet & { return _members; }
            auto vertex_count() const -> int { return static_cast<int>(_members.count()); }
            auto induced_edge_count() const -> int;
            auto induced_edges() const -> std::vector<EdgeId>;

        private:
            const Graph * _parent;
            VertexSet _members;
    };

    // graph6 (McKay). Edges of the parsed graph are ordered as the bits are
    // laid out: column-major over the upper triangle, (0,1), (0,2), (1,2), (0,3), ...
    auto parse_graph6(std::string_view line) -> Graph;
    auto encode_graph6(const Graph & g) -> std::string;

    /// "n m" header followed by m pairs "u v", whitespace separated.
    auto parse_edge_list(std::string_view text) -> Graph;
    auto format_edge_list(const Graph & g) -> std::string;

    /// Length of a shortest cycle; nullopt for forests.
    auto girth(const Graph & g) -> std::optional<int>;

    struct ColoringNumber
    {
        int value = 0;
        /// Every vertex has at most value-1 neighbors earlier in this order.
        std::vector<Vertex> ordering;
    };

    auto coloring_number(const Graph & g) -> ColoringNumber;

    /// Largest number of earlier neighbors of any vertex in the given order.
    auto max_back_degree(const Graph & g, std::span<const Vertex> ordering) -> int;

    auto is_2_independent(const Graph & g, const VertexSet & a) -> bool;
    auto induces_forest(const Graph & g, const VertexSet & f) -> bool;

    auto has_triangle(const Graph & g) -> bool;
    auto find_triangle(const Graph & g) -> std::optional<std::array<Vertex, 3>>;

    /// Necessary condition for planarity: m <= 3n-6, or m <= 2n-4 when triangle-free.
    /// Graphs with fewer than 3 vertices always pass.
    auto euler_planar_sanity(const Graph & g, bool triangle_free) -> bool;

    auto is_forest(const Graph & g) -> bool;
    auto connected_components(const Graph & g) -> std::vector<int>;

    auto relabel(const Graph & g, std::span<const Vertex> perm) -> Graph;

    namespace families
    {
        auto path(int n) -> Graph;
        auto cycle(int n) -> Graph;
        auto complete(int n) -> Graph;
        auto star(int leaves) -> Graph;
        auto complete_bipartite(int a, int b) -> Graph;
        auto petersen() -> Graph;
        auto hypercube(int d) -> Graph;
        /// Cubic graph from an LCF code repeated `repeats` times around a Hamiltonian cycle.
        auto lcf(std::span<const int> code, int repeats) -> Graph;
        auto mcgee() -> Graph;
        /// Replace every edge with a path through `times` new vertices.
        auto subdivide(const Graph & g, int times) -> Graph;
    }
}

#endif
