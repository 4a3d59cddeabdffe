#include <woody/construct.hpp>
#include <woody/exact.hpp>
#include <woody/union_find.hpp>

#include <algorithm>
#include <numeric>

using std::vector;

namespace woody
{
    namespace
    {
        auto vertex_order(const Graph & g) -> vector<Vertex>
        {
            vector<Vertex> order(g.n());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
            return order;
        }

        /// Canonical-palette vertex coloring search with a pluggable
        /// acceptance test for the newest assignment.
        template <typename Accept>
        class VertexSearch
        {
            public:
                VertexSearch(const Graph & g, int k, BudgetMeter & meter, Accept accept) :
                    _g(g),
                    _k(k),
                    _meter(meter),
                    _accept(accept),
                    _order(vertex_order(g)),
                    _colors(g.n(), unassigned)
                {
                }

                auto run() -> Feasibility
                {
                    if (search(0, 0))
                        return Feasibility::found;
                    return _meter.exhausted() ? Feasibility::exhausted : Feasibility::infeasible;
                }

                auto coloring() const -> VertexColoring { return VertexColoring(_colors); }

            private:
                const Graph & _g;
                int _k;
                BudgetMeter & _meter;
                Accept _accept;
                vector<Vertex> _order;
                vector<Color> _colors;

                auto search(std::size_t depth, int used) -> bool
                {
                    if (! _meter.tick())
                        return false;
                    if (depth == _order.size())
                        return true;
                    Vertex v = _order[depth];
                    int limit = std::min(used + 1, _k);
                    for (int c = 0; c < limit; ++c) {
                        if (_accept(_g, _colors, v, c)) {
                            _colors[v] = c;
                            if (search(depth + 1, std::max(used, c + 1)))
                                return true;
                            _colors[v] = unassigned;
                        }
                        if (_meter.exhausted())
                            return false;
                    }
                    return false;
                }
        };

        auto proper_at(const Graph & g, const vector<Color> & colors, Vertex v, Color c) -> bool
        {
            for (auto w : g.neighbors(v))
                if (colors[w] == c)
                    return false;
            return true;
        }

        /// Rejects c at v if two b-colored neighbors of v are already joined in
        /// the (c, b)-colored subgraph, which would close a bicolored cycle.
        auto acyclic_at(const Graph & g, const vector<Color> & colors, Vertex v, Color c) -> bool
        {
            if (! proper_at(g, colors, v, c))
                return false;

            vector<int> mark(g.n(), -1);
            vector<Vertex> stack;
            auto nbrs = g.neighbors(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                Vertex y = nbrs[i];
                Color b = colors[y];
                if (b < 0 || mark[y] >= 0)
                    continue;
                // flood the (c, b) component of y, avoiding v
                int tag = static_cast<int>(i);
                mark[y] = tag;
                stack.assign(1, y);
                while (! stack.empty()) {
                    Vertex x = stack.back();
                    stack.pop_back();
                    for (auto z : g.neighbors(x)) {
                        if (z == v || mark[z] == tag)
                            continue;
                        if (colors[z] != c && colors[z] != b)
                            continue;
                        if (colors[z] == b && g.has_edge(z, v))
                            return false;
                        mark[z] = tag;
                        stack.push_back(z);
                    }
                }
            }
            return true;
        }

        template <typename Accept>
        auto vertex_parameter(const Graph & g, int lower, int upper, const VertexColoring & fallback,
            const Budget & budget, Accept accept) -> ExactResult<VertexColoring>
        {
            ExactResult<VertexColoring> result;
            result.lower = lower;
            result.upper = upper;
            result.certificate = fallback;
            BudgetMeter meter(budget);
            for (int k = lower; k < upper; ++k) {
                VertexSearch search(g, k, meter, accept);
                auto status = search.run();
                if (status == Feasibility::exhausted) {
                    result.lower = k;
                    result.nodes = meter.nodes();
                    return result;
                }
                if (status == Feasibility::found) {
                    result.upper = k;
                    result.certificate = search.coloring().normalized();
                    break;
                }
            }
            result.lower = result.upper;
            result.exact = true;
            result.nodes = meter.nodes();
            return result;
        }

        auto trivial_vertex_lower_bound(const Graph & g) -> int
        {
            if (g.n() == 0)
                return 0;
            if (g.m() == 0)
                return 1;
            return has_triangle(g) ? 3 : 2;
        }
    }

    auto chromatic_exact(const Graph & g, const Budget & budget) -> ExactResult<VertexColoring>
    {
        auto greedy = degeneracy_greedy_vertex_coloring(g).normalized();
        auto result = vertex_parameter(g, trivial_vertex_lower_bound(g), greedy.distinct_colors(), greedy, budget, proper_at);
        if (! is_proper_vertex(g, result.certificate))
            throw std::logic_error("chromatic search produced an improper coloring");
        return result;
    }

    auto acyclic_chromatic_exact(const Graph & g, const Budget & budget) -> ExactResult<VertexColoring>
    {
        vector<Color> distinct(g.n());
        std::iota(distinct.begin(), distinct.end(), 0);
        int lower = trivial_vertex_lower_bound(g);
        if (g.m() > 0 && ! is_forest(g))
            lower = std::max(lower, 3);
        auto result = vertex_parameter(g, lower, g.n(), VertexColoring(distinct), budget, acyclic_at);
        if (! is_acyclic_vertex(g, result.certificate))
            throw std::logic_error("acyclic chromatic search produced an invalid coloring");
        return result;
    }

    namespace
    {
        class EdgeColorSearch
        {
            public:
                EdgeColorSearch(const Graph & g, int k, BudgetMeter & meter) :
                    _g(g),
                    _k(k),
                    _meter(meter),
                    _colors(g.m(), unassigned),
                    _taken(static_cast<std::size_t>(g.n()) * k, false)
                {
                    // edges grouped around high-degree vertices first
                    vector<bool> placed(g.m(), false);
                    for (auto v : vertex_order(g))
                        for (auto e : g.incident_edges(v))
                            if (! placed[e]) {
                                placed[e] = true;
                                _order.push_back(e);
                            }
                }

                auto run() -> Feasibility
                {
                    if (search(0, 0))
                        return Feasibility::found;
                    return _meter.exhausted() ? Feasibility::exhausted : Feasibility::infeasible;
                }

                auto coloring() const -> EdgeColoring { return EdgeColoring(_colors); }

            private:
                const Graph & _g;
                int _k;
                BudgetMeter & _meter;
                vector<Color> _colors;
                vector<bool> _taken;
                vector<EdgeId> _order;

                auto search(std::size_t depth, int used) -> bool
                {
                    if (! _meter.tick())
                        return false;
                    if (depth == _order.size())
                        return true;
                    EdgeId e = _order[depth];
                    auto [u, v] = _g.edge(e);
                    int limit = std::min(used + 1, _k);
                    for (int c = 0; c < limit; ++c) {
                        auto tu = static_cast<std::size_t>(u) * _k + c, tv = static_cast<std::size_t>(v) * _k + c;
                        if (_taken[tu] || _taken[tv])
                            continue;
                        _taken[tu] = _taken[tv] = true;
                        _colors[e] = c;
                        if (search(depth + 1, std::max(used, c + 1)))
                            return true;
                        _taken[tu] = _taken[tv] = false;
                        _colors[e] = unassigned;
                        if (_meter.exhausted())
                            return false;
                    }
                    return false;
                }
        };
    }

    auto chromatic_index_exact(const Graph & g, const Budget & budget) -> ExactResult<EdgeColoring>
    {
        ExactResult<EdgeColoring> result;
        if (g.m() == 0) {
            result.exact = true;
            return result;
        }

        // Vizing: the answer is max degree or one more
        int delta = g.max_degree();
        BudgetMeter meter(budget);
        result.lower = delta;
        result.upper = delta + 1;
        for (int k = delta; k <= delta + 1; ++k) {
            EdgeColorSearch search(g, k, meter);
            auto status = search.run();
            if (status == Feasibility::exhausted) {
                result.nodes = meter.nodes();
                return result;
            }
            if (status == Feasibility::found) {
                result.lower = result.upper = k;
                result.certificate = search.coloring().normalized();
                result.exact = true;
                break;
            }
            result.lower = k + 1;
        }
        result.nodes = meter.nodes();
        if (! result.exact || ! is_proper_edge(g, result.certificate))
            throw std::logic_error("edge coloring search failed to certify a Vizing bound");
        return result;
    }

    namespace
    {
        class PartitionSearch
        {
            public:
                PartitionSearch(const Graph & g, BudgetMeter & meter) :
                    _g(g),
                    _meter(meter),
                    _side(g.n(), Side::undecided),
                    _forest(g.n())
                {
                    // breadth-first within each component, so cycles close as late as possible
                    vector<bool> seen(g.n(), false);
                    for (Vertex s = 0; s < g.n(); ++s) {
                        if (seen[s])
                            continue;
                        seen[s] = true;
                        std::size_t head = _order.size();
                        _order.push_back(s);
                        while (head < _order.size()) {
                            Vertex x = _order[head++];
                            for (auto y : g.neighbors(x))
                                if (! seen[y]) {
                                    seen[y] = true;
                                    _order.push_back(y);
                                }
                        }
                    }
                }

                auto run() -> bool { return search(0); }

                auto sides(VertexSet & a, VertexSet & f) const -> void
                {
                    a.resize(_g.n());
                    f.resize(_g.n());
                    for (Vertex v = 0; v < _g.n(); ++v)
                        (_side[v] == Side::a ? a : f).set(v);
                }

            private:
                enum class Side
                {
                    undecided,
                    a,
                    f
                };

                const Graph & _g;
                BudgetMeter & _meter;
                vector<Side> _side;
                RollbackUnionFind _forest;
                vector<Vertex> _order;

                auto a_within_two(Vertex v) const -> bool
                {
                    for (auto w : _g.neighbors(v)) {
                        if (_side[w] == Side::a)
                            return true;
                        for (auto x : _g.neighbors(w))
                            if (x != v && _side[x] == Side::a)
                                return true;
                    }
                    return false;
                }

                auto search(std::size_t depth) -> bool
                {
                    if (! _meter.tick())
                        return false;
                    if (depth == _order.size())
                        return true;
                    Vertex v = _order[depth];

                    auto mark = _forest.checkpoint();
                    bool acyclic = true;
                    for (auto w : _g.neighbors(v))
                        if (_side[w] == Side::f && ! _forest.unite(v, w)) {
                            acyclic = false;
                            break;
                        }
                    if (acyclic) {
                        _side[v] = Side::f;
                        if (search(depth + 1))
                            return true;
                    }
                    _forest.rollback(mark);
                    _side[v] = Side::undecided;
                    if (_meter.exhausted())
                        return false;

                    if (! a_within_two(v)) {
                        _side[v] = Side::a;
                        if (search(depth + 1))
                            return true;
                        _side[v] = Side::undecided;
                    }
                    return false;
                }
        };
    }

    auto find_forest_2independent_partition(const Graph & g, const Budget & budget) -> PartitionSearchResult
    {
        PartitionSearchResult result;
        if (auto gi = girth(g); gi && *gi < 4)
            return result;

        BudgetMeter meter(budget);
        PartitionSearch search(g, meter);
        result.found = search.run();
        result.exact = result.found || ! meter.exhausted();
        result.nodes = meter.nodes();
        if (result.found) {
            search.sides(result.a, result.f);
            if (! induces_forest(g, result.f) || ! is_2_independent(g, result.a))
                throw std::logic_error("partition search produced an invalid partition");
        }
        return result;
    }
}
