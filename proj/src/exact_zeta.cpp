#include <woody/construct.hpp>
#include <woody/decompose.hpp>
#include <woody/exact.hpp>
#include <woody/union_find.hpp>

#include <algorithm>
#include <numeric>
#include <tuple>

using std::vector;

namespace woody
{
    BudgetMeter::BudgetMeter(const Budget & b) :
        _budget(b),
        _start(std::chrono::steady_clock::now())
    {
    }

    auto BudgetMeter::tick() -> bool
    {
        if (_exhausted)
            return false;
        ++_nodes;
        if (_budget.nodes && _nodes > *_budget.nodes)
            _exhausted = true;
        else if (_budget.seconds && (_nodes & 1023) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - _start;
            if (elapsed.count() > *_budget.seconds)
                _exhausted = true;
        }
        return ! _exhausted;
    }

    namespace
    {
        /// Edge order for the search: decreasing endpoint degree sum; ties go
        /// by lower endpoint, so edges around one vertex stay together.
        auto search_order(const Graph & g) -> vector<EdgeId>
        {
            vector<EdgeId> order(g.m());
            std::iota(order.begin(), order.end(), 0);
            auto key = [&](EdgeId e) {
                auto [u, v] = g.edge(e);
                return std::tuple(-(g.degree(u) + g.degree(v)), u, v);
            };
            std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });
            return order;
        }

        /// Component labels for every color class. The search keeps every
        /// class component an induced tree of G, which is exactly the
        /// condition for a partial coloring to extend without a monochromatic
        /// cycle or broken cycle among its colored edges.
        class ClassComponents
        {
            public:
                ClassComponents(const Graph & g, int k) :
                    _g(g),
                    _label(k, vector<Vertex>(g.n())),
                    _members(k, vector<vector<Vertex>>(g.n()))
                {
                    for (int c = 0; c < k; ++c)
                        for (Vertex v = 0; v < g.n(); ++v) {
                            _label[c][v] = v;
                            _members[c][v].assign(1, v);
                        }
                }

                /// Merges the class-c components of the ends of e, unless some
                /// other graph edge already joins them.
                auto try_join(int c, EdgeId e) -> bool
                {
                    auto [u, v] = _g.edge(e);
                    Vertex a = _label[c][u], b = _label[c][v];
                    if (a == b)
                        return false;
                    if (_members[c][a].size() > _members[c][b].size())
                        std::swap(a, b);

                    auto & label = _label[c];
                    for (auto x : _members[c][a]) {
                        auto nbrs = _g.neighbors(x);
                        auto inc = _g.incident_edges(x);
                        for (std::size_t i = 0; i < nbrs.size(); ++i)
                            if (label[nbrs[i]] == b && inc[i] != e)
                                return false;
                    }

                    auto & small = _members[c][a];
                    auto & big = _members[c][b];
                    for (auto x : small) {
                        label[x] = b;
                        big.push_back(x);
                    }
                    _undo.push_back({c, a, b, static_cast<int>(small.size())});
                    small.clear();
                    return true;
                }

                void undo()
                {
                    auto [c, a, b, count] = _undo.back();
                    _undo.pop_back();
                    auto & small = _members[c][a];
                    auto & big = _members[c][b];
                    for (int i = 0; i < count; ++i) {
                        Vertex x = big.back();
                        big.pop_back();
                        _label[c][x] = a;
                        small.push_back(x);
                    }
                }

            private:
                struct Merge
                {
                    int color;
                    Vertex absorbed;
                    Vertex into;
                    int count;
                };

                const Graph & _g;
                vector<vector<Vertex>> _label;
                vector<vector<vector<Vertex>>> _members;
                vector<Merge> _undo;
        };

        /// Same condition as ClassComponents, recomputed from nothing.
        auto partial_extends(const Graph & g, const vector<Color> & colors, int k) -> bool
        {
            vector<UnionFind> uf(k, UnionFind(g.n()));
            for (EdgeId e = 0; e < g.m(); ++e)
                if (colors[e] >= 0 && ! uf[colors[e]].unite(g.edge(e).u, g.edge(e).v))
                    return false;
            for (EdgeId e = 0; e < g.m(); ++e)
                for (int c = 0; c < k; ++c)
                    if (c != colors[e] && uf[c].connected(g.edge(e).u, g.edge(e).v))
                        return false;
            return true;
        }

        class ZetaSearch
        {
            public:
                ZetaSearch(const Graph & g, int k, BudgetMeter & meter, ZetaPruning pruning) :
                    _g(g),
                    _k(k),
                    _meter(meter),
                    _pruning(pruning),
                    _order(search_order(g)),
                    _colors(g.m(), unassigned),
                    _components(g, pruning == ZetaPruning::incremental ? k : 0)
                {
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
                ZetaPruning _pruning;
                vector<EdgeId> _order;
                vector<Color> _colors;
                ClassComponents _components;

                auto search(std::size_t depth, int used) -> bool
                {
                    if (! _meter.tick())
                        return false;
                    if (depth == _order.size())
                        return _pruning != ZetaPruning::leaf_only || is_strongly_woody(_g, EdgeColoring(_colors)).ok;

                    EdgeId e = _order[depth];
                    int limit = std::min(used + 1, _k);
                    for (int c = 0; c < limit; ++c) {
                        bool accepted = true;
                        if (_pruning == ZetaPruning::incremental)
                            accepted = _components.try_join(c, e);
                        _colors[e] = c;
                        if (_pruning == ZetaPruning::scratch)
                            accepted = partial_extends(_g, _colors, _k);

                        if (accepted && search(depth + 1, std::max(used, c + 1)))
                            return true;

                        if (accepted && _pruning == ZetaPruning::incremental)
                            _components.undo();
                        _colors[e] = unassigned;
                        if (_meter.exhausted())
                            return false;
                    }
                    return false;
                }
        };
    }

    auto strongly_woody_coloring_exists(const Graph & g, int k, const Budget & budget, ZetaPruning pruning)
        -> FeasibilityResult
    {
        BudgetMeter meter(budget);
        FeasibilityResult result;
        if (g.m() == 0) {
            result.status = Feasibility::found;
            return result;
        }
        if (k <= 0) {
            result.status = Feasibility::infeasible;
            return result;
        }
        ZetaSearch search(g, k, meter, pruning);
        result.status = search.run();
        if (result.status == Feasibility::found)
            result.coloring = search.coloring().normalized();
        result.nodes = meter.nodes();
        return result;
    }

    auto zeta_lower_bound(const Graph & g) -> int
    {
        if (g.m() == 0)
            return 0;
        int bound = 1;
        if (has_triangle(g))
            bound = 3;
        else if (! is_forest(g))
            bound = 2;
        return std::max(bound, arboricity(g).k);
    }

    auto zeta_exact(const Graph & g, const Budget & budget, ZetaPruning pruning) -> ExactResult<EdgeColoring>
    {
        ExactResult<EdgeColoring> result;
        if (g.m() == 0) {
            result.exact = true;
            result.certificate = EdgeColoring::uniform(0, 0);
            return result;
        }

        auto fallback = degeneracy_pipeline(g).coloring.normalized();
        result.lower = zeta_lower_bound(g);
        result.upper = fallback.distinct_colors();
        result.certificate = fallback;

        BudgetMeter meter(budget);
        for (int k = result.lower; k < result.upper; ++k) {
            ZetaSearch search(g, k, meter, pruning);
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
            result.lower = k + 1;
        }

        result.lower = result.upper;
        result.exact = true;
        result.nodes = meter.nodes();
        if (! is_strongly_woody(g, result.certificate))
            throw std::logic_error("zeta search produced an invalid certificate");
        return result;
    }
}
