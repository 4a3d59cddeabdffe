#ifndef WOODY_EXACT_HPP
#define WOODY_EXACT_HPP

#include <woody/coloring.hpp>
#include <woody/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace woody
{
    /// Search limits. Unset fields are unlimited.
    struct Budget
    {
        std::optional<std::uint64_t> nodes;
        std::optional<double> seconds;
    };

    /// Counts search nodes against a Budget, checking the clock every 1024 nodes.
    class BudgetMeter
    {
        public:
            explicit BudgetMeter(const Budget & b);

            /// False once the budget is spent; stays false afterwards.
            auto tick() -> bool;
            auto exhausted() const -> bool { return _exhausted; }
            auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            Budget _budget;
            std::chrono::steady_clock::time_point _start;
            std::uint64_t _nodes = 0;
            bool _exhausted = false;
    };

    /// lower <= value <= upper; exact iff lower == upper was proven. The
    /// certificate always witnesses `upper`.
    template <typename Certificate>
    struct ExactResult
    {
        int lower = 0;
        int upper = 0;
        bool exact = false;
        Certificate certificate;
        std::uint64_t nodes = 0;

        auto value() const -> int { return upper; }
    };

    enum class ZetaPruning
    {
        /// Per-class component labels with undo; rejects as soon as a class
        /// component stops being an induced tree.
        incremental,
        /// Partial colorings are rechecked from scratch at every node.
        scratch,
        /// No pruning; complete colorings are checked with is_strongly_woody.
        leaf_only
    };

    enum class Feasibility
    {
        found,
        infeasible,
        exhausted
    };

    struct FeasibilityResult
    {
        Feasibility status = Feasibility::exhausted;
        EdgeColoring coloring;
        std::uint64_t nodes = 0;
    };

    /// Is there a strongly woody coloring with at most k colors?
    auto strongly_woody_coloring_exists(const Graph & g, int k, const Budget & budget = {},
        ZetaPruning pruning = ZetaPruning::incremental) -> FeasibilityResult;

    /// max(arb, 3 with a triangle, 2 with a cycle, 1 with an edge).
    auto zeta_lower_bound(const Graph & g) -> int;

    /// Strong arboricity by iterative deepening from zeta_lower_bound. The
    /// certificate is normalized (colors first appear in edge-index order).
    auto zeta_exact(const Graph & g, const Budget & budget = {},
        ZetaPruning pruning = ZetaPruning::incremental) -> ExactResult<EdgeColoring>;

    auto acyclic_chromatic_exact(const Graph & g, const Budget & budget = {}) -> ExactResult<VertexColoring>;
    auto chromatic_exact(const Graph & g, const Budget & budget = {}) -> ExactResult<VertexColoring>;
    auto chromatic_index_exact(const Graph & g, const Budget & budget = {}) -> ExactResult<EdgeColoring>;

    struct PartitionSearchResult
    {
        bool found = false;
        /// False when the budget ran out before the search space was covered.
        bool exact = true;
        VertexSet a;
        VertexSet f;
        std::uint64_t nodes = 0;
    };

    /// Searches for V = A + F with G[F] a forest and A 2-independent, on
    /// graphs of girth at least 4.
    auto find_forest_2independent_partition(const Graph & g, const Budget & budget = {}) -> PartitionSearchResult;
}

#endif
