#ifndef WOODY_COLORING_HPP
#define WOODY_COLORING_HPP

#include <woody/graph.hpp>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace woody
{
    using Color = int;
    inline constexpr Color unassigned = -1;

    namespace detail
    {
        struct ColorArray
        {
            std::vector<Color> colors;

            auto size() const -> int { return static_cast<int>(colors.size()); }
            auto operator[](int i) const -> Color { return colors[i]; }
            auto is_total() const -> bool;
            /// 1 + largest assigned color; 0 if nothing is assigned.
            auto palette_size() const -> int;
            auto distinct_colors() const -> int;
            /// Colors renumbered 0, 1, ... in order of first appearance.
            auto normalized_colors() const -> std::vector<Color>;
            auto is_normalized() const -> bool;
        };
    }

    /// Colors indexed by edge id; entries may be `unassigned` while a search is in progress.
    struct EdgeColoring : detail::ColorArray
    {
        EdgeColoring() = default;
        explicit EdgeColoring(std::vector<Color> c) : detail::ColorArray{std::move(c)} {}
        static auto uniform(int m, Color c) -> EdgeColoring { return EdgeColoring(std::vector<Color>(m, c)); }

        auto normalized() const -> EdgeColoring { return EdgeColoring(normalized_colors()); }

        friend auto operator==(const EdgeColoring & a, const EdgeColoring & b) -> bool { return a.colors == b.colors; }
    };

    /// Colors indexed by vertex.
    struct VertexColoring : detail::ColorArray
    {
        VertexColoring() = default;
        explicit VertexColoring(std::vector<Color> c) : detail::ColorArray{std::move(c)} {}

        auto normalized() const -> VertexColoring { return VertexColoring(normalized_colors()); }

        friend auto operator==(const VertexColoring & a, const VertexColoring & b) -> bool { return a.colors == b.colors; }
    };

    enum class WitnessKind
    {
        monochromatic_cycle,
        monochromatic_broken_cycle
    };

    /// Certificate that a coloring is not (strongly) woody. For a broken cycle,
    /// path_edges runs from one end of closing_edge to the other; for a cycle it
    /// runs once around and closing_edge is empty. vertex_path lists the visited
    /// vertices in order (a cycle repeats its first vertex at the end).
    struct BrokenCycleWitness
    {
        WitnessKind kind = WitnessKind::monochromatic_cycle;
        Color color = 0;
        std::vector<EdgeId> path_edges;
        std::optional<EdgeId> closing_edge;
        std::vector<Vertex> vertex_path;
    };

    struct VerifyResult
    {
        bool ok = true;
        std::optional<BrokenCycleWitness> witness;

        explicit operator bool() const { return ok; }
    };

    /// Checks a witness against the graph and coloring alone.
    auto witness_reverifies(const Graph & g, const EdgeColoring & c, const BrokenCycleWitness & w) -> bool;

    auto is_woody(const Graph & g, const EdgeColoring & c) -> VerifyResult;

    /// Every class is a forest, and no edge uv has u and v in one component of
    /// a class other than its own.
    auto is_strongly_woody(const Graph & g, const EdgeColoring & c) -> VerifyResult;

    inline constexpr int cycle_enumeration_limit = 10;

    /// Calls visit(edges, vertices) once per simple cycle of g; vertices does not repeat the start.
    void for_each_cycle(const Graph & g,
        const std::function<bool(std::span<const EdgeId>, std::span<const Vertex>)> & visit);

    /// Direct check over every cycle and every single-edge deletion. Throws
    /// SizeGuardError above cycle_enumeration_limit vertices.
    auto is_strongly_woody_oracle(const Graph & g, const EdgeColoring & c) -> bool;

    /// Every cycle C carries at least min(|C|, p+1) colors.
    auto is_p_woody(const Graph & g, const EdgeColoring & c, int p, bool allow_large = false) -> bool;

    auto is_proper_vertex(const Graph & g, const VertexColoring & f) -> bool;

    struct AcyclicVertexResult
    {
        bool ok = true;
        bool proper = true;
        /// A cycle on two colors, first vertex repeated at the end.
        std::optional<std::vector<Vertex>> bicolored_cycle;

        explicit operator bool() const { return ok; }
    };

    auto is_acyclic_vertex(const Graph & g, const VertexColoring & f) -> AcyclicVertexResult;

    auto is_proper_edge(const Graph & g, const EdgeColoring & c) -> bool;
}

#endif
