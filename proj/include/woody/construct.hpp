#ifndef WOODY_CONSTRUCT_HPP
#define WOODY_CONSTRUCT_HPP

#include <woody/coloring.hpp>
#include <woody/decompose.hpp>
#include <woody/graph.hpp>

namespace woody
{
    /// Edge uv gets (f(u) + f(v)) mod k. Strongly woody whenever f is an
    /// acyclic vertex coloring. Throws PreconditionError if f leaves Z_k.
    auto derived_coloring(const Graph & g, const VertexColoring & f, int k) -> EdgeColoring;

    /// Forest i is split into colors 2i and 2i+1 by the depth parity of each
    /// edge's lower endpoint, trees rooted at their lowest vertex. No
    /// monochromatic path has three edges.
    auto depth_parity_shading(const Graph & g, const ForestDecomposition & d) -> EdgeColoring;

    /// Two forests, then depth-parity shading: at most 4 colors, strongly
    /// woody. Requires a triangle-free graph of arboricity at most 2.
    auto triangle_free_planar_coloring(const Graph & g) -> EdgeColoring;

    /// Colors are the distinct pairs (a(e), b(e)), numbered by first appearance.
    auto product_coloring(const Graph & g, const EdgeColoring & a, const EdgeColoring & b) -> EdgeColoring;

    /// Greedy along the reverse of minimum-degree peeling; uses at most col(g) colors.
    auto degeneracy_greedy_vertex_coloring(const Graph & g) -> VertexColoring;

    struct ProductPipelineResult
    {
        EdgeColoring coloring;
        int arboricity = 0;
        /// Colors in the proper vertex coloring, 0 when the triangle-free route was taken.
        int vertex_colors = 0;
        bool triangle_free_route = false;
        /// 2 * vertex_colors * arboricity, or 2 * arboricity on the triangle-free route.
        int bound = 0;
    };

    /// Proper vertex coloring (sum-derived) times shaded forest decomposition.
    /// Triangle-free graphs use the shading alone.
    auto product_pipeline(const Graph & g, const VertexColoring & proper) -> ProductPipelineResult;

    /// product_pipeline driven by the degeneracy greedy coloring; at most
    /// 2 * col * arb <= 4 * arb^2 colors.
    auto degeneracy_pipeline(const Graph & g) -> ProductPipelineResult;

    /// Edges inside f get color 0, the star forest between a and f gets color 1.
    /// Requires {a, f} to partition V, f to induce a forest, a to be
    /// 2-independent, and girth at least 4.
    auto partition_coloring(const Graph & g, const VertexSet & a, const VertexSet & f) -> EdgeColoring;
}

#endif
