#ifndef WOODY_DECOMPOSE_HPP
#define WOODY_DECOMPOSE_HPP

#include <woody/graph.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace woody
{
    /// Exact non-negative rational num/den, den > 0.
    struct Density
    {
        std::int64_t num = 0;
        std::int64_t den = 1;

        auto ceil() const -> std::int64_t { return (num + den - 1) / den; }
        auto to_double() const -> double { return static_cast<double>(num) / static_cast<double>(den); }

        friend auto operator<=>(const Density & a, const Density & b) -> std::strong_ordering
        {
            return a.num * b.den <=> b.num * a.den;
        }
        friend auto operator==(const Density & a, const Density & b) -> bool
        {
            return a.num * b.den == b.num * a.den;
        }
    };

    /// Vertex set H with |E(G[H])| / (|H| - 1) recorded; |H| >= 2.
    struct DensityCertificate
    {
        VertexSubsetView subgraph;
        Density density;

        /// Recounts the induced edges.
        auto reverifies() const -> bool;
    };

    /// Edge id -> forest index in 0..forests-1.
    struct ForestDecomposition
    {
        int forests = 0;
        std::vector<int> assignment;

        auto is_valid(const Graph & g) const -> bool;
    };

    struct ArboricityResult
    {
        int k = 0;
        ForestDecomposition decomposition;
        /// A subgraph whose density rounds up to k; empty for edgeless graphs.
        std::optional<DensityCertificate> lower_bound;
    };

    /// Minimum number of forests covering E(g), by matroid-partition augmentation.
    auto arboricity(const Graph & g) -> ArboricityResult;

    inline constexpr int density_enumeration_limit = 24;

    /// Maximum of |E(H)| / (|V(H)| - 1) over induced subgraphs with at least two
    /// vertices, by enumeration. Throws SizeGuardError above the limit and
    /// PreconditionError for graphs with fewer than two vertices.
    auto fractional_arboricity_bruteforce(const Graph & g) -> DensityCertificate;

    /// Throws ArboricityTooLarge (carrying a density certificate) if no split into two forests exists.
    auto two_forest_decomposition(const Graph & g) -> ForestDecomposition;

    class ArboricityTooLarge : public PreconditionError
    {
        public:
            ArboricityTooLarge(const std::string & what, DensityCertificate cert) :
                PreconditionError(what),
                certificate(std::move(cert))
            {
            }

            DensityCertificate certificate;
    };
}

#endif
