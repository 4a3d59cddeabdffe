#ifndef WOODY_REPORT_HPP
#define WOODY_REPORT_HPP

#include <woody/coloring.hpp>
#include <woody/decompose.hpp>
#include <woody/graph.hpp>

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace woody
{
    using json = nlohmann::ordered_json;

    enum class GraphFormat
    {
        automatic,
        graph6,
        edge_list
    };

    auto parse_graph_format(const std::string & name) -> GraphFormat;

    /// A single graph from a file. graph6 files contribute their first graph.
    auto read_graph_file(const std::filesystem::path & path, GraphFormat format = GraphFormat::automatic) -> Graph;

    struct CorpusEntry
    {
        int source = 0;
        std::string source_name;
        /// 1-based line number within the source file.
        int line = 0;
        std::string graph6;
        std::optional<Graph> graph;
        std::optional<std::string> error;

        auto id() const -> std::string { return source_name + ":" + std::to_string(line); }
    };

    /// One graph per non-empty line; a leading ">>graph6<<" header is skipped.
    /// Unparseable lines are kept with `error` set.
    auto read_graph6_corpus(const std::filesystem::path & path, int source = 0) -> std::vector<CorpusEntry>;
    auto read_graph6_lines(const std::string & text, const std::string & source_name, int source = 0)
        -> std::vector<CorpusEntry>;

    /// Whitespace-separated integers, one per edge (or vertex) in index order.
    auto parse_color_array(const std::string & text) -> std::vector<Color>;
    auto read_coloring_file(const std::filesystem::path & path) -> std::vector<Color>;
    auto format_color_array(const std::vector<Color> & colors) -> std::string;

    auto witness_to_json(const Graph & g, const BrokenCycleWitness & w) -> json;
    auto witness_from_json(const json & j) -> BrokenCycleWitness;

    auto density_to_json(const DensityCertificate & d) -> json;

    /// key=value lines; '#' starts a comment.
    auto read_config(const std::filesystem::path & path) -> std::map<std::string, std::string>;
    auto parse_config(const std::string & text) -> std::map<std::string, std::string>;
}

#endif
