#include <woody/report.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace woody
{
    namespace
    {
        auto slurp(const std::filesystem::path & path) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw std::runtime_error("cannot open " + path.string());
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        }

        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        constexpr std::string_view graph6_header = ">>graph6<<";
    }

    auto parse_graph_format(const string & name) -> GraphFormat
    {
        if (name == "auto")
            return GraphFormat::automatic;
        if (name == "g6" || name == "graph6")
            return GraphFormat::graph6;
        if (name == "edges" || name == "edgelist")
            return GraphFormat::edge_list;
        throw std::invalid_argument("unknown graph format '" + name + "'");
    }

    auto read_graph_file(const std::filesystem::path & path, GraphFormat format) -> Graph
    {
        auto text = slurp(path);
        if (format == GraphFormat::automatic) {
            auto body = trim(text);
            bool looks_numeric = ! body.empty() && std::all_of(body.begin(), body.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c));
            });
            // a lone graph6 line can be all digits only if it is a single short token
            bool has_space = body.find_first_of(" \t\n\r") != std::string_view::npos;
            format = looks_numeric && has_space ? GraphFormat::edge_list : GraphFormat::graph6;
        }
        if (format == GraphFormat::edge_list)
            return parse_edge_list(text);

        auto entries = read_graph6_lines(text, path.string());
        if (entries.empty())
            throw ParseError("no graph in " + path.string(), 0);
        if (entries.front().error)
            throw ParseError(*entries.front().error, 0);
        return *entries.front().graph;
    }

    auto read_graph6_lines(const string & text, const string & source_name, int source) -> vector<CorpusEntry>
    {
        vector<CorpusEntry> result;
        std::istringstream in(text);
        string raw;
        int line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            std::string_view line = trim(raw);
            if (line.substr(0, graph6_header.size()) == graph6_header)
                line.remove_prefix(graph6_header.size());
            if (line.empty())
                continue;
            CorpusEntry entry;
            entry.source = source;
            entry.source_name = source_name;
            entry.line = line_no;
            entry.graph6 = string(line);
            try {
                entry.graph = parse_graph6(line);
            }
            catch (const std::exception & e) {
                entry.error = e.what();
            }
            result.push_back(std::move(entry));
        }
        return result;
    }

    auto read_graph6_corpus(const std::filesystem::path & path, int source) -> vector<CorpusEntry>
    {
        return read_graph6_lines(slurp(path), path.filename().string(), source);
    }

    auto parse_color_array(const string & text) -> vector<Color>
    {
        vector<Color> colors;
        std::istringstream in(text);
        string token;
        std::size_t offset = 0;
        while (in >> token) {
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(token, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size() || value < 0 || value > (1L << 30))
                throw ParseError("bad color '" + token + "'", offset);
            colors.push_back(static_cast<Color>(value));
            offset = static_cast<std::size_t>(in.tellg());
        }
        return colors;
    }

    auto read_coloring_file(const std::filesystem::path & path) -> vector<Color>
    {
        return parse_color_array(slurp(path));
    }

    auto format_color_array(const vector<Color> & colors) -> string
    {
        string out;
        for (std::size_t i = 0; i < colors.size(); ++i) {
            if (i)
                out.push_back(' ');
            out += std::to_string(colors[i]);
        }
        out.push_back('\n');
        return out;
    }

    auto witness_to_json(const Graph & g, const BrokenCycleWitness & w) -> json
    {
        json j;
        j["kind"] = w.kind == WitnessKind::monochromatic_cycle ? "monochromatic_cycle" : "monochromatic_broken_cycle";
        j["color"] = w.color;
        j["vertex_path"] = w.vertex_path;
        j["path_edges"] = w.path_edges;
        if (w.closing_edge) {
            j["closing_edge"] = *w.closing_edge;
            j["closing_pair"] = {g.edge(*w.closing_edge).u, g.edge(*w.closing_edge).v};
        }
        else
            j["closing_edge"] = nullptr;
        return j;
    }

    auto witness_from_json(const json & j) -> BrokenCycleWitness
    {
        BrokenCycleWitness w;
        auto kind = j.at("kind").get<string>();
        if (kind == "monochromatic_cycle")
            w.kind = WitnessKind::monochromatic_cycle;
        else if (kind == "monochromatic_broken_cycle")
            w.kind = WitnessKind::monochromatic_broken_cycle;
        else
            throw std::invalid_argument("unknown witness kind '" + kind + "'");
        w.color = j.at("color").get<Color>();
        w.vertex_path = j.at("vertex_path").get<vector<Vertex>>();
        w.path_edges = j.at("path_edges").get<vector<EdgeId>>();
        if (j.contains("closing_edge") && ! j["closing_edge"].is_null())
            w.closing_edge = j["closing_edge"].get<EdgeId>();
        return w;
    }

    auto density_to_json(const DensityCertificate & d) -> json
    {
        return json{{"vertices", vertex_set_members(d.subgraph.members())},
            {"edges", d.density.num},
            {"denominator", d.density.den}};
    }

    auto parse_config(const string & text) -> std::map<string, string>
    {
        std::map<string, string> result;
        std::istringstream in(text);
        string raw;
        std::size_t offset = 0;
        while (std::getline(in, raw)) {
            std::string_view line = raw;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (! line.empty()) {
                auto eq = line.find('=');
                if (eq == std::string_view::npos)
                    throw ParseError("config line without '='", offset);
                auto key = trim(line.substr(0, eq));
                if (key.empty())
                    throw ParseError("config line without a key", offset);
                result[string(key)] = string(trim(line.substr(eq + 1)));
            }
            offset += raw.size() + 1;
        }
        return result;
    }

    auto read_config(const std::filesystem::path & path) -> std::map<string, string>
    {
        return parse_config(slurp(path));
    }
}
