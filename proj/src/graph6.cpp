#include <woody/graph.hpp>

#include <charconv>
#include <cctype>
#include <set>

using std::string;
using std::string_view;
using std::vector;

namespace woody
{
    namespace
    {
        constexpr int graph6_bias = 63;
        constexpr int graph6_long_marker = 126;

        auto sextet(string_view line, std::size_t pos) -> int
        {
            if (pos >= line.size())
                throw ParseError("graph6 string ends early", pos);
            auto c = static_cast<unsigned char>(line[pos]);
            if (c < graph6_bias || c > graph6_long_marker)
                throw ParseError("graph6 character out of the printable range 63..126", pos);
            return c - graph6_bias;
        }

        auto put_size(string & out, long n) -> void
        {
            if (n <= 62)
                out.push_back(static_cast<char>(n + graph6_bias));
            else if (n <= 258047) {
                out.push_back(static_cast<char>(graph6_long_marker));
                for (int shift = 12; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_bias));
            }
            else {
                out.push_back(static_cast<char>(graph6_long_marker));
                out.push_back(static_cast<char>(graph6_long_marker));
                for (int shift = 30; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_bias));
            }
        }
    }

    auto parse_graph6(string_view line) -> Graph
    {
        if (line.empty())
            throw ParseError("empty graph6 string", 0);

        std::size_t pos = 0;
        long n = 0;
        if (static_cast<unsigned char>(line[0]) != graph6_long_marker) {
            n = sextet(line, 0);
            pos = 1;
        }
        else if (line.size() > 1 && static_cast<unsigned char>(line[1]) == graph6_long_marker) {
            for (std::size_t i = 2; i < 8; ++i) {
                if (i >= line.size())
                    throw ParseError("malformed graph6 length prefix", i);
                n = (n << 6) | sextet(line, i);
            }
            pos = 8;
            if (n <= 258047)
                throw ParseError("graph6 length prefix is not in its shortest form", 0);
        }
        else {
            for (std::size_t i = 1; i < 4; ++i) {
                if (i >= line.size())
                    throw ParseError("malformed graph6 length prefix", i);
                n = (n << 6) | sextet(line, i);
            }
            pos = 4;
            if (n <= 62)
                throw ParseError("graph6 length prefix is not in its shortest form", 0);
        }

        if (n > (1L << 24))
            throw ParseError("graph6 vertex count too large", 0);

        long bits = n * (n - 1) / 2;
        std::size_t data_bytes = static_cast<std::size_t>((bits + 5) / 6);
        if (line.size() != pos + data_bytes)
            throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected "
                    + std::to_string(data_bytes),
                line.size() < pos + data_bytes ? line.size() : pos + data_bytes);

        vector<Edge> edges;
        long k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                std::size_t byte = pos + static_cast<std::size_t>(k / 6);
                int value = sextet(line, byte);
                if (value & (32 >> (k % 6)))
                    edges.push_back({i, j});
            }

        if (bits % 6 != 0) {
            std::size_t last = line.size() - 1;
            int value = sextet(line, last);
            int padding = static_cast<int>(6 - bits % 6);
            if (value & ((1 << padding) - 1))
                throw ParseError("graph6 padding bits are not zero", last);
        }

        return Graph(static_cast<int>(n), std::move(edges));
    }

    auto encode_graph6(const Graph & g) -> string
    {
        string out;
        put_size(out, g.n());
        int acc = 0, filled = 0;
        for (int j = 1; j < g.n(); ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(acc + graph6_bias));
                    acc = filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((acc << (6 - filled)) + graph6_bias));
        return out;
    }

    namespace
    {
        struct Tokenizer
        {
            string_view text;
            std::size_t pos = 0;

            auto next_int(const char * what) -> std::pair<long, std::size_t>
            {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos >= text.size())
                    throw ParseError(string("expected ") + what + ", found end of input", pos);
                long value = 0;
                auto start = pos;
                auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
                if (ec != std::errc() || (ptr != text.data() + text.size() && ! std::isspace(static_cast<unsigned char>(*ptr))))
                    throw ParseError(string("expected ") + what, start);
                pos = ptr - text.data();
                return {value, start};
            }

            auto at_end() -> bool
            {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                    ++pos;
                return pos >= text.size();
            }
        };
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        Tokenizer tok{text};
        auto [n, n_at] = tok.next_int("vertex count");
        auto [m, m_at] = tok.next_int("edge count");
        if (n < 0 || n > (1L << 24))
            throw ParseError("vertex count out of range", n_at);
        if (m < 0)
            throw ParseError("edge count out of range", m_at);

        vector<Edge> edges;
        vector<std::size_t> offsets;
        for (long i = 0; i < m; ++i) {
            auto [u, u_at] = tok.next_int("edge endpoint");
            auto [v, v_at] = tok.next_int("edge endpoint");
            if (u < 0 || u >= n)
                throw ParseError("vertex index " + std::to_string(u) + " out of range", u_at);
            if (v < 0 || v >= n)
                throw ParseError("vertex index " + std::to_string(v) + " out of range", v_at);
            if (u == v)
                throw ParseError("loop at vertex " + std::to_string(u), u_at);
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
            offsets.push_back(u_at);
        }
        if (! tok.at_end())
            throw ParseError("trailing data after " + std::to_string(m) + " edges", tok.pos);

        std::set<std::pair<Vertex, Vertex>> seen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
                throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), offsets[i]);
        }
        return Graph(static_cast<int>(n), std::move(edges));
    }

    auto format_edge_list(const Graph & g) -> string
    {
        string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
        for (auto [u, v] : g.edges())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }
}
