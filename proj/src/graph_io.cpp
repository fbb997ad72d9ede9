#include "lchoose/graph.hpp"
#include "lchoose/text.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lchoose {

Graph parse_graph(std::string_view text)
{
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<std::int64_t> part_of;
    std::size_t part_lines = 0;
    std::map<Edge, std::size_t> edge_line;
    std::vector<Edge> edges;
    std::size_t last_line = 0;

    auto vertex = [&](const std::string& tok, std::size_t line) -> Vertex {
        auto v = text::parse_uint(tok, line, "vertex");
        if (v < 1 || v > n)
            throw ParseError(line, "vertex " + tok + " out of range 1.." + std::to_string(n));
        return static_cast<Vertex>(v - 1);
    };

    text::for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
        last_line = line;
        if (!have_header) {
            if (tok.size() != 3 || tok[0] != "graph")
                throw ParseError(line, "malformed header, expected 'graph <n> <m>'");
            n = text::parse_uint(tok[1], line, "vertex count");
            m = text::parse_uint(tok[2], line, "edge count");
            part_of.assign(n, -1);
            have_header = true;
            return;
        }
        if (tok[0] == "part") {
            if (tok.size() != 3)
                throw ParseError(line, "expected 'part <v> <i>'");
            if (!edges.empty())
                throw ParseError(line, "part lines must precede edges");
            auto v = vertex(tok[1], line);
            auto i = text::parse_uint(tok[2], line, "part index");
            if (i < 1)
                throw ParseError(line, "part index must be >= 1");
            if (part_of[v] >= 0)
                throw ParseError(line, "vertex " + tok[1] + " assigned to two parts");
            part_of[v] = static_cast<std::int64_t>(i - 1);
            ++part_lines;
        } else if (tok[0] == "e") {
            if (tok.size() != 3)
                throw ParseError(line, "expected 'e <u> <v>'");
            if (part_lines > 0 && part_lines != n)
                throw ParseError(line, "partition does not cover every vertex");
            auto u = vertex(tok[1], line);
            auto v = vertex(tok[2], line);
            if (u == v)
                throw ParseError(line, "loop at vertex " + tok[1]);
            if (part_lines > 0 && part_of[u] == part_of[v])
                throw ParseError(line, "edge " + tok[1] + " " + tok[2] + " joins two vertices of part " +
                                           std::to_string(part_of[u] + 1));
            auto e = Edge::make(u, v);
            if (auto [it, fresh] = edge_line.emplace(e, line); !fresh)
                throw ParseError(line, "duplicate edge " + tok[1] + " " + tok[2] + " (first on line " +
                                           std::to_string(it->second) + ")");
            edges.push_back(e);
        } else {
            throw ParseError(line, "unknown directive '" + tok[0] + "'");
        }
    });

    if (!have_header)
        throw ParseError(1, "missing 'graph <n> <m>' header");
    if (part_lines > 0 && part_lines != n)
        throw ParseError(last_line, "partition does not cover every vertex");
    if (edges.size() != m)
        throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    if (part_lines == 0)
        return Graph(n, std::move(edges));
    std::vector<std::uint32_t> parts(part_of.begin(), part_of.end());
    return Graph(n, std::move(edges), std::move(parts));
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    out << "graph " << g.order() << ' ' << g.size() << '\n';
    if (g.partitioned())
        for (Vertex v = 0; v < g.order(); ++v)
            out << "part " << v + 1 << ' ' << g.part_of(v) + 1 << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path)
{
    return parse_graph(text::read_file(path));
}

void write_graph_file(const std::string& path, const Graph& g, std::string_view header_comment)
{
    std::string body;
    if (!header_comment.empty())
        body += "# " + std::string(header_comment) + '\n';
    body += serialize_graph(g);
    text::write_file(path, body);
}

}  // namespace lchoose
