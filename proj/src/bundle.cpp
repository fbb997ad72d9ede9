#include "lchoose/bundle.hpp"
#include "lchoose/text.hpp"

#include <filesystem>
#include <map>
#include <sstream>

namespace lchoose {

namespace fs = std::filesystem;

std::string serialize_params(const ConstructionParams& p)
{
    std::ostringstream out;
    out << "lambda=" << p.lambda.to_csv() << '\n';
    out << "targets=";
    for (std::size_t i = 0; i < p.targets.size(); ++i)
        out << (i ? ";" : "") << p.targets[i].to_csv();
    out << '\n';
    out << "g=" << p.g << '\n';
    out << "epsilon=" << text::format_double(p.epsilon) << '\n';
    out << "n=" << p.n << '\n';
    out << "k=" << p.k << '\n';
    out << "q=" << p.q << '\n';
    out << "m=" << p.m << '\n';
    out << "r=" << p.r << '\n';
    out << "t=" << p.t << '\n';
    out << "seed=" << p.seed << '\n';
    return out.str();
}

ConstructionParams parse_params(std::string_view body)
{
    std::map<std::string, std::pair<std::string, std::size_t>> kv;
    text::for_each_line(body, [&](std::size_t line, const std::vector<std::string>& tok) {
        if (tok.size() != 1)
            throw ParseError(line, "expected key=value");
        auto eq = tok[0].find('=');
        if (eq == std::string::npos)
            throw ParseError(line, "expected key=value");
        kv[tok[0].substr(0, eq)] = {tok[0].substr(eq + 1), line};
    });
    auto get = [&](const std::string& key) -> std::pair<std::string, std::size_t> {
        auto it = kv.find(key);
        if (it == kv.end())
            throw ParseError(0, "params missing key '" + key + "'");
        return it->second;
    };
    auto uint = [&](const std::string& key) {
        auto [v, line] = get(key);
        return text::parse_uint(v, line, key.c_str());
    };

    auto lambda = parse_partition(get("lambda").first);
    std::vector<Partition> targets;
    std::string list = get("targets").first;
    std::size_t start = 0;
    while (true) {
        auto semi = list.find(';', start);
        targets.push_back(parse_partition(list.substr(start, semi == std::string::npos ? semi : semi - start)));
        if (semi == std::string::npos)
            break;
        start = semi + 1;
    }
    auto [eps_text, eps_line] = get("epsilon");
    auto p = ConstructionParams::make(lambda, targets, uint("g"), text::parse_double(eps_text, eps_line, "epsilon"),
                                      uint("n"), uint("r"), uint("seed"));
    if (p.k != uint("k") || p.q != uint("q") || p.m != uint("m") || p.t != uint("t"))
        throw ParseError(0, "derived parameters k, q, m, t disagree with the recorded values");
    return p;
}

std::string serialize_labelling(const Graph& base, const SplitLabelling& f)
{
    std::ostringstream out;
    out << "# r=" << f.r << '\n';
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto e = base.edges()[i];
        auto label = f.labels[i];
        auto at_u = label.low, at_v = label.high;
        if (base.part_of(e.u) > base.part_of(e.v))
            std::swap(at_u, at_v);
        out << "f " << e.u + 1 << ' ' << e.v + 1 << ' ' << at_u + 1 << ' ' << at_v + 1 << '\n';
    }
    return out.str();
}

SplitLabelling parse_labelling(std::string_view body, const Graph& base, std::size_t r)
{
    SplitLabelling f;
    f.r = r;
    f.labels.resize(base.size());
    std::vector<char> seen(base.size(), 0);
    const auto& edges = base.edges();
    text::for_each_line(body, [&](std::size_t line, const std::vector<std::string>& tok) {
        if (tok.size() != 5 || tok[0] != "f")
            throw ParseError(line, "expected 'f <u> <v> <s> <t>'");
        auto u = text::parse_uint(tok[1], line, "vertex"), v = text::parse_uint(tok[2], line, "vertex");
        auto s = text::parse_uint(tok[3], line, "label"), t = text::parse_uint(tok[4], line, "label");
        if (u < 1 || v < 1 || u > base.order() || v > base.order())
            throw ParseError(line, "vertex out of range");
        if (s < 1 || t < 1 || s > r || t > r)
            throw ParseError(line, "label outside [r]");
        auto e = Edge::make(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e)
            throw ParseError(line, "labelled pair is not a base edge");
        auto index = static_cast<std::size_t>(it - edges.begin());
        if (seen[index]++)
            throw ParseError(line, "edge labelled twice");
        auto at_u = static_cast<std::uint32_t>(u < v ? s : t) - 1;
        auto at_v = static_cast<std::uint32_t>(u < v ? t : s) - 1;
        if (base.part_of(e.u) > base.part_of(e.v))
            std::swap(at_u, at_v);
        f.labels[index] = {at_u, at_v};
    });
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw ParseError(0, "base edge " + std::to_string(edges[i].u + 1) + " " + std::to_string(edges[i].v + 1) +
                                    " has no label");
    return f;
}

std::string assignment_file_name(std::size_t index)
{
    return index == 0 ? "assignment.txt" : "assignment_" + std::to_string(index + 1) + ".txt";
}

std::string pipeline_report_text(const PipelineResult& result)
{
    std::ostringstream out;
    out << "sampled_edges=" << result.sampled_edges << '\n';
    out << "deleted_edges=" << result.deleted_edges << '\n';
    out << "vertices=" << result.graph.graph.order() << '\n';
    out << "edges=" << result.graph.graph.size() << '\n';
    for (std::size_t i = 0; i < result.reports.size(); ++i) {
        out << "[target " << result.graph.params.targets[i].to_csv() << "]\n";
        out << result.reports[i].to_text();
    }
    out << "[feasibility]\n" << result.feasibility.to_text();
    return out.str();
}

void write_bundle(const std::string& dir, const PipelineResult& result)
{
    fs::create_directories(dir);
    const auto& G = result.graph;
    auto path = [&](const std::string& name) { return (fs::path(dir) / name).string(); };
    text::write_file(path("params.txt"), serialize_params(G.params));
    text::write_file(path("base.graph"), serialize_graph(G.base));
    text::write_file(path("labelling.txt"), serialize_labelling(G.base, G.labelling));
    text::write_file(path("G.graph"), serialize_graph(G.graph));
    for (std::size_t i = 0; i < result.assignments.size(); ++i)
        text::write_file(path(assignment_file_name(i)), serialize_assignment(result.assignments[i]));
    text::write_file(path("report.txt"), pipeline_report_text(result));
}

Bundle read_bundle(const std::string& dir)
{
    auto path = [&](const std::string& name) { return (fs::path(dir) / name).string(); };
    Bundle b;
    auto& G = b.graph;
    G.params = parse_params(text::read_file(path("params.txt")));
    G.base = read_graph_file(path("base.graph"));
    G.labelling = parse_labelling(text::read_file(path("labelling.txt")), G.base, G.params.r);
    G.graph = read_graph_file(path("G.graph"));
    if (G.graph.order() != G.base.order() * G.params.r)
        throw std::runtime_error("G.graph has " + std::to_string(G.graph.order()) + " vertices, expected " +
                                 std::to_string(G.base.order() * G.params.r));
    if (!G.base.partitioned() || G.base.num_parts() != G.params.k)
        throw std::runtime_error("base.graph is not partitioned into k parts");

    // The gadget of part i is whatever sits on the first block of that part.
    for (std::size_t part = 0; part < G.params.k; ++part) {
        std::vector<Vertex> block;
        for (Vertex v = 0; v < G.base.order() && block.empty(); ++v)
            if (G.base.part_of(v) == part)
                for (std::size_t s = 0; s < G.params.r; ++s)
                    block.push_back(G.vertex(v, s));
        G.gadgets.push_back({G.graph.induced(block), G.params.lambda.part(part), G.params.g});
    }
    b.rebuild_matches = build_graph(G.params, G.base, G.labelling, G.gadgets).graph == G.graph;

    for (std::size_t i = 0; i < G.params.targets.size(); ++i)
        b.assignments.push_back(parse_assignment(text::read_file(path(assignment_file_name(i)))));
    return b;
}

}  // namespace lchoose
