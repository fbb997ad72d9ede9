#include "lchoose/construct.hpp"

#include <map>
#include <sstream>

namespace lchoose {

namespace {

std::string assignment_problem(const ConstructedGraph& G, const ListAssignment& L)
{
    if (auto violation = find_assignment_violation(G.graph, L))
        return violation->describe();

    const auto target = L.lambda();
    bool known = false;
    for (const auto& t : G.params.targets)
        known = known || t == target;
    if (!known)
        return "assignment partition " + target.to_string() + " is not a construction target";

    const auto r = G.r();
    for (Vertex w = 0; w < G.graph.order(); ++w)
        if (L.lists[w] != L.lists[G.vertex(G.block_of(w), 0)])
            return "block of base vertex " + std::to_string(G.block_of(w) + 1) + " is not constant-listed";

    const auto fam = make_list_family(target);
    const auto share = G.params.n / fam.family.size();
    for (std::size_t part = 0; part < G.params.k; ++part) {
        std::map<std::vector<Colour>, std::size_t> uses;
        for (Vertex v = 0; v < G.base.order(); ++v)
            if (G.base.part_of(v) == part)
                ++uses[L.lists[v * r]];
        for (const auto& member : fam.family) {
            auto it = uses.find(member);
            auto count = it == uses.end() ? 0 : it->second;
            if (count != share)
                return "part " + std::to_string(part + 1) + " uses a family list on " + std::to_string(count) +
                       " blocks, expected " + std::to_string(share);
        }
        if (uses.size() != fam.family.size())
            return "part " + std::to_string(part + 1) + " uses a list outside the family";
    }
    return {};
}

}  // namespace

VerificationReport verify_construction(const ConstructedGraph& G, const ListAssignment& L,
                                       const VerifyOptions& options)
{
    VerificationReport report;

    report.girth = girth(G.graph);
    report.girth_ok = report.girth.at_least(G.params.g);

    report.degeneracy_ok = true;
    for (std::size_t part = 0; part < G.params.k; ++part) {
        auto vertices = G.part_vertices(part);
        auto d = degeneracy(G.graph.induced(vertices)).value;
        report.part_degeneracy.push_back(d);
        if (d + 1 > static_cast<std::size_t>(G.params.lambda.part(part)))
            report.degeneracy_ok = false;
    }

    report.assignment_detail = assignment_problem(G, L);
    report.assignment_ok = report.assignment_detail.empty();

    std::map<std::pair<Vertex, Vertex>, std::size_t> between;
    report.cross_edges_ok = true;
    for (const auto& e : G.graph.edges()) {
        auto a = G.block_of(e.u), b = G.block_of(e.v);
        if (a == b)
            continue;
        auto key = std::minmax(a, b);
        if (++between[{key.first, key.second}] > 1 && report.cross_edges_ok) {
            report.cross_edges_ok = false;
            report.crowded_blocks = std::pair{key.first, key.second};
        }
    }

    if (options.colour_check_cap > 0 && G.graph.order() <= options.colour_check_cap && report.assignment_ok) {
        try {
            report.l_colourable = l_colour(G.graph, L, options.colour_check_nodes).has_value();
        } catch (const BudgetExceeded&) {
            report.colour_check_budget_hit = true;
        }
    }
    return report;
}

std::string VerificationReport::to_text() const
{
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream out;
    out << "girth=" << girth.to_string() << '\n';
    out << "girth_ok=" << flag(girth_ok) << '\n';
    out << "part_degeneracy=";
    for (std::size_t i = 0; i < part_degeneracy.size(); ++i)
        out << (i ? "," : "") << part_degeneracy[i];
    out << '\n';
    out << "degeneracy_ok=" << flag(degeneracy_ok) << '\n';
    out << "assignment_ok=" << flag(assignment_ok) << '\n';
    if (!assignment_ok)
        out << "assignment_detail=" << assignment_detail << '\n';
    out << "cross_edges_ok=" << flag(cross_edges_ok) << '\n';
    if (crowded_blocks)
        out << "crowded_blocks=" << crowded_blocks->first + 1 << ',' << crowded_blocks->second + 1 << '\n';
    out << "l_colourable=";
    if (l_colourable)
        out << flag(*l_colourable);
    else
        out << (colour_check_budget_hit ? "budget" : "skipped");
    out << '\n';
    out << "structural_ok=" << flag(structural_ok()) << '\n';
    return out.str();
}

}  // namespace lchoose
